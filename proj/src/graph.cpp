#include "holeplex/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace holeplex {

const char* to_string(EdgeColor color) {
  switch (color) {
    case EdgeColor::Blue: return "blue";
    case EdgeColor::Red: return "red";
    case EdgeColor::Fill: return "fill";
  }
  return "?";
}

std::optional<EdgeColor> edge_color_from_string(std::string_view name) {
  if (name == "blue") return EdgeColor::Blue;
  if (name == "red") return EdgeColor::Red;
  if (name == "fill") return EdgeColor::Fill;
  return std::nullopt;
}

NodeId LabeledGraph::add_node(std::string label) {
  if (index_.contains(label))
    throw std::invalid_argument("add_node: duplicate label '" + label + "'");
  const NodeId id = static_cast<NodeId>(labels_.size());
  index_.emplace(label, id);
  labels_.push_back(std::move(label));
  adjacency_.emplace_back();
  return id;
}

void LabeledGraph::add_edge(NodeId a, NodeId b, EdgeColor color) {
  check_node(a);
  check_node(b);
  if (a == b) throw std::invalid_argument("add_edge: self-loop on '" + labels_[a] + "'");
  if (a > b) std::swap(a, b);
  if (edges_.contains({a, b}))
    throw std::invalid_argument("add_edge: parallel edge '" + labels_[a] + "' -- '" +
                                labels_[b] + "'");
  edges_.emplace(std::make_pair(a, b), color);
  auto& na = adjacency_[a];
  na.insert(std::lower_bound(na.begin(), na.end(), b), b);
  auto& nb = adjacency_[b];
  nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
}

const std::string& LabeledGraph::label(NodeId v) const {
  check_node(v);
  return labels_[v];
}

std::optional<NodeId> LabeledGraph::find_node(std::string_view label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<NodeId>& LabeledGraph::neighbors(NodeId v) const {
  check_node(v);
  return adjacency_[v];
}

bool LabeledGraph::are_adjacent(NodeId a, NodeId b) const {
  check_node(a);
  check_node(b);
  const auto& na = adjacency_[a];
  return std::binary_search(na.begin(), na.end(), b);
}

std::optional<EdgeColor> LabeledGraph::edge_color(NodeId a, NodeId b) const {
  check_node(a);
  check_node(b);
  if (a > b) std::swap(a, b);
  const auto it = edges_.find({a, b});
  if (it == edges_.end()) return std::nullopt;
  return it->second;
}

bool LabeledGraph::has_fill_edges() const {
  for (const auto& [pair, color] : edges_)
    if (color == EdgeColor::Fill) return true;
  return false;
}

void LabeledGraph::check_node(NodeId v) const {
  if (v >= labels_.size())
    throw std::invalid_argument("unknown node id " + std::to_string(v));
}

bool is_chordless_cycle(const LabeledGraph& g, std::span<const NodeId> seq) {
  const std::size_t k = seq.size();
  if (k < 4) throw std::invalid_argument("is_chordless_cycle: fewer than 4 nodes");
  std::vector<NodeId> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("is_chordless_cycle: duplicate node in sequence");
  for (std::size_t i = 0; i < k; ++i)
    if (!g.are_adjacent(seq[i], seq[(i + 1) % k])) return false;
  for (std::size_t i = 0; i + 2 < k; ++i)
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (g.are_adjacent(seq[i], seq[j])) return false;
    }
  return true;
}

std::vector<NodeId> canonical_cycle(std::span<const NodeId> seq) {
  const std::size_t k = seq.size();
  if (k == 0) return {};
  const std::size_t pos =
      std::min_element(seq.begin(), seq.end()) - seq.begin();
  const NodeId next = seq[(pos + 1) % k];
  const NodeId prev = seq[(pos + k - 1) % k];
  std::vector<NodeId> out;
  out.reserve(k);
  if (next <= prev)
    for (std::size_t t = 0; t < k; ++t) out.push_back(seq[(pos + t) % k]);
  else
    for (std::size_t t = 0; t < k; ++t) out.push_back(seq[(pos + k - t) % k]);
  return out;
}

namespace {

std::string dot_escape(const std::string& label) {
  std::string out;
  out.reserve(label.size());
  for (char ch : label) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

const char* dot_attrs(EdgeColor color) {
  switch (color) {
    case EdgeColor::Blue: return "[color=blue]";
    case EdgeColor::Red: return "[color=red, penwidth=2]";
    case EdgeColor::Fill: return "[color=green]";
  }
  return "";
}

}  // namespace

std::string export_dot(const LabeledGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (NodeId v = 0; v < g.node_count(); ++v)
    out << "  \"" << dot_escape(g.label(v)) << "\";\n";
  for (const auto& [pair, color] : g.edges())
    out << "  \"" << dot_escape(g.label(pair.first)) << "\" -- \""
        << dot_escape(g.label(pair.second)) << "\" " << dot_attrs(color) << ";\n";
  out << "}\n";
  return out.str();
}

std::string graph_to_json(const LabeledGraph& g) {
  nlohmann::json doc;
  doc["nodes"] = nlohmann::json::array();
  for (NodeId v = 0; v < g.node_count(); ++v)
    doc["nodes"].push_back({{"id", v}, {"label", g.label(v)}});
  doc["edges"] = nlohmann::json::array();
  for (const auto& [pair, color] : g.edges())
    doc["edges"].push_back(
        {{"a", pair.first}, {"b", pair.second}, {"color", to_string(color)}});
  return doc.dump(2) + "\n";
}

LabeledGraph graph_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed graph json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges") ||
      !doc["nodes"].is_array() || !doc["edges"].is_array())
    throw std::runtime_error("malformed graph json: expected nodes and edges arrays");

  LabeledGraph g;
  try {
    for (const auto& node : doc["nodes"]) {
      const auto id = node.at("id").get<std::uint64_t>();
      if (id != g.node_count())
        throw std::runtime_error("node id " + std::to_string(id) +
                                 " does not match its position " +
                                 std::to_string(g.node_count()));
      g.add_node(node.at("label").get<std::string>());
    }
    for (const auto& edge : doc["edges"]) {
      const auto raw = edge.at("color").get<std::string>();
      const auto color = edge_color_from_string(raw);
      if (!color) throw std::runtime_error("unknown edge color '" + raw + "'");
      g.add_edge(edge.at("a").get<NodeId>(), edge.at("b").get<NodeId>(), *color);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed graph json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("malformed graph json: ") + e.what());
  }
  return g;
}

}  // namespace holeplex
