#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace holeplex {

// Dense index assigned in insertion order; doubles as the canonical node
// ordering for every deterministic search in the project.
using NodeId = std::uint32_t;

enum class EdgeColor { Blue, Red, Fill };

const char* to_string(EdgeColor color);
std::optional<EdgeColor> edge_color_from_string(std::string_view name);

// Undirected, simple, with unique node labels and colored edges. Adjacency is
// color-blind; color is metadata carried per edge.
class LabeledGraph {
 public:
  NodeId add_node(std::string label);
  void add_edge(NodeId a, NodeId b, EdgeColor color);

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& label(NodeId v) const;
  std::optional<NodeId> find_node(std::string_view label) const;

  // ascending by NodeId
  const std::vector<NodeId>& neighbors(NodeId v) const;
  std::size_t degree(NodeId v) const { return neighbors(v).size(); }

  bool are_adjacent(NodeId a, NodeId b) const;
  std::optional<EdgeColor> edge_color(NodeId a, NodeId b) const;
  bool has_fill_edges() const;

  // (min, max) pairs in ascending order
  const std::map<std::pair<NodeId, NodeId>, EdgeColor>& edges() const { return edges_; }

  bool operator==(const LabeledGraph& other) const {
    return labels_ == other.labels_ && edges_ == other.edges_;
  }

 private:
  void check_node(NodeId v) const;

  std::vector<std::string> labels_;
  std::map<std::string, NodeId, std::less<>> index_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::map<std::pair<NodeId, NodeId>, EdgeColor> edges_;
};

// True iff seq is a cycle of the graph with no chord. Throws on fewer than
// four nodes, a duplicate node, or an unknown id.
bool is_chordless_cycle(const LabeledGraph& g, std::span<const NodeId> seq);

// Canonical rotation: smallest node first, oriented toward its smaller
// neighbor on the cycle. All stored cycles use this form.
std::vector<NodeId> canonical_cycle(std::span<const NodeId> seq);

// One line per node and per edge. Blue -> color=blue, Red -> color=red with
// penwidth=2, Fill -> color=green. Node names are labels.
std::string export_dot(const LabeledGraph& g);

// {"nodes":[{"id":..,"label":..}],"edges":[{"a":..,"b":..,"color":..}]}
// Nodes in insertion order (id must equal array position), edges written
// sorted by (min id, max id); any edge order is accepted on read.
std::string graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const std::string& text);

}  // namespace holeplex
