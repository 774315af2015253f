#include "holeplex/holes.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace holeplex {

namespace {

// A hole through root r is r plus an induced path between two non-adjacent
// neighbors a, b of r that avoids the rest of N[r]. Any shortest a-b path in
// that restricted graph is induced, so BFS is enough.
struct AdjMatrix {
  explicit AdjMatrix(const LabeledGraph& g) : n(g.node_count()), bits(n * n, 0) {
    for (NodeId a = 0; a < n; ++a)
      for (NodeId b : g.neighbors(a)) bits[a * n + b] = 1;
  }
  bool at(NodeId a, NodeId b) const { return bits[a * n + b] != 0; }

  std::size_t n;
  std::vector<char> bits;
};

// Shortest path src -> dst inside `allowed`; among equal lengths the
// lexicographically smallest node sequence. Empty when unreachable.
std::vector<NodeId> lex_shortest_path(const LabeledGraph& g, NodeId src, NodeId dst,
                                      const std::vector<char>& allowed) {
  std::vector<int> dist(g.node_count(), -1);
  std::queue<NodeId> queue;
  dist[dst] = 0;
  queue.push(dst);
  while (!queue.empty()) {
    const NodeId cur = queue.front();
    queue.pop();
    for (NodeId nb : g.neighbors(cur)) {
      if (!allowed[nb] || dist[nb] >= 0) continue;
      dist[nb] = dist[cur] + 1;
      queue.push(nb);
    }
  }
  if (dist[src] < 0) return {};
  std::vector<NodeId> path{src};
  NodeId cur = src;
  while (cur != dst) {
    for (NodeId nb : g.neighbors(cur)) {
      if (allowed[nb] && dist[nb] == dist[cur] - 1) {
        path.push_back(nb);
        cur = nb;
        break;
      }
    }
  }
  return path;
}

}  // namespace

std::optional<Hole> find_hole(const LabeledGraph& g, RootOrder order) {
  const std::size_t n = g.node_count();
  if (n < 4) return std::nullopt;
  const AdjMatrix adj(g);
  std::vector<char> allowed(n, 0);

  std::vector<NodeId> roots(n);
  std::iota(roots.begin(), roots.end(), NodeId{0});
  if (order == RootOrder::Descending) std::reverse(roots.begin(), roots.end());

  for (const NodeId root : roots) {
    const auto& nb = g.neighbors(root);
    if (nb.size() < 2) continue;

    std::size_t best_len = std::numeric_limits<std::size_t>::max();
    std::vector<NodeId> best_path;
    for (std::size_t i = 0; i < nb.size() && best_len > 4; ++i) {
      for (std::size_t j = i + 1; j < nb.size() && best_len > 4; ++j) {
        const NodeId a = nb[i];
        const NodeId b = nb[j];
        if (adj.at(a, b)) continue;
        std::fill(allowed.begin(), allowed.end(), 1);
        allowed[root] = 0;
        for (NodeId t : nb) allowed[t] = 0;
        allowed[a] = 1;
        allowed[b] = 1;
        auto path = lex_shortest_path(g, a, b, allowed);
        if (path.empty()) continue;
        const std::size_t len = path.size() + 1;
        if (len < best_len) {
          best_len = len;
          best_path = std::move(path);
        }
      }
    }
    if (!best_path.empty()) {
      std::vector<NodeId> cycle;
      cycle.reserve(best_path.size() + 1);
      cycle.push_back(root);
      cycle.insert(cycle.end(), best_path.begin(), best_path.end());
      return Hole{canonical_cycle(cycle)};
    }
  }
  return std::nullopt;
}

std::vector<std::pair<NodeId, NodeId>> fill_hole(LabeledGraph& g, const Hole& h) {
  if (!is_chordless_cycle(g, h.cycle))
    throw std::invalid_argument("fill_hole: sequence is not currently a hole of the graph");
  const std::size_t k = h.cycle.size();
  std::vector<std::pair<NodeId, NodeId>> added;
  for (std::size_t i = 0; i + 2 < k; ++i)
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      NodeId a = h.cycle[i];
      NodeId b = h.cycle[j];
      if (a > b) std::swap(a, b);
      g.add_edge(a, b, EdgeColor::Fill);
      added.emplace_back(a, b);
    }
  std::sort(added.begin(), added.end());
  return added;
}

std::vector<PathFragment> strip_fill(const Hole& h, const LabeledGraph& original) {
  const std::size_t k = h.cycle.size();
  std::vector<char> kept(k, 0);
  std::size_t kept_count = 0;
  for (std::size_t i = 0; i < k; ++i) {
    kept[i] = original.are_adjacent(h.cycle[i], h.cycle[(i + 1) % k]) ? 1 : 0;
    kept_count += kept[i];
  }
  if (kept_count == k) return {PathFragment{canonical_cycle(h.cycle), true}};
  if (kept_count == 0) return {};

  std::vector<PathFragment> fragments;
  for (std::size_t start = 0; start < k; ++start) {
    if (!kept[start] || kept[(start + k - 1) % k]) continue;
    std::size_t len = 0;
    while (kept[(start + len) % k]) ++len;
    std::vector<NodeId> nodes;
    nodes.reserve(len + 1);
    for (std::size_t t = 0; t <= len; ++t) nodes.push_back(h.cycle[(start + t) % k]);
    if (nodes.front() > nodes.back()) std::reverse(nodes.begin(), nodes.end());
    fragments.push_back(PathFragment{std::move(nodes), false});
  }
  return fragments;
}

HarvestResult harvest_holes(const LabeledGraph& g, RootOrder order) {
  if (g.has_fill_edges())
    throw std::invalid_argument("harvest_holes: graph already contains fill edges");
  const std::size_t v = g.node_count();
  const std::size_t cap = v * (v - 1) / 2;

  LabeledGraph work = g;
  HarvestResult result;
  std::size_t iterations = 0;
  while (auto hole = find_hole(work, order)) {
    if (++iterations > cap)
      throw std::logic_error("harvest_holes: iteration bound exceeded");
    if (!is_chordless_cycle(work, hole->cycle))
      throw std::logic_error("harvest_holes: detected cycle failed chordless re-check");
    auto pieces = strip_fill(*hole, g);
    const bool pure = pieces.size() == 1 && pieces.front().closed;
    if (!pure)
      for (auto& piece : pieces) result.fragments.push_back(std::move(piece));
    result.holes.push_back(HarvestedHole{std::move(*hole), pure});
    result.fill_edges_added += fill_hole(work, result.holes.back().hole).size();
  }
  return result;
}

std::vector<PathFragment> find_two_paths(const LabeledGraph& g) {
  std::vector<PathFragment> out;
  for (NodeId middle = 0; middle < g.node_count(); ++middle) {
    const auto& nb = g.neighbors(middle);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const NodeId a = nb[i];
        const NodeId c = nb[j];
        if (g.are_adjacent(a, c)) continue;
        if (g.degree(a) <= 2 || g.degree(c) <= 2) continue;
        out.push_back(PathFragment{{a, middle, c}, false});
      }
  }
  std::sort(out.begin(), out.end(), [](const PathFragment& x, const PathFragment& y) {
    return x.nodes < y.nodes;
  });
  return out;
}

HarvestResult harvest_with_two_paths(const LabeledGraph& g, RootOrder order) {
  HarvestResult result = harvest_holes(g, order);
  result.two_paths = find_two_paths(g);
  return result;
}

}  // namespace holeplex
