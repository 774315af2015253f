#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "holeplex/graph.hpp"

namespace holeplex {

// Chordless cycle of length >= 4, stored in canonical rotation.
struct Hole {
  std::vector<NodeId> cycle;

  friend bool operator==(const Hole&, const Hole&) = default;
};

// Simple path (or full cycle when closed) whose consecutive pairs are
// original, non-Fill edges. Open paths are oriented front < back.
struct PathFragment {
  std::vector<NodeId> nodes;
  bool closed = false;

  std::size_t edge_count() const { return closed ? nodes.size() : nodes.size() - 1; }
  // Single-edge fragments are kept but flagged; strict assembly drops them.
  bool is_short() const { return edge_count() < 2; }

  friend bool operator==(const PathFragment&, const PathFragment&) = default;
};

struct HarvestedHole {
  Hole hole;
  // True when every cycle edge existed in the caller's graph. Non-pure holes
  // use Fill edges and contribute open fragments instead of a hole item.
  bool pure = false;
};

struct HarvestResult {
  std::vector<HarvestedHole> holes;     // detection order
  std::vector<PathFragment> fragments;  // stripped from non-pure holes, detection order
  std::vector<PathFragment> two_paths;  // empty unless filled by harvest_with_two_paths
  std::size_t fill_edges_added = 0;
};

enum class RootOrder { Ascending, Descending };

// Shortest hole through the first eligible root, roots scanned in the given
// order; ties broken toward the lexicographically smallest node sequence.
// Returns the canonical form.
std::optional<Hole> find_hole(const LabeledGraph& g, RootOrder order = RootOrder::Ascending);

// Completes the hole's node set to a clique with Fill edges and returns the
// added pairs. Errors when h is not currently a hole of g.
std::vector<std::pair<NodeId, NodeId>> fill_hole(LabeledGraph& g, const Hole& h);

// Splits h into maximal runs of edges present in `original`. A hole with no
// Fill edge comes back as one closed fragment; a hole of only Fill edges
// yields nothing.
std::vector<PathFragment> strip_fill(const Hole& h, const LabeledGraph& original);

// Repeats find/record/fill on a private copy until no hole remains; the
// caller's graph is untouched. Iterations are bounded by V(V-1)/2 and every
// recorded cycle is re-validated as chordless at detection time.
HarvestResult harvest_holes(const LabeledGraph& g, RootOrder order = RootOrder::Ascending);

// Paths a-b-c with {a,c} non-adjacent and both end degrees > 2 (middle degree
// unconstrained). One entry per endpoint pair + middle, sorted canonically.
std::vector<PathFragment> find_two_paths(const LabeledGraph& g);

HarvestResult harvest_with_two_paths(const LabeledGraph& g,
                                     RootOrder order = RootOrder::Ascending);

}  // namespace holeplex
