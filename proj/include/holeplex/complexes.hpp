#pragma once

#include <cstddef>
#include <vector>

#include "holeplex/graph.hpp"
#include "holeplex/holes.hpp"

namespace holeplex {

enum class ItemKind { Hole, Fragment, TwoPath };

const char* to_string(ItemKind kind);

struct ComplexItem {
  ItemKind kind = ItemKind::Hole;
  std::vector<NodeId> sequence;  // cycle or path order
  std::vector<NodeId> nodes;     // sorted unique
  bool closed = false;
};

struct HoleComplex {
  std::vector<ComplexItem> items;
  std::vector<NodeId> node_set;  // sorted unique union of item nodes
};

// Pure holes become Hole items, open fragments Fragment items, two-paths
// TwoPath items, in that order. Strict mode applies the length >= 2 filter to
// fragments.
std::vector<ComplexItem> collect_items(const HarvestResult& harvest, bool strict_fragments);

// Two node sets link when their intersection contains a non-adjacent pair.
bool share_nonadjacent_pair(const std::vector<NodeId>& a_sorted,
                            const std::vector<NodeId>& b_sorted, const LabeledGraph& g);

bool mergeable(const ComplexItem& a, const ComplexItem& b, const LabeledGraph& g);
bool mergeable(const HoleComplex& complex, const ComplexItem& item, const LabeledGraph& g);

// Greedy fixed point: each complex keeps absorbing any remaining item that
// links to its accumulated node set until none does. Item partition;
// deterministic for a fixed item order.
std::vector<HoleComplex> assemble_complexes(std::vector<ComplexItem> items,
                                            const LabeledGraph& g);

// Brute-force reference: transitive closure of the pairwise item-to-item merge
// relation. Kept separate because linking against an accumulated node set can
// be strictly coarser; tests compare the two.
std::vector<HoleComplex> pairwise_closure_complexes(std::vector<ComplexItem> items,
                                                    const LabeledGraph& g);

// The unique complex whose node set contains x, or nullptr. A node in two
// complexes is an invariant breach and throws std::logic_error.
const HoleComplex* complex_containing(const std::vector<HoleComplex>& complexes, NodeId x);

}  // namespace holeplex
