#include "holeplex/complexes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace holeplex {

const char* to_string(ItemKind kind) {
  switch (kind) {
    case ItemKind::Hole: return "hole";
    case ItemKind::Fragment: return "fragment";
    case ItemKind::TwoPath: return "two_path";
  }
  return "?";
}

namespace {

std::vector<NodeId> sorted_unique(const std::vector<NodeId>& seq) {
  std::vector<NodeId> out(seq);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ComplexItem make_item(ItemKind kind, std::vector<NodeId> sequence, bool closed) {
  ComplexItem item;
  item.kind = kind;
  item.nodes = sorted_unique(sequence);
  item.sequence = std::move(sequence);
  item.closed = closed;
  return item;
}

void merge_into(std::vector<NodeId>& node_set, const std::vector<NodeId>& more) {
  std::vector<NodeId> merged;
  merged.reserve(node_set.size() + more.size());
  std::set_union(node_set.begin(), node_set.end(), more.begin(), more.end(),
                 std::back_inserter(merged));
  node_set = std::move(merged);
}

}  // namespace

std::vector<ComplexItem> collect_items(const HarvestResult& harvest, bool strict_fragments) {
  std::vector<ComplexItem> items;
  for (const auto& harvested : harvest.holes)
    if (harvested.pure)
      items.push_back(make_item(ItemKind::Hole, harvested.hole.cycle, true));
  for (const auto& fragment : harvest.fragments) {
    if (strict_fragments && fragment.is_short()) continue;
    items.push_back(make_item(ItemKind::Fragment, fragment.nodes, fragment.closed));
  }
  for (const auto& two_path : harvest.two_paths)
    items.push_back(make_item(ItemKind::TwoPath, two_path.nodes, false));
  return items;
}

bool share_nonadjacent_pair(const std::vector<NodeId>& a_sorted,
                            const std::vector<NodeId>& b_sorted, const LabeledGraph& g) {
  std::vector<NodeId> shared;
  std::set_intersection(a_sorted.begin(), a_sorted.end(), b_sorted.begin(), b_sorted.end(),
                        std::back_inserter(shared));
  if (shared.size() < 2) return false;
  for (std::size_t i = 0; i + 1 < shared.size(); ++i)
    for (std::size_t j = i + 1; j < shared.size(); ++j)
      if (!g.are_adjacent(shared[i], shared[j])) return true;
  return false;
}

bool mergeable(const ComplexItem& a, const ComplexItem& b, const LabeledGraph& g) {
  return share_nonadjacent_pair(a.nodes, b.nodes, g);
}

bool mergeable(const HoleComplex& complex, const ComplexItem& item, const LabeledGraph& g) {
  return share_nonadjacent_pair(complex.node_set, item.nodes, g);
}

std::vector<HoleComplex> assemble_complexes(std::vector<ComplexItem> items,
                                            const LabeledGraph& g) {
  std::vector<HoleComplex> complexes;
  std::vector<char> used(items.size(), 0);
  for (std::size_t seed = 0; seed < items.size(); ++seed) {
    if (used[seed]) continue;
    used[seed] = 1;
    HoleComplex complex;
    complex.node_set = items[seed].nodes;
    complex.items.push_back(std::move(items[seed]));
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t t = seed + 1; t < items.size(); ++t) {
        if (used[t]) continue;
        if (!share_nonadjacent_pair(complex.node_set, items[t].nodes, g)) continue;
        used[t] = 1;
        merge_into(complex.node_set, items[t].nodes);
        complex.items.push_back(std::move(items[t]));
        grew = true;
      }
    }
    complexes.push_back(std::move(complex));
  }
  return complexes;
}

std::vector<HoleComplex> pairwise_closure_complexes(std::vector<ComplexItem> items,
                                                    const LabeledGraph& g) {
  const std::size_t n = items.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (mergeable(items[i], items[j], g)) {
        const auto a = find(i);
        const auto b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }

  std::vector<HoleComplex> complexes;
  std::vector<std::size_t> slot(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    const auto root = find(i);
    if (slot[root] == SIZE_MAX) {
      slot[root] = complexes.size();
      complexes.emplace_back();
    }
    auto& complex = complexes[slot[root]];
    merge_into(complex.node_set, items[i].nodes);
    complex.items.push_back(std::move(items[i]));
  }
  return complexes;
}

const HoleComplex* complex_containing(const std::vector<HoleComplex>& complexes, NodeId x) {
  const HoleComplex* found = nullptr;
  for (const auto& complex : complexes) {
    if (!std::binary_search(complex.node_set.begin(), complex.node_set.end(), x)) continue;
    if (found)
      throw std::logic_error("complex_containing: node " + std::to_string(x) +
                             " lies in two complexes");
    found = &complex;
  }
  return found;
}

}  // namespace holeplex
