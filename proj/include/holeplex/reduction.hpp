#pragma once

#include <string>

#include "holeplex/formula.hpp"
#include "holeplex/graph.hpp"

namespace holeplex {

// Label scheme for the reduction graph. Variable gadget i carries c{i}.1..4,
// t{i}.1..4, f{i}.1..4; clause gadget j carries d{j}.1..4, r{j}, fz{j}.1..3.
namespace labels {
std::string c(int i, int k);
std::string t(int i, int k);
std::string f(int i, int k);
std::string d(int j, int k);
std::string r(int j);
std::string fz(int j, int k);
}  // namespace labels

// Bienstock construction for a 3SAT instance: a graph where the formula is
// satisfiable exactly when an induced odd cycle of length >= 5 passes through
// the prescribed node u. 12n + 8m + 3 nodes, 19n + 16m + 3 edges.
struct ReductionGraph {
  LabeledGraph graph;
  NodeId u = 0;
  NodeId w = 0;
  NodeId v = 0;
  int variable_count = 0;
  int clause_count = 0;

  NodeId node_of(std::string_view label) const;  // throws std::out_of_range
};

ReductionGraph build_reduction(const CnfFormula& formula);

}  // namespace holeplex
