#include "holeplex/reduction.hpp"

#include <stdexcept>

namespace holeplex {

namespace labels {

namespace {
std::string pair_label(char prefix, int i, int k) {
  std::string out(1, prefix);
  out += std::to_string(i);
  out += '.';
  out += std::to_string(k);
  return out;
}
}  // namespace

std::string c(int i, int k) { return pair_label('c', i, k); }
std::string t(int i, int k) { return pair_label('t', i, k); }
std::string f(int i, int k) { return pair_label('f', i, k); }
std::string d(int j, int k) { return pair_label('d', j, k); }
std::string r(int j) { return "r" + std::to_string(j); }
std::string fz(int j, int k) { return "fz" + std::to_string(j) + "." + std::to_string(k); }

}  // namespace labels

NodeId ReductionGraph::node_of(std::string_view label) const {
  const auto id = graph.find_node(label);
  if (!id) throw std::out_of_range("node_of: no node labeled '" + std::string(label) + "'");
  return *id;
}

ReductionGraph build_reduction(const CnfFormula& formula) {
  const int n = formula.variable_count;
  const int m = static_cast<int>(formula.clauses.size());
  if (n < 1 || m < 1)
    throw std::invalid_argument("build_reduction: formula needs at least one variable and clause");
  for (const auto& clause : formula.clauses)
    for (const auto& lit : clause.literals)
      if (lit.variable < 1 || lit.variable > n)
        throw std::invalid_argument("build_reduction: literal variable out of range");

  ReductionGraph rg;
  rg.variable_count = n;
  rg.clause_count = m;
  auto& g = rg.graph;

  rg.u = g.add_node("u");
  rg.w = g.add_node("w");
  rg.v = g.add_node("v");
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= 4; ++k) g.add_node(labels::c(i, k));
    for (int k = 1; k <= 4; ++k) g.add_node(labels::t(i, k));
    for (int k = 1; k <= 4; ++k) g.add_node(labels::f(i, k));
  }
  for (int j = 1; j <= m; ++j) {
    for (int k = 1; k <= 4; ++k) g.add_node(labels::d(j, k));
    g.add_node(labels::r(j));
    for (int k = 1; k <= 3; ++k) g.add_node(labels::fz(j, k));
  }

  const auto id = [&](const std::string& label) { return rg.node_of(label); };
  const auto blue = [&](const std::string& a, const std::string& b) {
    g.add_edge(id(a), id(b), EdgeColor::Blue);
  };
  const auto red = [&](const std::string& a, const std::string& b) {
    g.add_edge(id(a), id(b), EdgeColor::Red);
  };

  for (int i = 1; i <= n; ++i) {
    // four-cycle: c1 - t1 - c3 - f1 - c1
    blue(labels::c(i, 1), labels::t(i, 1));
    blue(labels::t(i, 1), labels::c(i, 3));
    blue(labels::c(i, 3), labels::f(i, 1));
    blue(labels::f(i, 1), labels::c(i, 1));
    // eight-cycle: c2 - t2 - t3 - t4 - c4 - f4 - f3 - f2 - c2
    blue(labels::c(i, 2), labels::t(i, 2));
    blue(labels::t(i, 2), labels::t(i, 3));
    blue(labels::t(i, 3), labels::t(i, 4));
    blue(labels::t(i, 4), labels::c(i, 4));
    blue(labels::c(i, 4), labels::f(i, 4));
    blue(labels::f(i, 4), labels::f(i, 3));
    blue(labels::f(i, 3), labels::f(i, 2));
    blue(labels::f(i, 2), labels::c(i, 2));
    // gadget constraints keep the two sides consistent: an induced cycle that
    // takes t1 on the short side cannot take f2 or f3 on the long side
    red(labels::f(i, 2), labels::t(i, 1));
    red(labels::t(i, 1), labels::f(i, 3));
    red(labels::f(i, 3), labels::t(i, 3));
    red(labels::t(i, 3), labels::f(i, 1));
    red(labels::f(i, 1), labels::t(i, 2));
  }

  for (int j = 1; j <= m; ++j) {
    blue(labels::d(j, 1), labels::r(j));
    blue(labels::r(j), labels::d(j, 3));
    blue(labels::d(j, 4), labels::fz(j, 3));
    blue(labels::fz(j, 3), labels::d(j, 2));
    blue(labels::d(j, 2), labels::fz(j, 2));
    blue(labels::fz(j, 2), labels::d(j, 4));
    blue(labels::d(j, 4), labels::fz(j, 1));
    blue(labels::fz(j, 1), labels::d(j, 2));
  }

  blue("u", "w");
  blue("u", labels::c(1, 2));
  blue("w", labels::c(1, 1));
  for (int i = 1; i < n; ++i) {
    blue(labels::c(i, 3), labels::c(i + 1, 1));
    blue(labels::c(i, 4), labels::c(i + 1, 2));
  }
  blue(labels::c(n, 3), labels::d(1, 1));
  blue(labels::c(n, 4), labels::d(1, 2));
  for (int j = 1; j < m; ++j) {
    blue(labels::d(j, 3), labels::d(j + 1, 1));
    blue(labels::d(j, 4), labels::d(j + 1, 2));
  }
  blue(labels::d(m, 3), "v");
  blue(labels::d(m, 4), "v");

  // Literal slot k of clause j blocks the branch that falsifies it: a positive
  // literal wires fz{j}.k against the f side, a negated one against the t
  // side, so fz{j}.k stays usable exactly when the routed assignment
  // satisfies the literal.
  for (int j = 1; j <= m; ++j) {
    const auto& clause = formula.clauses[j - 1];
    for (int k = 1; k <= 3; ++k) {
      const Literal lit = clause.literals[k - 1];
      if (lit.negated) {
        red(labels::t(lit.variable, 1), labels::fz(j, k));
        red(labels::t(lit.variable, 3), labels::fz(j, k));
      } else {
        red(labels::f(lit.variable, 1), labels::fz(j, k));
        red(labels::f(lit.variable, 3), labels::fz(j, k));
      }
    }
  }

  return rg;
}

}  // namespace holeplex
