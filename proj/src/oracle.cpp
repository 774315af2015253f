#include "holeplex/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "json.hpp"

namespace holeplex {

const char* to_string(OddHoleStatus status) {
  switch (status) {
    case OddHoleStatus::Found: return "found";
    case OddHoleStatus::NoneExists: return "none";
    case OddHoleStatus::Timeout: return "timeout";
  }
  return "?";
}

const char* to_string(BranchVerdict verdict) {
  switch (verdict) {
    case BranchVerdict::TrueBranch: return "true_branch";
    case BranchVerdict::FalseBranch: return "false_branch";
    case BranchVerdict::ViolationBoth: return "violation_both";
    case BranchVerdict::ViolationNeither: return "violation_neither";
  }
  return "?";
}

namespace {

struct OddHoleSearch {
  OddHoleSearch(const LabeledGraph& graph, NodeId origin_node, std::uint64_t budget_limit)
      : g(graph),
        n(graph.node_count()),
        adjacency(n * n, 0),
        origin(origin_node),
        budget(budget_limit),
        in_path(n, 0) {
    for (NodeId a = 0; a < n; ++a)
      for (NodeId b : g.neighbors(a)) adjacency[a * n + b] = 1;
    path.reserve(n);
    path.push_back(origin);
    in_path[origin] = 1;
  }

  bool adjacent(NodeId a, NodeId b) const { return adjacency[a * n + b] != 0; }

  // Returns true to unwind, either with `found` set or on timeout.
  bool extend() {
    const NodeId head = path.back();
    const bool first = path.size() == 1;
    for (NodeId next : g.neighbors(head)) {
      if (in_path[next]) continue;
      bool blocked = false;
      for (std::size_t t = 1; t + 1 < path.size(); ++t)
        if (adjacent(next, path[t])) {
          blocked = true;
          break;
        }
      if (blocked) continue;
      if (!first && adjacent(next, origin)) {
        // closing edge: cycle is the current path plus `next`
        const std::size_t len = path.size() + 1;
        if (len >= 5 && len % 2 == 1) {
          found = path;
          found.push_back(next);
          return true;
        }
        continue;
      }
      if (++expansions > budget) {
        timed_out = true;
        return true;
      }
      path.push_back(next);
      in_path[next] = 1;
      if (extend()) return true;
      in_path[next] = 0;
      path.pop_back();
    }
    return false;
  }

  const LabeledGraph& g;
  std::size_t n;
  std::vector<char> adjacency;
  NodeId origin;
  std::uint64_t budget;
  std::uint64_t expansions = 0;
  bool timed_out = false;
  std::vector<NodeId> path;
  std::vector<char> in_path;
  std::vector<NodeId> found;
};

}  // namespace

OracleOutcome find_odd_hole_through(const LabeledGraph& g, NodeId x, std::uint64_t budget) {
  if (x >= g.node_count())
    throw std::invalid_argument("find_odd_hole_through: unknown node id");
  if (budget == 0)
    throw std::invalid_argument("find_odd_hole_through: budget must be positive");

  const auto start = std::chrono::steady_clock::now();
  OddHoleSearch search(g, x, budget);
  search.extend();

  OracleOutcome outcome;
  outcome.nodes_explored = search.expansions;
  outcome.elapsed = std::chrono::steady_clock::now() - start;
  if (!search.found.empty()) {
    if (search.found.size() < 5 || search.found.size() % 2 == 0 ||
        !is_chordless_cycle(g, search.found) ||
        std::find(search.found.begin(), search.found.end(), x) == search.found.end())
      throw std::logic_error("find_odd_hole_through: candidate cycle failed re-verification");
    outcome.status = OddHoleStatus::Found;
    outcome.cycle = canonical_cycle(search.found);
  } else if (search.timed_out) {
    outcome.status = OddHoleStatus::Timeout;
  } else {
    outcome.status = OddHoleStatus::NoneExists;
  }
  return outcome;
}

namespace {

bool contains_subpath(const std::vector<NodeId>& cycle, const std::vector<NodeId>& seq) {
  const int k = static_cast<int>(cycle.size());
  const int len = static_cast<int>(seq.size());
  if (len > k) return false;
  for (int start = 0; start < k; ++start)
    for (const int dir : {1, -1}) {
      bool match = true;
      for (int t = 0; t < len && match; ++t) {
        const int idx = ((start + dir * t) % k + k) % k;
        if (cycle[idx] != seq[t]) match = false;
      }
      if (match) return true;
    }
  return false;
}

std::vector<NodeId> to_ids(const ReductionGraph& rg, const std::array<std::string, 8>& labels,
                           std::size_t from, std::size_t count) {
  std::vector<NodeId> ids;
  ids.reserve(count);
  for (std::size_t t = 0; t < count; ++t) ids.push_back(rg.node_of(labels[from + t]));
  return ids;
}

}  // namespace

std::vector<BranchVerdict> check_proposition1(const Hole& L, const ReductionGraph& rg) {
  if (L.cycle.size() < 5 || L.cycle.size() % 2 == 0 ||
      !is_chordless_cycle(rg.graph, L.cycle) ||
      std::find(L.cycle.begin(), L.cycle.end(), rg.u) == L.cycle.end())
    throw std::invalid_argument("check_proposition1: L is not an induced odd cycle through u");

  std::vector<BranchVerdict> verdicts;
  verdicts.reserve(rg.variable_count);
  for (int i = 1; i <= rg.variable_count; ++i) {
    // label sets list the short branch first (3 labels), then the long one (5)
    const auto t_labels = true_set_labels(i);
    const auto f_labels = false_set_labels(i);
    const bool t_branch = contains_subpath(L.cycle, to_ids(rg, t_labels, 0, 3)) &&
                          contains_subpath(L.cycle, to_ids(rg, t_labels, 3, 5));
    const bool f_branch = contains_subpath(L.cycle, to_ids(rg, f_labels, 0, 3)) &&
                          contains_subpath(L.cycle, to_ids(rg, f_labels, 3, 5));
    if (t_branch && f_branch)
      verdicts.push_back(BranchVerdict::ViolationBoth);
    else if (t_branch)
      verdicts.push_back(BranchVerdict::TrueBranch);
    else if (f_branch)
      verdicts.push_back(BranchVerdict::FalseBranch);
    else
      verdicts.push_back(BranchVerdict::ViolationNeither);
  }
  return verdicts;
}

namespace {

nlohmann::json formula_json(const CnfFormula& formula) {
  nlohmann::json clauses = nlohmann::json::array();
  for (const auto& clause : formula.clauses) {
    nlohmann::json literals = nlohmann::json::array();
    for (const auto& lit : clause.literals)
      literals.push_back(lit.negated ? -lit.variable : lit.variable);
    clauses.push_back(literals);
  }
  return {{"n", formula.variable_count},
          {"m", formula.clauses.size()},
          {"clauses", clauses}};
}

std::string equivalence_artifacts(const CnfFormula& formula, const LabeledGraph& graph,
                                  const OracleOutcome& outcome, bool sat_truth) {
  nlohmann::json doc;
  doc["dimacs"] = serialize_dimacs(formula);
  doc["graph"] = nlohmann::json::parse(graph_to_json(graph));
  doc["sat"] = sat_truth;
  doc["oracle_status"] = to_string(outcome.status);
  doc["cycle"] = outcome.cycle;
  return doc.dump();
}

}  // namespace

ValidationRecord cross_validate(const CnfFormula& formula, std::uint64_t budget,
                                const DecideOptions& options) {
  if (formula.variable_count > 10)
    throw std::invalid_argument("cross_validate: brute force capped at 10 variables");

  ValidationRecord record;
  record.formula = formula;
  record.sat_witness = brute_force_sat(formula);
  record.sat_truth = record.sat_witness.has_value();

  DecidePipeline pipeline = run_decide_pipeline(formula, options);
  record.claimed = pipeline.report;
  record.odd_hole = find_odd_hole_through(pipeline.reduction.graph, pipeline.reduction.u, budget);
  record.oracle_resolved = record.odd_hole.status != OddHoleStatus::Timeout;

  if (record.oracle_resolved) {
    const bool hole_truth = record.odd_hole.status == OddHoleStatus::Found;
    if (hole_truth != record.sat_truth)
      throw EquivalenceViolation(
          "satisfiability and odd-hole existence disagree on the reduction",
          equivalence_artifacts(formula, pipeline.reduction.graph, record.odd_hole,
                                record.sat_truth));
  }
  if (record.odd_hole.status == OddHoleStatus::Found) {
    const auto verdicts =
        check_proposition1(Hole{record.odd_hole.cycle}, pipeline.reduction);
    for (const auto verdict : verdicts)
      if (verdict == BranchVerdict::ViolationBoth ||
          verdict == BranchVerdict::ViolationNeither)
        ++record.prop1_violations;
  }

  record.claimed_agrees = record.claimed.claimed_satisfiable == record.sat_truth;
  if (!record.claimed_agrees) {
    record.counterexample_dimacs = serialize_dimacs(formula);
    record.counterexample_graph_json = graph_to_json(pipeline.reduction.graph);
    if (pipeline.u_complex_index)
      record.counterexample_complex_nodes =
          pipeline.complexes[*pipeline.u_complex_index].node_set;
  }
  return record;
}

std::string record_to_jsonl(const ValidationRecord& record) {
  nlohmann::json doc;
  doc["formula"] = formula_json(record.formula);
  doc["sat"] = record.sat_truth;
  if (record.sat_witness) {
    nlohmann::json witness = nlohmann::json::array();
    for (const bool bit : *record.sat_witness) witness.push_back(bit);
    doc["witness"] = witness;
  }
  doc["oracle"] = {{"status", to_string(record.odd_hole.status)},
                   {"expansions", record.odd_hole.nodes_explored}};
  if (record.odd_hole.status == OddHoleStatus::Found)
    doc["oracle"]["cycle"] = record.odd_hole.cycle;

  nlohmann::json per_var = nlohmann::json::array();
  for (const auto& finding : record.claimed.per_var)
    per_var.push_back({{"t", finding.true_found}, {"f", finding.false_found}});
  nlohmann::json candidate = nlohmann::json::array();
  for (const auto& value : record.claimed.candidate) {
    if (value)
      candidate.push_back(*value);
    else
      candidate.push_back(nullptr);
  }
  doc["claimed"] = {{"per_var", per_var},
                    {"claimed_sat", record.claimed.claimed_satisfiable},
                    {"candidate", candidate},
                    {"complex_nodes", record.claimed.complex_node_count}};
  doc["agreement"] = {{"equivalence", record.oracle_resolved ? "confirmed" : "unresolved"},
                      {"claimed", record.claimed_agrees}};
  doc["prop1_violations"] = record.prop1_violations;
  if (!record.claimed_agrees) {
    doc["counterexample"] = {
        {"dimacs", record.counterexample_dimacs.value_or("")},
        {"graph", nlohmann::json::parse(record.counterexample_graph_json.value_or("{}"))},
        {"complex_nodes", record.counterexample_complex_nodes}};
  }
  return doc.dump() + "\n";
}

std::string BatchSummary::to_text() const {
  const auto pct = [](int part, int whole) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", whole == 0 ? 0.0 : 100.0 * part / whole);
    return std::string(buf);
  };
  std::string out;
  out += "instances:            " + std::to_string(instances) + "\n";
  out += "oracle resolved:      " + std::to_string(resolved) + " (" +
         pct(resolved, instances) + "%)\n";
  out += "equivalence:          " + std::to_string(equivalence_confirmed) + "/" +
         std::to_string(resolved) + " confirmed among resolved\n";
  out += "claimed agreement:    " + std::to_string(claimed_agree) + "/" +
         std::to_string(instances) + " (" + pct(claimed_agree, instances) + "%)\n";
  out += "prop1 violations:     " + std::to_string(prop1_violations) + "\n";
  return out;
}

BatchSummary run_validation_batch(const BatchConfig& config, std::ostream& jsonl_out) {
  if (config.instances < 1)
    throw std::invalid_argument("run_validation_batch: need at least one instance");
  if (config.nm_grid.empty())
    throw std::invalid_argument("run_validation_batch: empty (n, m) grid");

  std::vector<CnfFormula> formulas;
  formulas.reserve(config.instances);
  for (int t = 0; t < config.instances; ++t) {
    const auto [n, m] = config.nm_grid[t % config.nm_grid.size()];
    formulas.push_back(random_3sat(n, m, config.seed + static_cast<std::uint64_t>(t)));
  }

  std::vector<ValidationRecord> records(formulas.size());
  std::vector<std::exception_ptr> errors(formulas.size());
  const int jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    for (std::size_t t = 0; t < formulas.size(); ++t) {
      try {
        records[t] = cross_validate(formulas[t], config.budget, config.decide);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  } else {
    std::mutex next_mutex;
    std::size_t next = 0;
    const auto worker = [&] {
      for (;;) {
        std::size_t t;
        {
          std::lock_guard lock(next_mutex);
          if (next >= formulas.size()) return;
          t = next++;
        }
        try {
          records[t] = cross_validate(formulas[t], config.budget, config.decide);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (int k = 0; k < jobs; ++k) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }
  for (const auto& error : errors)
    if (error) std::rethrow_exception(error);

  BatchSummary summary;
  for (const auto& record : records) {
    ++summary.instances;
    if (record.oracle_resolved) {
      ++summary.resolved;
      ++summary.equivalence_confirmed;  // disagreement would have thrown
    }
    if (record.claimed_agrees) ++summary.claimed_agree;
    summary.prop1_violations += record.prop1_violations;
    jsonl_out << record_to_jsonl(record);
  }
  return summary;
}

}  // namespace holeplex
