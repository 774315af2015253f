#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "holeplex/complexes.hpp"
#include "holeplex/formula.hpp"
#include "holeplex/holes.hpp"
#include "holeplex/reduction.hpp"

namespace holeplex {

struct VarFinding {
  bool true_found = false;
  bool false_found = false;
};

struct DecisionReport {
  std::vector<VarFinding> per_var;
  bool claimed_satisfiable = false;
  // true / false when exactly one side was found, nullopt otherwise
  std::vector<std::optional<bool>> candidate;
  std::size_t complex_node_count = 0;
};

struct DecideOptions {
  bool strict_fragments = false;
  RootOrder root_order = RootOrder::Ascending;
};

// The eight labels whose joint membership in u's complex marks variable i as
// routable through its t side (resp. f side). The two sets share only the
// four c labels.
std::array<std::string, 8> true_set_labels(int variable);
std::array<std::string, 8> false_set_labels(int variable);

struct DecidePipeline {
  ReductionGraph reduction;
  HarvestResult harvest;
  std::vector<HoleComplex> complexes;
  std::optional<std::size_t> u_complex_index;
  DecisionReport report;
};

// build -> harvest (+ two-paths) -> assemble -> test literal sets against the
// node set of the complex containing u. No complex containing u claims
// unsatisfiable. This is the procedure under empirical test; its verdict is a
// claim, not ground truth.
DecidePipeline run_decide_pipeline(const CnfFormula& formula, const DecideOptions& options = {});
DecisionReport decide_3sat(const CnfFormula& formula, const DecideOptions& options = {});

// Report assembly rule, exposed for direct testing of the no-complex case.
DecisionReport report_from_findings(std::vector<VarFinding> per_var,
                                    std::size_t complex_node_count);

std::vector<std::optional<bool>> extract_assignment(const DecisionReport& report);

std::string report_to_json(const DecisionReport& report);

}  // namespace holeplex
