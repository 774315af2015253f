#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "holeplex/decide.hpp"
#include "holeplex/formula.hpp"
#include "holeplex/holes.hpp"
#include "holeplex/reduction.hpp"

namespace holeplex {

inline constexpr std::uint64_t kDefaultOracleBudget = 50'000'000;

enum class OddHoleStatus { Found, NoneExists, Timeout };

const char* to_string(OddHoleStatus status);

struct OracleOutcome {
  OddHoleStatus status = OddHoleStatus::NoneExists;
  std::vector<NodeId> cycle;  // canonical, nonempty iff Found
  std::uint64_t nodes_explored = 0;
  // In-memory diagnostic only; never serialized, outputs stay byte-stable.
  std::chrono::duration<double> elapsed{0};
};

// Exhaustive DFS over induced paths rooted at x: every pushed node is
// adjacent to the path head and non-adjacent to all earlier path nodes, with
// x exempted for the closing node. Reports the first odd chordless cycle of
// length >= 5 through x in neighbor-ascending order, NoneExists after full
// exhaustion, or Timeout once `budget` node expansions are spent. Found
// cycles are re-verified before being returned.
OracleOutcome find_odd_hole_through(const LabeledGraph& g, NodeId x,
                                    std::uint64_t budget = kDefaultOracleBudget);

enum class BranchVerdict { TrueBranch, FalseBranch, ViolationBoth, ViolationNeither };

const char* to_string(BranchVerdict verdict);

// For each variable, an induced odd cycle through u must traverse exactly one
// of the two blue branch pairs: c{i}.1-t{i}.1-c{i}.3 with
// c{i}.2-t{i}.2-t{i}.3-t{i}.4-c{i}.4, or the f versions. Verifies L first and
// throws std::invalid_argument when it is not an odd hole through u.
std::vector<BranchVerdict> check_proposition1(const Hole& L, const ReductionGraph& rg);

// Raised when SAT brute force and the odd-hole search resolve to different
// answers: a bug in the reduction or a search, never a tolerable outcome.
class EquivalenceViolation : public std::runtime_error {
 public:
  EquivalenceViolation(const std::string& message, std::string artifact_json)
      : std::runtime_error(message), artifacts(std::move(artifact_json)) {}

  // DIMACS text + graph JSON + offending cycle, one JSON document.
  std::string artifacts;
};

struct ValidationRecord {
  CnfFormula formula;
  bool sat_truth = false;
  std::optional<Assignment> sat_witness;
  OracleOutcome odd_hole;
  DecisionReport claimed;
  bool oracle_resolved = false;  // odd_hole.status != Timeout
  bool claimed_agrees = false;   // claimed.claimed_satisfiable == sat_truth
  int prop1_violations = 0;
  // Bundle captured when the claimed verdict disagrees with ground truth.
  std::optional<std::string> counterexample_dimacs;
  std::optional<std::string> counterexample_graph_json;
  std::vector<NodeId> counterexample_complex_nodes;
};

// Ground truth by brute force (variable_count <= 10), odd-hole search on the
// reduction, decision procedure run, equivalence asserted whenever the search
// resolves. Timeout leaves the equivalence unresolved without an assertion.
ValidationRecord cross_validate(const CnfFormula& formula,
                                std::uint64_t budget = kDefaultOracleBudget,
                                const DecideOptions& options = {});

std::string record_to_jsonl(const ValidationRecord& record);

struct BatchConfig {
  std::vector<std::pair<int, int>> nm_grid = {{3, 4}};  // instance t uses grid[t % size]
  int instances = 1;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultOracleBudget;
  int jobs = 1;
  DecideOptions decide;
};

struct BatchSummary {
  int instances = 0;
  int resolved = 0;
  int equivalence_confirmed = 0;
  int claimed_agree = 0;
  int prop1_violations = 0;

  std::string to_text() const;
};

// Writes one record per line in instance order regardless of jobs.
BatchSummary run_validation_batch(const BatchConfig& config, std::ostream& jsonl_out);

}  // namespace holeplex
