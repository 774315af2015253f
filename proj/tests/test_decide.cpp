#include "doctest.h"

#include "holeplex/decide.hpp"
#include "test_util.hpp"

#include "json.hpp"

using namespace holeplex;

TEST_CASE("route label sets cover the expected gadget nodes") {
  const auto t2 = true_set_labels(2);
  const auto f2 = false_set_labels(2);
  const std::array<std::string, 8> expect_t{"c2.1", "t2.1", "c2.3", "c2.2",
                                            "t2.2", "t2.3", "t2.4", "c2.4"};
  const std::array<std::string, 8> expect_f{"c2.1", "f2.1", "c2.3", "c2.2",
                                            "f2.2", "f2.3", "f2.4", "c2.4"};
  CHECK(t2 == expect_t);
  CHECK(f2 == expect_f);
  // the two sets overlap exactly on the four shared corner labels
  std::vector<std::string> shared;
  for (const auto& s : t2)
    if (std::find(f2.begin(), f2.end(), s) != f2.end()) shared.push_back(s);
  std::sort(shared.begin(), shared.end());
  CHECK(shared == std::vector<std::string>{"c2.1", "c2.2", "c2.3", "c2.4"});
}

TEST_CASE("report assembly marks a variable with no route as blocking") {
  SUBCASE("all variables covered on some side") {
    auto report = report_from_findings(
        {VarFinding{true, false}, VarFinding{false, true}, VarFinding{true, true}}, 40);
    CHECK(report.claimed_satisfiable);
    REQUIRE(report.candidate.size() == 3);
    CHECK(report.candidate[0] == std::optional<bool>{true});
    CHECK(report.candidate[1] == std::optional<bool>{false});
    CHECK(report.candidate[2] == std::nullopt);  // both sides: ambiguous
    CHECK(report.complex_node_count == 40);
  }
  SUBCASE("one uncovered variable flips the claim") {
    auto report = report_from_findings({VarFinding{true, false}, VarFinding{false, false}}, 40);
    CHECK_FALSE(report.claimed_satisfiable);
    CHECK(report.candidate[1] == std::nullopt);
  }
  SUBCASE("no complex at all means nothing is covered") {
    auto report = report_from_findings({VarFinding{}, VarFinding{}}, 0);
    CHECK_FALSE(report.claimed_satisfiable);
    CHECK(report.complex_node_count == 0);
  }
}

TEST_CASE("extract_assignment resolves single-sided variables only") {
  DecisionReport report;
  report.per_var = {VarFinding{true, false}, VarFinding{false, true},
                    VarFinding{true, true}, VarFinding{false, false}};
  const auto cand = extract_assignment(report);
  REQUIRE(cand.size() == 4);
  CHECK(cand[0] == std::optional<bool>{true});
  CHECK(cand[1] == std::optional<bool>{false});
  CHECK_FALSE(cand[2].has_value());
  CHECK_FALSE(cand[3].has_value());
}

TEST_CASE("pipeline output is structurally sound") {
  const auto f = parse_dimacs(std::string("p cnf 3 2\n1 2 3 0\n-1 2 3 0\n"));
  const auto pipeline = run_decide_pipeline(f);
  CHECK(pipeline.reduction.variable_count == 3);
  CHECK(pipeline.report.per_var.size() == 3);
  CHECK(pipeline.report.candidate.size() == 3);
  REQUIRE_FALSE(pipeline.complexes.empty());
  REQUIRE(pipeline.u_complex_index.has_value());
  const auto& u_complex = pipeline.complexes[*pipeline.u_complex_index];
  CHECK(std::binary_search(u_complex.node_set.begin(), u_complex.node_set.end(),
                           pipeline.reduction.u));
  CHECK(pipeline.report.complex_node_count == u_complex.node_set.size());
  // every complex node id refers to a real node
  for (NodeId x : u_complex.node_set) CHECK(x < pipeline.reduction.graph.node_count());
  // harvest actually ran on the reduction
  CHECK_FALSE(pipeline.harvest.holes.empty());
}

TEST_CASE("per-variable findings mirror literal-set membership") {
  const auto f = parse_dimacs(std::string("p cnf 2 1\n1 -2 1 0\n"));
  const auto pipeline = run_decide_pipeline(f);
  REQUIRE(pipeline.u_complex_index.has_value());
  const auto& nodes = pipeline.complexes[*pipeline.u_complex_index].node_set;
  const auto member = [&](const std::string& label) {
    return std::binary_search(nodes.begin(), nodes.end(), pipeline.reduction.node_of(label));
  };
  for (int i = 1; i <= 2; ++i) {
    bool t_all = true, f_all = true;
    for (const auto& s : true_set_labels(i)) t_all = t_all && member(s);
    for (const auto& s : false_set_labels(i)) f_all = f_all && member(s);
    CHECK(pipeline.report.per_var[i - 1].true_found == t_all);
    CHECK(pipeline.report.per_var[i - 1].false_found == f_all);
  }
}

TEST_CASE("decide_3sat is deterministic") {
  const auto f = parse_dimacs(std::string("p cnf 3 2\n1 2 3 0\n-1 2 3 0\n"));
  const auto a = decide_3sat(f);
  const auto b = decide_3sat(f);
  CHECK(report_to_json(a) == report_to_json(b));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto rf = random_3sat(2 + static_cast<int>(seed % 2), 1 + static_cast<int>(seed % 3), seed);
    CHECK(report_to_json(decide_3sat(rf)) == report_to_json(decide_3sat(rf)));
  }
}

TEST_CASE("options change the walk, reports stay well formed") {
  const auto f = random_3sat(3, 3, 5);
  for (bool strict : {false, true}) {
    for (auto order : {RootOrder::Ascending, RootOrder::Descending}) {
      const auto report = decide_3sat(f, DecideOptions{strict, order});
      CHECK(report.per_var.size() == 3);
      CHECK(report.candidate.size() == 3);
      CHECK(report.candidate == extract_assignment(report));
    }
  }
}

TEST_CASE("report json carries the full schema") {
  const auto f = parse_dimacs(std::string("p cnf 3 2\n1 2 3 0\n-1 2 3 0\n"));
  const auto report = decide_3sat(f);
  const auto doc = nlohmann::json::parse(report_to_json(report));
  REQUIRE(doc.contains("per_var"));
  REQUIRE(doc.contains("claimed_sat"));
  REQUIRE(doc.contains("candidate"));
  REQUIRE(doc.contains("complex_nodes"));
  CHECK(doc["per_var"].is_array());
  CHECK(doc["per_var"].size() == 3);
  for (const auto& entry : doc["per_var"]) {
    CHECK(entry.contains("t"));
    CHECK(entry.contains("f"));
    CHECK(entry["t"].is_boolean());
  }
  CHECK(doc["claimed_sat"].is_boolean());
  CHECK(doc["candidate"].size() == 3);
  for (const auto& value : doc["candidate"]) CHECK((value.is_boolean() || value.is_null()));
  CHECK(doc["complex_nodes"].is_number_unsigned());
  CHECK(doc["claimed_sat"].get<bool>() == report.claimed_satisfiable);
}

TEST_CASE("the full sign cube is processed and its claim recorded") {
  // ground truth for this formula is unsatisfiable; the claim under test is
  // whatever the complex-membership rule produces, and the verify pipeline
  // scores the agreement separately
  const auto f = testutil::all_sign_patterns_3var();
  const auto pipeline = run_decide_pipeline(f);
  CHECK(pipeline.report.per_var.size() == 3);
  CHECK(pipeline.reduction.graph.node_count() == 103);
  const auto again = run_decide_pipeline(f);
  CHECK(report_to_json(pipeline.report) == report_to_json(again.report));
  MESSAGE("full sign cube: claimed_sat=" << pipeline.report.claimed_satisfiable
          << " complex_nodes=" << pipeline.report.complex_node_count);
}
