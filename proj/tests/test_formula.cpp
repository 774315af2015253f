#include "doctest.h"

#include "holeplex/formula.hpp"
#include "test_util.hpp"

using namespace holeplex;

TEST_CASE("parse_dimacs accepts the minimal instance") {
  const auto f = parse_dimacs(std::string("p cnf 1 1\n1 1 1 0\n"));
  CHECK(f.variable_count == 1);
  REQUIRE(f.clauses.size() == 1);
  CHECK(f.clauses[0].literals[0] == Literal{1, false});
  CHECK(f.clauses[0].literals[1] == Literal{1, false});
  CHECK(f.clauses[0].literals[2] == Literal{1, false});
}

TEST_CASE("parse_dimacs ignores comments and blank lines") {
  const auto f = parse_dimacs(std::string(
      "c a comment\n\np cnf 3 2\nc another\n1 -2 3 0\n-1 2 -3 0\n"));
  CHECK(f.variable_count == 3);
  CHECK(f.clauses.size() == 2);
  CHECK(f.clauses[0].literals[1] == Literal{2, true});
}

TEST_CASE("parse_dimacs accepts clauses split across lines") {
  const auto f = parse_dimacs(std::string("p cnf 2 1\n1 2\n1 0\n"));
  CHECK(f.clauses.size() == 1);
}

TEST_CASE("parse_dimacs errors carry line numbers") {
  SUBCASE("clause of two literals") {
    try {
      parse_dimacs(std::string("p cnf 2 1\n1 2 0\n"));
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("clause length") != std::string::npos);
    }
  }
  SUBCASE("malformed header") {
    try {
      parse_dimacs(std::string("p dnf 2 1\n"));
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
    }
  }
  SUBCASE("non-positive counts") {
    CHECK_THROWS_AS(parse_dimacs(std::string("p cnf 0 1\n")), ParseError);
    CHECK_THROWS_AS(parse_dimacs(std::string("p cnf 2 0\n")), ParseError);
  }
  SUBCASE("variable out of range") {
    try {
      parse_dimacs(std::string("p cnf 2 1\n1 2 3 0\n"));
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }
  }
  SUBCASE("missing terminator") {
    try {
      parse_dimacs(std::string("p cnf 3 1\n1 2 3\n"));
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("terminating 0") != std::string::npos);
    }
  }
  SUBCASE("clause count mismatch") {
    CHECK_THROWS_AS(parse_dimacs(std::string("p cnf 3 2\n1 2 3 0\n")), ParseError);
  }
  SUBCASE("missing header") {
    CHECK_THROWS_AS(parse_dimacs(std::string("1 2 3 0\n")), ParseError);
  }
  SUBCASE("junk literal") {
    CHECK_THROWS_AS(parse_dimacs(std::string("p cnf 3 1\n1 x 3 0\n")), ParseError);
  }
}

TEST_CASE("serialize then parse is the identity") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = 1 + static_cast<int>(seed % 6);
    const int m = 1 + static_cast<int>((seed * 7) % 9);
    const auto f = random_3sat(n, m, seed);
    CHECK(parse_dimacs(serialize_dimacs(f)) == f);
  }
}

TEST_CASE("evaluate checks clause satisfaction") {
  const auto f = parse_dimacs(std::string("p cnf 3 2\n1 2 3 0\n-1 2 3 0\n"));
  CHECK(evaluate(f, {false, false, true}));
  CHECK(evaluate(f, {false, true, false}));
  CHECK_FALSE(evaluate(f, {true, false, false}));   // second clause fails
  CHECK_FALSE(evaluate(f, {false, false, false}));  // first clause fails
  CHECK_THROWS_AS(evaluate(f, {true, true}), std::invalid_argument);
}

TEST_CASE("brute_force_sat returns the lowest-value witness") {
  // variable 1 is the most significant bit, so [false,false,true] (value 1)
  // precedes [false,true,false] (value 2)
  const auto f = parse_dimacs(std::string("p cnf 3 2\n1 2 3 0\n-1 2 3 0\n"));
  const auto witness = brute_force_sat(f);
  REQUIRE(witness.has_value());
  CHECK(*witness == Assignment{false, false, true});
}

TEST_CASE("brute_force_sat identifies the full sign cube as unsatisfiable") {
  const auto f = testutil::all_sign_patterns_3var();
  CHECK(f.clauses.size() == 8);
  CHECK_FALSE(brute_force_sat(f).has_value());
  // and indeed every assignment falsifies some clause
  for (int value = 0; value < 8; ++value) {
    Assignment a(3);
    for (int i = 0; i < 3; ++i) a[i] = ((value >> (2 - i)) & 1) != 0;
    CHECK_FALSE(evaluate(f, a));
  }
}

TEST_CASE("brute_force_sat witness always satisfies") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const int n = 1 + static_cast<int>(seed % 5);
    const auto f = random_3sat(n, 1 + static_cast<int>(seed % 7), seed);
    const auto witness = brute_force_sat(f);
    if (witness) {
      CHECK(evaluate(f, *witness));
    } else {
      // exhaustive: no assignment satisfies (n is small here)
      const std::uint64_t total = std::uint64_t{1} << n;
      for (std::uint64_t value = 0; value < total; ++value) {
        Assignment a(n);
        for (int i = 0; i < n; ++i) a[i] = ((value >> (n - 1 - i)) & 1u) != 0;
        CHECK_FALSE(evaluate(f, a));
      }
    }
  }
}

TEST_CASE("brute_force_sat refuses oversized instances") {
  CnfFormula f = random_3sat(3, 2, 1);
  f.variable_count = 31;
  CHECK_THROWS_AS(brute_force_sat(f), std::invalid_argument);
}

TEST_CASE("random_3sat is deterministic per seed") {
  CHECK(random_3sat(4, 6, 42) == random_3sat(4, 6, 42));
  CHECK(random_3sat(4, 6, 42) != random_3sat(4, 6, 43));
}

TEST_CASE("random_3sat uses distinct variables when possible") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto f = random_3sat(5, 8, seed);
    CHECK_FALSE(f.repeats_allowed);
    for (const auto& clause : f.clauses) {
      const auto& lits = clause.literals;
      CHECK(lits[0].variable != lits[1].variable);
      CHECK(lits[0].variable != lits[2].variable);
      CHECK(lits[1].variable != lits[2].variable);
      for (const auto& lit : lits) {
        CHECK(lit.variable >= 1);
        CHECK(lit.variable <= 5);
      }
    }
  }
}

TEST_CASE("random_3sat flags forced repeats for tiny variable counts") {
  const auto f = random_3sat(1, 1, 7);
  CHECK(f.repeats_allowed);
  CHECK(f.clauses[0].literals[0].variable == 1);
  CHECK(f.clauses[0].literals[1].variable == 1);
  const auto f2 = random_3sat(2, 3, 9);
  CHECK(f2.repeats_allowed);
}

TEST_CASE("random_3sat rejects non-positive sizes") {
  CHECK_THROWS_AS(random_3sat(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_3sat(1, 0, 1), std::invalid_argument);
}
