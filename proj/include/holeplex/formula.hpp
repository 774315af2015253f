#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace holeplex {

struct Literal {
  int variable = 0;  // 1-based
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

// Clauses are fixed to width three; duplicate variables inside a clause are
// legal and the three slots keep their positions.
struct Clause {
  std::array<Literal, 3> literals{};

  friend bool operator==(const Clause&, const Clause&) = default;
};

struct CnfFormula {
  int variable_count = 0;
  std::vector<Clause> clauses;
  // Set by random_3sat when variable_count < 3 forces repeated variables in a
  // clause. Metadata only: not serialized, not part of equality.
  bool repeats_allowed = false;

  bool operator==(const CnfFormula& other) const {
    return variable_count == other.variable_count && clauses == other.clauses;
  }
};

// index 0 holds variable 1
using Assignment = std::vector<bool>;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);

// Same dialect parse_dimacs accepts: "p cnf n m" header, one clause per line.
std::string serialize_dimacs(const CnfFormula& formula);

bool evaluate(const CnfFormula& formula, const Assignment& assignment);

// Enumerates assignments by increasing binary value with variable 1 as the
// most significant bit and returns the first satisfying one. Guarded to
// variable_count <= 30.
std::optional<Assignment> brute_force_sat(const CnfFormula& formula);

// Deterministic for a given seed. Clauses use three distinct variables when
// n >= 3; smaller n allows repeats and sets the repeats_allowed flag.
CnfFormula random_3sat(int n, int m, std::uint64_t seed);

}  // namespace holeplex
