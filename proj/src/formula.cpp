#include "holeplex/formula.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "holeplex/rng.hpp"

namespace holeplex {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) out.push_back(token);
  return out;
}

long parse_int(const std::string& token, int line_no, const char* what) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line_no, std::string("malformed ") + what + " '" + token + "'");
  return value;
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula formula;
  bool header_seen = false;
  long declared_vars = 0;
  long declared_clauses = 0;
  std::vector<Literal> current;
  std::string line;
  int line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == 'c') continue;

    const auto tokens = split_ws(line);
    if (!header_seen) {
      if (tokens[0] != "p") throw ParseError(line_no, "expected 'p cnf <vars> <clauses>' header");
      if (tokens.size() != 4 || tokens[1] != "cnf")
        throw ParseError(line_no, "malformed header");
      declared_vars = parse_int(tokens[2], line_no, "variable count");
      declared_clauses = parse_int(tokens[3], line_no, "clause count");
      if (declared_vars < 1 || declared_clauses < 1)
        throw ParseError(line_no, "header counts must be positive");
      formula.variable_count = static_cast<int>(declared_vars);
      header_seen = true;
      continue;
    }

    for (const auto& token : tokens) {
      const long value = parse_int(token, line_no, "literal");
      if (value == 0) {
        if (current.size() != 3)
          throw ParseError(line_no, "clause length != 3 (got " +
                                        std::to_string(current.size()) + ")");
        if (static_cast<long>(formula.clauses.size()) >= declared_clauses)
          throw ParseError(line_no, "more clauses than declared in header");
        Clause clause;
        for (std::size_t k = 0; k < 3; ++k) clause.literals[k] = current[k];
        formula.clauses.push_back(clause);
        current.clear();
        continue;
      }
      const long var = value < 0 ? -value : value;
      if (var > declared_vars)
        throw ParseError(line_no, "variable index " + std::to_string(var) +
                                      " out of range (max " +
                                      std::to_string(declared_vars) + ")");
      current.push_back({static_cast<int>(var), value < 0});
    }
  }

  if (!header_seen) throw ParseError(line_no, "missing 'p cnf' header");
  if (!current.empty()) throw ParseError(line_no, "clause missing terminating 0");
  if (static_cast<long>(formula.clauses.size()) != declared_clauses)
    throw ParseError(line_no, "clause count mismatch: header declares " +
                                  std::to_string(declared_clauses) + ", found " +
                                  std::to_string(formula.clauses.size()));
  return formula;
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream stream(text);
  return parse_dimacs(stream);
}

std::string serialize_dimacs(const CnfFormula& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.variable_count << ' ' << formula.clauses.size() << '\n';
  for (const auto& clause : formula.clauses) {
    for (const auto& lit : clause.literals)
      out << (lit.negated ? -lit.variable : lit.variable) << ' ';
    out << "0\n";
  }
  return out.str();
}

bool evaluate(const CnfFormula& formula, const Assignment& assignment) {
  if (assignment.size() != static_cast<std::size_t>(formula.variable_count))
    throw std::invalid_argument("evaluate: assignment size does not match variable count");
  for (const auto& clause : formula.clauses) {
    bool satisfied = false;
    for (const auto& lit : clause.literals) {
      if (assignment[lit.variable - 1] != lit.negated) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

std::optional<Assignment> brute_force_sat(const CnfFormula& formula) {
  const int n = formula.variable_count;
  if (n < 1) throw std::invalid_argument("brute_force_sat: formula has no variables");
  if (n > 30) throw std::invalid_argument("brute_force_sat: refusing more than 30 variables");
  Assignment assignment(n, false);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t value = 0; value < total; ++value) {
    // variable 1 is the most significant bit, so ascending value scans
    // false-heavy assignments first
    for (int i = 0; i < n; ++i) assignment[i] = ((value >> (n - 1 - i)) & 1u) != 0;
    if (evaluate(formula, assignment)) return assignment;
  }
  return std::nullopt;
}

CnfFormula random_3sat(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < 1) throw std::invalid_argument("random_3sat: n and m must be positive");
  Rng rng(seed);
  CnfFormula formula;
  formula.variable_count = n;
  formula.repeats_allowed = n < 3;
  for (int j = 0; j < m; ++j) {
    Clause clause;
    int vars[3] = {0, 0, 0};
    for (int k = 0; k < 3; ++k) {
      int var = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
      if (n >= 3)
        while (var == vars[0] || var == vars[1])
          var = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
      vars[k] = var;
    }
    for (int k = 0; k < 3; ++k) clause.literals[k] = {vars[k], rng.coin()};
    formula.clauses.push_back(clause);
  }
  return formula;
}

}  // namespace holeplex
