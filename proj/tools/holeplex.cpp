// Command line front end: reduce | holes | complexes | decide | verify | gen.
// Exit codes: 0 ok, 1 processing error, 2 usage error, 3 equivalence
// violation between the SAT brute force and the odd-hole search.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "holeplex/complexes.hpp"
#include "holeplex/decide.hpp"
#include "holeplex/formula.hpp"
#include "holeplex/graph.hpp"
#include "holeplex/holes.hpp"
#include "holeplex/oracle.hpp"
#include "holeplex/reduction.hpp"

namespace {

using namespace holeplex;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  out << content;
}

std::string label_row(const LabeledGraph& g, const std::vector<NodeId>& nodes) {
  std::string out;
  for (const NodeId v : nodes) {
    if (!out.empty()) out += ' ';
    out += g.label(v);
  }
  return out;
}

nlohmann::json harvest_to_json(const HarvestResult& result) {
  nlohmann::json doc;
  doc["holes"] = nlohmann::json::array();
  for (const auto& harvested : result.holes)
    doc["holes"].push_back({{"cycle", harvested.hole.cycle}, {"pure", harvested.pure}});
  doc["fragments"] = nlohmann::json::array();
  for (const auto& fragment : result.fragments)
    doc["fragments"].push_back({{"nodes", fragment.nodes}, {"closed", fragment.closed}});
  doc["two_paths"] = nlohmann::json::array();
  for (const auto& two_path : result.two_paths) doc["two_paths"].push_back(two_path.nodes);
  doc["fill_edges_added"] = result.fill_edges_added;
  return doc;
}

std::string harvest_to_text(const LabeledGraph& g, const HarvestResult& result) {
  std::ostringstream out;
  std::size_t pure = 0;
  for (const auto& harvested : result.holes) pure += harvested.pure ? 1 : 0;
  out << "holes detected: " << result.holes.size() << " (pure " << pure << ")\n";
  out << "fragments: " << result.fragments.size() << '\n';
  out << "two-paths: " << result.two_paths.size() << '\n';
  out << "fill edges added: " << result.fill_edges_added << '\n';
  for (std::size_t i = 0; i < result.holes.size(); ++i)
    out << "hole " << i << (result.holes[i].pure ? " (pure): " : " (mixed): ")
        << label_row(g, result.holes[i].hole.cycle) << '\n';
  for (std::size_t i = 0; i < result.fragments.size(); ++i)
    out << "fragment " << i << (result.fragments[i].closed ? " (closed, " : " (open, ")
        << result.fragments[i].edge_count() << " edges): "
        << label_row(g, result.fragments[i].nodes) << '\n';
  for (std::size_t i = 0; i < result.two_paths.size(); ++i)
    out << "two-path " << i << ": " << label_row(g, result.two_paths[i].nodes) << '\n';
  return out.str();
}

nlohmann::json complexes_to_json(const std::vector<HoleComplex>& complexes) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& complex : complexes) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& item : complex.items)
      items.push_back({{"kind", to_string(item.kind)},
                       {"sequence", item.sequence},
                       {"closed", item.closed}});
    doc.push_back({{"node_set", complex.node_set}, {"items", items}});
  }
  return doc;
}

std::string complexes_to_text(const LabeledGraph& g,
                              const std::vector<HoleComplex>& complexes) {
  std::ostringstream out;
  out << "complexes: " << complexes.size() << '\n';
  for (std::size_t i = 0; i < complexes.size(); ++i) {
    out << "complex " << i << ": " << complexes[i].node_set.size() << " nodes, "
        << complexes[i].items.size() << " items\n";
    out << "  nodes: " << label_row(g, complexes[i].node_set) << '\n';
  }
  return out.str();
}

std::string report_to_text(const DecisionReport& report) {
  std::ostringstream out;
  out << "claimed satisfiable: " << (report.claimed_satisfiable ? "yes" : "no") << '\n';
  out << "complex nodes: " << report.complex_node_count << '\n';
  for (std::size_t i = 0; i < report.per_var.size(); ++i) {
    out << "var " << i + 1 << ": t=" << (report.per_var[i].true_found ? "yes" : "no")
        << " f=" << (report.per_var[i].false_found ? "yes" : "no") << " candidate=";
    if (report.candidate[i])
      out << (*report.candidate[i] ? "true" : "false");
    else
      out << "?";
    out << '\n';
  }
  return out.str();
}

std::vector<int> parse_range(const std::string& value, const std::string& key) {
  const auto dots = value.find("..");
  int lo = 0;
  int hi = 0;
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(value);
    } else {
      lo = std::stoi(value.substr(0, dots));
      hi = std::stoi(value.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw UsageError("--gen: malformed value for " + key + ": '" + value + "'");
  }
  if (lo > hi) throw UsageError("--gen: empty range for " + key);
  std::vector<int> out;
  for (int x = lo; x <= hi; ++x) out.push_back(x);
  return out;
}

BatchConfig parse_gen_spec(const std::string& spec) {
  BatchConfig config;
  std::vector<int> ns;
  std::vector<int> ms;
  bool have_instances = false;
  std::istringstream stream(spec);
  std::string part;
  while (std::getline(stream, part, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos)
      throw UsageError("--gen: expected key=value, got '" + part + "'");
    const std::string key = part.substr(0, eq);
    const std::string value = part.substr(eq + 1);
    if (key == "n")
      ns = parse_range(value, key);
    else if (key == "m")
      ms = parse_range(value, key);
    else if (key == "instances") {
      config.instances = parse_range(value, key).at(0);
      have_instances = true;
    } else if (key == "seed") {
      try {
        config.seed = std::stoull(value);
      } catch (const std::exception&) {
        throw UsageError("--gen: malformed value for seed: '" + value + "'");
      }
    } else
      throw UsageError("--gen: unknown key '" + key + "'");
  }
  if (ns.empty() || ms.empty() || !have_instances)
    throw UsageError("--gen: n=, m= and instances= are required");
  if (config.instances < 1) throw UsageError("--gen: instances must be positive");
  for (const int x : ns)
    if (x < 1) throw UsageError("--gen: n values must be positive");
  for (const int x : ms)
    if (x < 1) throw UsageError("--gen: m values must be positive");
  config.nm_grid.clear();
  for (const int n : ns)
    for (const int m : ms) config.nm_grid.emplace_back(n, m);
  return config;
}

int run(int argc, char** argv) {
  CLI::App app{"3SAT-to-odd-hole reduction graphs, hole harvesting, hole complexes,\n"
               "a complex-membership decision procedure, and brute-force checks of it"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string out_path = "-";
  std::string format = "json";
  bool strict_fragments = false;
  std::uint64_t budget = kDefaultOracleBudget;
  int jobs = 1;
  std::string gen_spec;
  int gen_n = 0;
  int gen_m = 0;
  int gen_instances = 1;
  std::uint64_t seed = 1;

  auto* reduce = app.add_subcommand("reduce", "build the reduction graph from DIMACS CNF");
  reduce->add_option("input", input, "CNF file, or - for stdin");
  reduce->add_option("--format", format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  reduce->add_option("--out", out_path, "output file, - for stdout");

  auto* holes_cmd = app.add_subcommand("holes", "harvest holes from a graph JSON file");
  holes_cmd->add_option("input", input, "graph JSON file, or - for stdin");
  holes_cmd->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  holes_cmd->add_option("--out", out_path, "output file, - for stdout");

  auto* complexes_cmd =
      app.add_subcommand("complexes", "assemble hole complexes from a graph JSON file");
  complexes_cmd->add_option("input", input, "graph JSON file, or - for stdin");
  complexes_cmd->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  complexes_cmd->add_flag("--strict-fragments", strict_fragments,
                          "drop single-edge fragments before assembly");
  complexes_cmd->add_option("--out", out_path, "output file, - for stdout");

  auto* decide = app.add_subcommand("decide", "run the decision procedure on DIMACS CNF");
  decide->add_option("input", input, "CNF file, or - for stdin");
  decide->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  decide->add_flag("--strict-fragments", strict_fragments,
                   "drop single-edge fragments before assembly");
  decide->add_option("--out", out_path, "output file, - for stdout");

  auto* verify = app.add_subcommand(
      "verify", "cross-check decide against brute-force SAT and the odd-hole search");
  verify->add_option("input", input, "CNF file, or - for stdin");
  verify->add_option("--gen", gen_spec,
                     "generate a batch instead: n=1..3,m=1..4,instances=60,seed=7");
  verify->add_option("--budget", budget, "odd-hole search node-expansion budget");
  verify->add_option("--jobs", jobs, "worker threads for batch instances")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--strict-fragments", strict_fragments,
                   "drop single-edge fragments before assembly");
  verify->add_option("--out", out_path, "JSONL output file, - for stdout");

  auto* gen = app.add_subcommand("gen", "generate random 3SAT instances as DIMACS");
  gen->add_option("--n", gen_n, "variable count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--m", gen_m, "clause count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--instances", gen_instances, "instance count")
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "base seed; instance k uses seed+k");
  gen->add_option("--out", out_path,
                  "output file for one instance, or filename prefix for several");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const DecideOptions options{strict_fragments, RootOrder::Ascending};

    if (reduce->parsed()) {
      const CnfFormula formula = parse_dimacs(slurp(input));
      const ReductionGraph rg = build_reduction(formula);
      emit(out_path, format == "dot" ? export_dot(rg.graph) : graph_to_json(rg.graph));
      return 0;
    }

    if (holes_cmd->parsed()) {
      const LabeledGraph g = graph_from_json(slurp(input));
      const HarvestResult result = harvest_with_two_paths(g);
      emit(out_path, format == "text" ? harvest_to_text(g, result)
                                      : harvest_to_json(result).dump(2) + "\n");
      return 0;
    }

    if (complexes_cmd->parsed()) {
      const LabeledGraph g = graph_from_json(slurp(input));
      const HarvestResult result = harvest_with_two_paths(g);
      const auto complexes =
          assemble_complexes(collect_items(result, strict_fragments), g);
      emit(out_path, format == "text" ? complexes_to_text(g, complexes)
                                      : complexes_to_json(complexes).dump(2) + "\n");
      return 0;
    }

    if (decide->parsed()) {
      const CnfFormula formula = parse_dimacs(slurp(input));
      const DecisionReport report = decide_3sat(formula, options);
      emit(out_path,
           format == "text" ? report_to_text(report) : report_to_json(report));
      return 0;
    }

    if (verify->parsed()) {
      if (!gen_spec.empty() && input != "-")
        throw UsageError("verify: give an input file or --gen, not both");
      std::ostringstream records;
      BatchSummary summary;
      if (!gen_spec.empty()) {
        BatchConfig config = parse_gen_spec(gen_spec);
        config.budget = budget;
        config.jobs = jobs;
        config.decide = options;
        summary = run_validation_batch(config, records);
      } else {
        const CnfFormula formula = parse_dimacs(slurp(input));
        const ValidationRecord record = cross_validate(formula, budget, options);
        records << record_to_jsonl(record);
        summary.instances = 1;
        summary.resolved = record.oracle_resolved ? 1 : 0;
        summary.equivalence_confirmed = summary.resolved;
        summary.claimed_agree = record.claimed_agrees ? 1 : 0;
        summary.prop1_violations = record.prop1_violations;
      }
      emit(out_path, records.str());
      std::cerr << summary.to_text();
      return 0;
    }

    if (gen->parsed()) {
      if (gen_instances == 1) {
        emit(out_path, serialize_dimacs(random_3sat(gen_n, gen_m, seed)));
        return 0;
      }
      if (out_path == "-")
        throw UsageError("gen: --out prefix is required for more than one instance");
      for (int k = 0; k < gen_instances; ++k) {
        char suffix[32];
        std::snprintf(suffix, sizeof(suffix), "-%03d.cnf", k);
        emit(out_path + suffix,
             serialize_dimacs(random_3sat(gen_n, gen_m, seed + static_cast<std::uint64_t>(k))));
      }
      std::cerr << "wrote " << gen_instances << " instances\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const EquivalenceViolation& e) {
    std::cerr << "error: " << e.what() << '\n' << e.artifacts << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
