#include "holeplex/decide.hpp"

#include <algorithm>

#include "json.hpp"

namespace holeplex {

std::array<std::string, 8> true_set_labels(int variable) {
  return {labels::c(variable, 1), labels::t(variable, 1), labels::c(variable, 3),
          labels::c(variable, 2), labels::t(variable, 2), labels::t(variable, 3),
          labels::t(variable, 4), labels::c(variable, 4)};
}

std::array<std::string, 8> false_set_labels(int variable) {
  return {labels::c(variable, 1), labels::f(variable, 1), labels::c(variable, 3),
          labels::c(variable, 2), labels::f(variable, 2), labels::f(variable, 3),
          labels::f(variable, 4), labels::c(variable, 4)};
}

DecisionReport report_from_findings(std::vector<VarFinding> per_var,
                                    std::size_t complex_node_count) {
  DecisionReport report;
  report.claimed_satisfiable = true;
  for (const auto& finding : per_var)
    if (!finding.true_found && !finding.false_found) report.claimed_satisfiable = false;
  report.per_var = std::move(per_var);
  report.complex_node_count = complex_node_count;
  report.candidate = extract_assignment(report);
  return report;
}

std::vector<std::optional<bool>> extract_assignment(const DecisionReport& report) {
  std::vector<std::optional<bool>> candidate;
  candidate.reserve(report.per_var.size());
  for (const auto& finding : report.per_var) {
    if (finding.true_found != finding.false_found)
      candidate.push_back(finding.true_found);
    else
      candidate.push_back(std::nullopt);
  }
  return candidate;
}

DecidePipeline run_decide_pipeline(const CnfFormula& formula, const DecideOptions& options) {
  DecidePipeline pipeline;
  pipeline.reduction = build_reduction(formula);
  pipeline.harvest = harvest_with_two_paths(pipeline.reduction.graph, options.root_order);
  auto items = collect_items(pipeline.harvest, options.strict_fragments);
  pipeline.complexes = assemble_complexes(std::move(items), pipeline.reduction.graph);

  const HoleComplex* u_complex = complex_containing(pipeline.complexes, pipeline.reduction.u);
  if (u_complex)
    pipeline.u_complex_index = static_cast<std::size_t>(u_complex - pipeline.complexes.data());

  std::vector<VarFinding> per_var(pipeline.reduction.variable_count);
  if (u_complex) {
    const auto& nodes = u_complex->node_set;
    const auto member = [&](const std::string& label) {
      return std::binary_search(nodes.begin(), nodes.end(),
                                pipeline.reduction.node_of(label));
    };
    for (int i = 1; i <= pipeline.reduction.variable_count; ++i) {
      auto& finding = per_var[i - 1];
      finding.true_found = std::ranges::all_of(true_set_labels(i), member);
      finding.false_found = std::ranges::all_of(false_set_labels(i), member);
    }
  }
  pipeline.report = report_from_findings(std::move(per_var),
                                         u_complex ? u_complex->node_set.size() : 0);
  return pipeline;
}

DecisionReport decide_3sat(const CnfFormula& formula, const DecideOptions& options) {
  return run_decide_pipeline(formula, options).report;
}

std::string report_to_json(const DecisionReport& report) {
  nlohmann::json doc;
  doc["per_var"] = nlohmann::json::array();
  for (const auto& finding : report.per_var)
    doc["per_var"].push_back({{"t", finding.true_found}, {"f", finding.false_found}});
  doc["claimed_sat"] = report.claimed_satisfiable;
  doc["candidate"] = nlohmann::json::array();
  for (const auto& value : report.candidate) {
    if (value)
      doc["candidate"].push_back(*value);
    else
      doc["candidate"].push_back(nullptr);
  }
  doc["complex_nodes"] = report.complex_node_count;
  return doc.dump(2) + "\n";
}

}  // namespace holeplex
