#include "kfactor/report.hpp"

namespace kfactor {

json graph_summary(const Graph& g) {
  return json{{"n", g.vertex_count()},
              {"e", g.edge_count()},
              {"min_degree", g.min_degree()},
              {"connected", is_connected(g)}};
}

json to_json(const SpectralResult& result) {
  return json{{"rho", result.rho},
              {"residual", result.residual},
              {"iterations", result.iterations},
              {"converged", result.converged},
              {"perron", result.perron}};
}

json to_json(const DeficiencyWitness& witness) {
  json comps = json::array();
  for (const ComponentType& ct : witness.component_types)
    comps.push_back(json{{"size", ct.size}, {"edges_to_t", ct.edges_to_t}, {"odd", ct.odd}});
  return json{{"s", witness.s},
              {"t", witness.t},
              {"q", witness.q},
              {"delta", witness.delta},
              {"components", comps}};
}

json to_json(const FactorCertificate& cert) {
  json edges = json::array();
  for (auto [u, v] : cert.edges) edges.push_back(json::array({u, v}));
  return json{{"k", cert.k}, {"edges", edges}};
}

namespace {

std::string method_name(FactorMethod method) {
  switch (method) {
    case FactorMethod::gadget: return "gadget";
    case FactorMethod::deficiency: return "deficiency";
    case FactorMethod::brute: return "brute";
  }
  return "unknown";
}

}  // namespace

json to_json(const FactorVerdict& verdict) {
  json out{{"exists", verdict.exists},
           {"method", method_name(verdict.method)},
           {"parity_impossible", verdict.parity_impossible}};
  out["certificate"] = verdict.certificate ? to_json(*verdict.certificate) : json(nullptr);
  out["witness"] = verdict.witness ? to_json(*verdict.witness) : json(nullptr);
  out["witness_exhaustive"] = verdict.witness_exhaustive;
  return out;
}

json to_json(const ParamReport& report) {
  json out{{"kind", report.kind == ParamKind::toughness ? "toughness" : "binding"},
           {"value", json{{"num", report.value.num},
                          {"den", report.value.den},
                          {"approx", report.value.to_double()}}},
           {"witness", report.witness}};
  if (report.kind == ParamKind::toughness)
    out["component_count"] = report.component_count;
  else
    out["neighborhood"] = report.neighborhood;
  return out;
}

json to_json(const HypothesisBreakdown& hypotheses) {
  return json{{"k_range_ok", hypotheses.k_range_ok},
              {"order_ok", hypotheses.order_ok},
              {"min_degree_ok", hypotheses.min_degree_ok},
              {"connected_ok", hypotheses.connected_ok},
              {"parity_ok", hypotheses.parity_ok},
              {"extremal_defined", hypotheses.extremal_defined},
              {"gate_ok", hypotheses.gate_ok},
              {"gate_attested", hypotheses.gate_attested},
              {"threshold_ok", hypotheses.threshold_ok}};
}

json to_json(const TheoremVerdict& verdict) {
  json out{{"theorem", theorem_name(verdict.theorem)},
           {"hypotheses", to_json(verdict.hypotheses)},
           {"hypotheses_hold", verdict.hypotheses_hold},
           {"conclusion_checked", verdict.conclusion_checked},
           {"conclusion_holds", verdict.conclusion_holds},
           {"extremal_hit", verdict.extremal_hit},
           {"contradiction", verdict.contradiction()}};
  if (verdict.theorem == TheoremKind::edge_threshold) {
    out["edge_gap"] = verdict.edge_gap;
  } else {
    out["rho_graph"] = verdict.rho_graph;
    out["rho_extremal"] = verdict.rho_extremal;
    out["spectral_gap"] = verdict.spectral_gap;
  }
  out["evidence"] = verdict.evidence ? to_json(*verdict.evidence) : json(nullptr);
  out["note"] = verdict.note;
  return out;
}

json to_json(const TheoremTally& tally) {
  return json{{"evaluated", tally.evaluated},
              {"hypotheses_met", tally.hypotheses_met},
              {"conclusion_verified", tally.conclusion_verified},
              {"extremal_hits", tally.extremal_hits},
              {"contradictions", tally.contradictions},
              {"skipped_guard", tally.skipped_guard}};
}

json to_json(const SweepReport& report) {
  json thresholds;
  thresholds["g1_defined"] = report.g1_defined;
  if (report.g1_defined) thresholds["rho_g1"] = report.rho_g1;
  thresholds["g2_defined"] = report.g2_defined;
  if (report.g2_defined) thresholds["rho_g2"] = report.rho_g2;
  thresholds["conj_defined"] = report.conj_defined;
  if (report.conj_defined) thresholds["rho_conj"] = report.rho_conj;
  return json{{"k", report.k},
              {"n", report.n},
              {"samples", report.samples},
              {"seed", report.seed},
              {"p_lo", report.p_lo},
              {"p_hi", report.p_hi},
              {"thresholds", thresholds},
              {"tallies", json{{"spectral", to_json(report.spectral)},
                               {"edge", to_json(report.edge)},
                               {"tough", to_json(report.tough)},
                               {"binding", to_json(report.binding)},
                               {"conjecture", to_json(report.conjecture)}}},
              {"total_contradictions", report.total_contradictions},
              {"contradiction_samples", report.contradiction_samples}};
}

json make_report(const std::string& command, const json& parameters) {
  json report;
  report["schema_version"] = kReportSchemaVersion;
  report["command"] = json{{"name", command}, {"parameters", parameters}};
  report["results"] = json::array();
  report["timing"] = json::object();
  return report;
}

}  // namespace kfactor
