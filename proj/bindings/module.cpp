#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kfactor/errors.hpp"
#include "kfactor/factoring.hpp"
#include "kfactor/families.hpp"
#include "kfactor/graph.hpp"
#include "kfactor/graph6.hpp"
#include "kfactor/spectral.hpp"
#include "kfactor/structure_params.hpp"
#include "kfactor/verify.hpp"

namespace py = pybind11;
using namespace kfactor;

namespace {

std::string order_name(ThresholdOrder order) {
  switch (order) {
    case ThresholdOrder::below: return "below";
    case ThresholdOrder::equal_within_tol: return "equal_within_tol";
    case ThresholdOrder::above: return "above";
  }
  return "unknown";
}

std::string factor_method_name(FactorMethod method) {
  switch (method) {
    case FactorMethod::gadget: return "gadget";
    case FactorMethod::deficiency: return "deficiency";
    case FactorMethod::brute: return "brute";
  }
  return "unknown";
}

}  // namespace

PYBIND11_MODULE(_kfactor, m) {
  m.doc() = "Constructive k-factor certification with spectral, toughness and "
            "binding-number machinery";

  py::register_exception<param_error>(m, "ParamError", PyExc_ValueError);
  py::register_exception<guard_error>(m, "GuardError", PyExc_RuntimeError);
  py::register_exception<sampler_error>(m, "SamplerError", PyExc_RuntimeError);
  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def(py::init<int>(), py::arg("n"))
      .def(py::init([](int n, const std::vector<Edge>& edges) {
             return Graph::from_edges(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("e", &Graph::edge_count)
      .def("degree", &Graph::degree, py::arg("v"))
      .def("neighbors",
           [](const Graph& g, Vertex v) { return g.neighbors(v); }, py::arg("v"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("min_degree", &Graph::min_degree)
      .def("edges", &Graph::edges)
      .def("validate", &Graph::validate)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) +
               ", e=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("complete", &complete, py::arg("n"));
  m.def("empty_graph", &empty_graph, py::arg("n"));
  m.def("cycle", &cycle, py::arg("n"));
  m.def("path", &path, py::arg("n"));
  m.def("join", &join, py::arg("g1"), py::arg("g2"));
  m.def("disjoint_union", &disjoint_union, py::arg("g1"), py::arg("g2"));
  m.def("relabel",
        [](const Graph& g, const std::vector<Vertex>& perm) { return relabel(g, perm); },
        py::arg("g"), py::arg("perm"));
  m.def("components", &components, py::arg("g"), py::arg("removed") = VertexSet{});
  m.def("is_connected", &is_connected, py::arg("g"));
  m.def(
      "random_graph",
      [](int n, double p, std::uint64_t seed, bool connected, int min_degree, int max_retries) {
        RandomGraphOptions opts;
        opts.require_connected = connected;
        opts.min_degree = min_degree;
        opts.max_retries = max_retries;
        return random_graph(n, p, seed, opts);
      },
      py::arg("n"), py::arg("p"), py::arg("seed"), py::arg("connected") = false,
      py::arg("min_degree") = 0, py::arg("max_retries") = 1000);
  m.def("random_permutation", &random_permutation, py::arg("n"), py::arg("seed"));
  m.def("is_isomorphic", &is_isomorphic, py::arg("g1"), py::arg("g2"),
        py::arg("size_limit") = 32);

  py::class_<FamilyInstance>(m, "FamilyInstance")
      .def_readonly("graph", &FamilyInstance::graph)
      .def_readonly("clique_set", &FamilyInstance::clique_set)
      .def_readonly("independent_set", &FamilyInstance::independent_set)
      .def_readonly("big_clique", &FamilyInstance::big_clique)
      .def_readonly("extra_edges", &FamilyInstance::extra_edges)
      .def_readonly("n", &FamilyInstance::n)
      .def_readonly("k", &FamilyInstance::k);
  m.def("g1_family", &g1_family, py::arg("n"), py::arg("k"));
  m.def("g2_family", &g2_family, py::arg("n"), py::arg("k"));
  m.def("conjecture_extremal", &conjecture_extremal, py::arg("n"), py::arg("a"));
  m.def("family_edge_threshold", &family_edge_threshold, py::arg("n"), py::arg("k"));

  py::class_<SpectralResult>(m, "SpectralResult")
      .def_readonly("rho", &SpectralResult::rho)
      .def_readonly("perron", &SpectralResult::perron)
      .def_readonly("residual", &SpectralResult::residual)
      .def_readonly("iterations", &SpectralResult::iterations)
      .def_readonly("converged", &SpectralResult::converged);
  m.def(
      "spectral_radius",
      [](const Graph& g, double tol) { return spectral_radius(g, tol); }, py::arg("g"),
      py::arg("tol") = 1e-10);
  m.def("hong_nikiforov_bound", &hong_nikiforov_bound, py::arg("g"));
  m.def("edge_shift", &edge_shift, py::arg("g"), py::arg("u"), py::arg("v"));

  py::class_<ThresholdComparison>(m, "ThresholdComparison")
      .def_property_readonly("order",
                             [](const ThresholdComparison& c) { return order_name(c.order); })
      .def_readonly("gap", &ThresholdComparison::gap)
      .def_readonly("rho_graph", &ThresholdComparison::rho_graph)
      .def_readonly("rho_threshold", &ThresholdComparison::rho_threshold)
      .def_readonly("converged", &ThresholdComparison::converged);
  m.def("compare_to_threshold", &compare_to_threshold, py::arg("g"), py::arg("extremal"),
        py::arg("tol") = 1e-8);

  py::class_<ComponentType>(m, "ComponentType")
      .def_readonly("size", &ComponentType::size)
      .def_readonly("edges_to_t", &ComponentType::edges_to_t)
      .def_readonly("odd", &ComponentType::odd);
  py::class_<DeficiencyWitness>(m, "DeficiencyWitness")
      .def_readonly("s", &DeficiencyWitness::s)
      .def_readonly("t", &DeficiencyWitness::t)
      .def_readonly("q", &DeficiencyWitness::q)
      .def_readonly("delta", &DeficiencyWitness::delta)
      .def_readonly("component_types", &DeficiencyWitness::component_types);
  m.def("deficiency", &deficiency, py::arg("g"), py::arg("s"), py::arg("t"), py::arg("k"));
  m.def("min_deficiency", &min_deficiency, py::arg("g"), py::arg("k"), py::arg("max_n") = 14);

  py::class_<FactorCertificate>(m, "FactorCertificate")
      .def_readonly("k", &FactorCertificate::k)
      .def_readonly("edges", &FactorCertificate::edges);
  m.def("certificate_valid", &certificate_valid, py::arg("g"), py::arg("cert"));

  py::class_<FactorVerdict>(m, "FactorVerdict")
      .def_readonly("exists", &FactorVerdict::exists)
      .def_readonly("certificate", &FactorVerdict::certificate)
      .def_readonly("witness", &FactorVerdict::witness)
      .def_property_readonly(
          "method", [](const FactorVerdict& v) { return factor_method_name(v.method); })
      .def_readonly("parity_impossible", &FactorVerdict::parity_impossible)
      .def_readonly("witness_exhaustive", &FactorVerdict::witness_exhaustive);
  m.def("has_k_factor", &has_k_factor, py::arg("g"), py::arg("k"),
        py::arg("exhaustive_guard") = 14);
  m.def("brute_force_factor", &brute_force_factor, py::arg("g"), py::arg("k"),
        py::arg("max_edges") = 24);
  m.def("max_matching_blossom", &max_matching_blossom, py::arg("g"));

  py::class_<TutteGadget>(m, "TutteGadget")
      .def_readonly("gadget", &TutteGadget::gadget)
      .def_readonly("feasible", &TutteGadget::feasible)
      .def_readonly("deficient_vertex", &TutteGadget::deficient_vertex)
      .def_readonly("original_edges", &TutteGadget::original_edges)
      .def_readonly("cross_pairs", &TutteGadget::cross_pairs);
  m.def("tutte_gadget", &tutte_gadget, py::arg("g"), py::arg("k"));

  py::class_<Rational>(m, "Rational")
      .def_readonly("num", &Rational::num)
      .def_readonly("den", &Rational::den)
      .def("__float__", &Rational::to_double)
      .def("__repr__", [](const Rational& r) { return r.str(); })
      .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
      .def("__lt__", [](const Rational& a, const Rational& b) { return a < b; })
      .def("__le__", [](const Rational& a, const Rational& b) { return a <= b; });
  py::class_<ParamReport>(m, "ParamReport")
      .def_property_readonly("kind",
                             [](const ParamReport& r) {
                               return r.kind == ParamKind::toughness ? "toughness" : "binding";
                             })
      .def_readonly("value", &ParamReport::value)
      .def_readonly("witness", &ParamReport::witness)
      .def_readonly("component_count", &ParamReport::component_count)
      .def_readonly("neighborhood", &ParamReport::neighborhood);
  m.def("toughness", &toughness, py::arg("g"), py::arg("max_n") = 24);
  py::class_<ToughnessCheck>(m, "ToughnessCheck")
      .def_readonly("tough", &ToughnessCheck::tough)
      .def_readonly("vacuous", &ToughnessCheck::vacuous)
      .def_readonly("violating", &ToughnessCheck::violating);
  m.def("is_t_tough", &is_t_tough, py::arg("g"), py::arg("t_num"), py::arg("t_den"),
        py::arg("max_n") = 24);
  m.def("binding_number", &binding_number, py::arg("g"), py::arg("max_n") = 24);

  py::class_<HypothesisBreakdown>(m, "HypothesisBreakdown")
      .def_readonly("k_range_ok", &HypothesisBreakdown::k_range_ok)
      .def_readonly("order_ok", &HypothesisBreakdown::order_ok)
      .def_readonly("min_degree_ok", &HypothesisBreakdown::min_degree_ok)
      .def_readonly("connected_ok", &HypothesisBreakdown::connected_ok)
      .def_readonly("parity_ok", &HypothesisBreakdown::parity_ok)
      .def_readonly("extremal_defined", &HypothesisBreakdown::extremal_defined)
      .def_readonly("gate_ok", &HypothesisBreakdown::gate_ok)
      .def_readonly("gate_attested", &HypothesisBreakdown::gate_attested)
      .def_readonly("threshold_ok", &HypothesisBreakdown::threshold_ok);
  py::class_<TheoremVerdict>(m, "TheoremVerdict")
      .def_property_readonly("theorem",
                             [](const TheoremVerdict& v) { return theorem_name(v.theorem); })
      .def_readonly("hypotheses", &TheoremVerdict::hypotheses)
      .def_readonly("hypotheses_hold", &TheoremVerdict::hypotheses_hold)
      .def_readonly("conclusion_checked", &TheoremVerdict::conclusion_checked)
      .def_readonly("conclusion_holds", &TheoremVerdict::conclusion_holds)
      .def_readonly("extremal_hit", &TheoremVerdict::extremal_hit)
      .def_readonly("evidence", &TheoremVerdict::evidence)
      .def_readonly("rho_graph", &TheoremVerdict::rho_graph)
      .def_readonly("rho_extremal", &TheoremVerdict::rho_extremal)
      .def_readonly("spectral_gap", &TheoremVerdict::spectral_gap)
      .def_readonly("edge_gap", &TheoremVerdict::edge_gap)
      .def_readonly("note", &TheoremVerdict::note)
      .def("contradiction", &TheoremVerdict::contradiction);

  auto make_options = [](double tol, int guard, bool attest_tough, bool attest_binding) {
    VerifyOptions opts;
    opts.spectral_tol = tol;
    opts.param_guard = guard;
    opts.attest_tough = attest_tough;
    opts.attest_binding = attest_binding;
    return opts;
  };
  m.def(
      "check_spectral_theorem",
      [make_options](const Graph& g, int k, double tol, int guard) {
        return check_spectral_theorem(g, k, make_options(tol, guard, false, false));
      },
      py::arg("g"), py::arg("k"), py::arg("tol") = 1e-8, py::arg("param_guard") = 24);
  m.def(
      "check_edge_theorem",
      [make_options](const Graph& g, int k, double tol, int guard) {
        return check_edge_theorem(g, k, make_options(tol, guard, false, false));
      },
      py::arg("g"), py::arg("k"), py::arg("tol") = 1e-8, py::arg("param_guard") = 24);
  m.def(
      "check_tough_theorem",
      [make_options](const Graph& g, int k, double tol, int guard, bool attest_tough) {
        return check_tough_theorem(g, k, make_options(tol, guard, attest_tough, false));
      },
      py::arg("g"), py::arg("k"), py::arg("tol") = 1e-8, py::arg("param_guard") = 24,
      py::arg("attest_tough") = false);
  m.def(
      "check_binding_corollary",
      [make_options](const Graph& g, int k, double tol, int guard, bool attest_binding) {
        return check_binding_corollary(g, k, make_options(tol, guard, false, attest_binding));
      },
      py::arg("g"), py::arg("k"), py::arg("tol") = 1e-8, py::arg("param_guard") = 24,
      py::arg("attest_binding") = false);
  m.def(
      "check_conjecture_theorem",
      [make_options](const Graph& g, int k, double tol, int guard) {
        return check_conjecture_theorem(g, k, make_options(tol, guard, false, false));
      },
      py::arg("g"), py::arg("k"), py::arg("tol") = 1e-8, py::arg("param_guard") = 24);
  m.def("binomial_shift_inequality", &binomial_shift_inequality, py::arg("a"), py::arg("b"));
  m.def("theorem_order_bound", &theorem_order_bound, py::arg("k"));

  py::class_<TheoremTally>(m, "TheoremTally")
      .def_readonly("evaluated", &TheoremTally::evaluated)
      .def_readonly("hypotheses_met", &TheoremTally::hypotheses_met)
      .def_readonly("conclusion_verified", &TheoremTally::conclusion_verified)
      .def_readonly("extremal_hits", &TheoremTally::extremal_hits)
      .def_readonly("contradictions", &TheoremTally::contradictions)
      .def_readonly("skipped_guard", &TheoremTally::skipped_guard);
  py::class_<SweepReport>(m, "SweepReport")
      .def_readonly("k", &SweepReport::k)
      .def_readonly("n", &SweepReport::n)
      .def_readonly("samples", &SweepReport::samples)
      .def_readonly("seed", &SweepReport::seed)
      .def_readonly("p_lo", &SweepReport::p_lo)
      .def_readonly("p_hi", &SweepReport::p_hi)
      .def_readonly("g1_defined", &SweepReport::g1_defined)
      .def_readonly("g2_defined", &SweepReport::g2_defined)
      .def_readonly("conj_defined", &SweepReport::conj_defined)
      .def_readonly("rho_g1", &SweepReport::rho_g1)
      .def_readonly("rho_g2", &SweepReport::rho_g2)
      .def_readonly("rho_conj", &SweepReport::rho_conj)
      .def_readonly("spectral", &SweepReport::spectral)
      .def_readonly("edge", &SweepReport::edge)
      .def_readonly("tough", &SweepReport::tough)
      .def_readonly("binding", &SweepReport::binding)
      .def_readonly("conjecture", &SweepReport::conjecture)
      .def_readonly("total_contradictions", &SweepReport::total_contradictions)
      .def_readonly("contradiction_samples", &SweepReport::contradiction_samples);
  m.def(
      "sweep",
      [](int k, int n, int samples, std::uint64_t seed, double p_lo, double p_hi, int threads) {
        SweepOptions opts;
        opts.p_lo = p_lo;
        opts.p_hi = p_hi;
        opts.threads = threads;
        return sweep(k, n, samples, seed, opts);
      },
      py::arg("k"), py::arg("n"), py::arg("samples"), py::arg("seed"), py::arg("p_lo") = 0.3,
      py::arg("p_hi") = 0.9, py::arg("threads") = 0);

  m.def("parse_graph6", [](const std::string& line) { return parse_graph6(line); },
        py::arg("line"));
  m.def("encode_graph6", &encode_graph6, py::arg("g"));
  m.def(
      "emit_dot",
      [](const Graph& g, const std::optional<std::pair<VertexSet, VertexSet>>& highlight) {
        return emit_dot(g, highlight);
      },
      py::arg("g"), py::arg("highlight") = std::nullopt);
}
