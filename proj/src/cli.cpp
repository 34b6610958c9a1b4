#include "kfactor/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kfactor/errors.hpp"
#include "kfactor/families.hpp"
#include "kfactor/graph6.hpp"
#include "kfactor/report.hpp"

namespace kfactor {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<Graph> read_graphs(const std::string& path, std::istream& fallback) {
  std::ifstream file;
  std::istream* in = &fallback;
  if (path != "-") {
    file.open(path);
    if (!file) throw param_error("cannot open input file: " + path);
    in = &file;
  }
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(*in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(parse_graph6(line));
  }
  if (graphs.empty()) throw param_error("no graphs in input");
  return graphs;
}

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path == "-") {
    fallback << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw param_error("cannot open output file: " + path);
  file << text;
}

void emit_report(json& report, double total_ms, const std::string& out_path,
                 std::ostream& out) {
  report["timing"]["total_ms"] = total_ms;
  write_text(out_path, report.dump(2) + "\n", out);
}

struct ConstructArgs {
  std::string family;
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  double p = 0.5;
  bool connected = false;
  int min_degree = 0;
  std::string format = "g6";
  std::string out_path = "-";
};

int run_construct(const ConstructArgs& a, std::ostream& out) {
  Graph g;
  std::optional<std::pair<VertexSet, VertexSet>> highlight;
  if (a.family == "g1") {
    FamilyInstance fam = g1_family(a.n, a.k);
    g = fam.graph;
    highlight = {{fam.clique_set, fam.independent_set}};
  } else if (a.family == "g2") {
    FamilyInstance fam = g2_family(a.n, a.k);
    g = fam.graph;
    highlight = {{fam.clique_set, fam.independent_set}};
  } else if (a.family == "conj") {
    g = conjecture_extremal(a.n, a.k);
  } else if (a.family == "complete") {
    g = complete(a.n);
  } else if (a.family == "cycle") {
    g = cycle(a.n);
  } else if (a.family == "random") {
    RandomGraphOptions opts;
    opts.require_connected = a.connected;
    opts.min_degree = a.min_degree;
    g = random_graph(a.n, a.p, a.seed, opts);
  } else {
    throw param_error("unknown family: " + a.family);
  }
  if (a.format == "g6")
    write_text(a.out_path, encode_graph6(g) + "\n", out);
  else
    write_text(a.out_path, emit_dot(g, highlight), out);
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-factor certification toolkit: constructive existence checks, "
               "spectral and structural thresholds, theorem verification"};
  app.require_subcommand(1);

  // construct ------------------------------------------------------------
  ConstructArgs cons;
  CLI::App* construct = app.add_subcommand("construct", "emit a parameterized graph");
  construct->add_option("--family", cons.family, "g1|g2|conj|complete|cycle|random")->required();
  construct->add_option("-n", cons.n, "vertex count")->required();
  construct->add_option("-k", cons.k, "factor parameter (a for conj)");
  construct->add_option("--seed", cons.seed, "sampler seed");
  construct->add_option("--p", cons.p, "edge probability");
  construct->add_flag("--connected", cons.connected, "resample until connected");
  construct->add_option("--min-degree", cons.min_degree, "resample until min degree");
  construct->add_option("--format", cons.format, "g6|dot")->check(CLI::IsMember({"g6", "dot"}));
  construct->add_option("--out", cons.out_path, "output path or -");

  // spectral ---------------------------------------------------------------
  struct {
    std::string in_path = "-";
    std::string out_path = "-";
    double tol = 1e-10;
  } spec;
  CLI::App* spectral_cmd = app.add_subcommand("spectral", "spectral radius and degree bound");
  spectral_cmd->add_option("--in", spec.in_path, "graph6 input path or -");
  spectral_cmd->add_option("--tol", spec.tol, "relative residual tolerance");
  spectral_cmd->add_option("--out", spec.out_path, "output path or -");

  // factor -----------------------------------------------------------------
  struct {
    std::string in_path = "-";
    std::string out_path = "-";
    int k = 1;
    std::string method = "gadget";
    int guard = 14;
    long long max_edges = 24;
  } fac;
  CLI::App* factor_cmd = app.add_subcommand("factor", "decide k-factor existence");
  factor_cmd->add_option("--in", fac.in_path, "graph6 input path or -");
  factor_cmd->add_option("-k", fac.k, "factor degree")->required();
  factor_cmd->add_option("--method", fac.method, "gadget|deficiency|brute")
      ->check(CLI::IsMember({"gadget", "deficiency", "brute"}));
  factor_cmd->add_option("--guard", fac.guard, "exhaustive witness guard (vertices)");
  factor_cmd->add_option("--max-edges", fac.max_edges, "brute-force edge guard");
  factor_cmd->add_option("--out", fac.out_path, "output path or -");

  // params -------------------------------------------------------------
  struct {
    std::string in_path = "-";
    std::string out_path = "-";
    bool toughness_only = false;
    bool binding_only = false;
    int max_n = 24;
  } par;
  CLI::App* params_cmd = app.add_subcommand("params", "toughness and binding number");
  params_cmd->add_option("--in", par.in_path, "graph6 input path or -");
  params_cmd->add_flag("--toughness", par.toughness_only, "toughness only");
  params_cmd->add_flag("--binding", par.binding_only, "binding number only");
  params_cmd->add_option("--max-n", par.max_n, "enumeration guard");
  params_cmd->add_option("--out", par.out_path, "output path or -");

  // verify ------------------------------------------------------------
  struct {
    std::string in_path = "-";
    std::string out_path = "-";
    std::string theorem;
    int k = 1;
    double tol = 1e-8;
    int max_n = 24;
    bool attest_tough = false;
    bool attest_binding = false;
  } ver;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check one sufficient condition");
  verify_cmd->add_option("--theorem", ver.theorem, "spectral|edge|tough|binding|conjecture")
      ->required()
      ->check(CLI::IsMember({"spectral", "edge", "tough", "binding", "conjecture"}));
  verify_cmd->add_option("--in", ver.in_path, "graph6 input path or -");
  verify_cmd->add_option("-k", ver.k, "factor degree")->required();
  verify_cmd->add_option("--tol", ver.tol, "spectral comparison tolerance");
  verify_cmd->add_option("--max-n", ver.max_n, "toughness/binding guard");
  verify_cmd->add_flag("--attest-tough", ver.attest_tough, "accept 1-toughness unverified");
  verify_cmd->add_flag("--attest-binding", ver.attest_binding, "accept 1-binding unverified");
  verify_cmd->add_option("--out", ver.out_path, "output path or -");

  // sweep --------------------------------------------------------------
  struct {
    int k = 1;
    int n = 10;
    int samples = 100;
    std::uint64_t seed = 0;
    double p_lo = 0.3;
    double p_hi = 0.9;
    int threads = 0;
    std::string out_path = "-";
  } sw;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "seeded random counterexample search");
  sweep_cmd->add_option("-k", sw.k, "factor degree")->required();
  sweep_cmd->add_option("-n", sw.n, "vertex count")->required();
  sweep_cmd->add_option("--samples", sw.samples, "number of sampled graphs")->required();
  sweep_cmd->add_option("--seed", sw.seed, "base seed");
  sweep_cmd->add_option("--p-lo", sw.p_lo, "edge probability low end");
  sweep_cmd->add_option("--p-hi", sw.p_hi, "edge probability high end");
  sweep_cmd->add_option("--threads", sw.threads, "worker threads (0 = auto)");
  sweep_cmd->add_option("--out", sw.out_path, "output path or -");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const auto start = Clock::now();
  try {
    if (construct->parsed()) return run_construct(cons, out);

    if (spectral_cmd->parsed()) {
      std::vector<Graph> graphs = read_graphs(spec.in_path, std::cin);
      json report = make_report(
          "spectral", json{{"in", spec.in_path}, {"tol", spec.tol}});
      for (const Graph& g : graphs) {
        json entry;
        entry["graph_summary"] = graph_summary(g);
        entry["spectral"] = to_json(spectral_radius(g, spec.tol));
        if (g.min_degree() >= 1) {
          entry["hong_nikiforov"] = hong_nikiforov_bound(g);
        } else {
          entry["hong_nikiforov"] = nullptr;
          entry["note"] = "degree bound undefined: minimum degree is 0";
        }
        report["results"].push_back(entry);
      }
      emit_report(report, ms_since(start), spec.out_path, out);
      return 0;
    }

    if (factor_cmd->parsed()) {
      std::vector<Graph> graphs = read_graphs(fac.in_path, std::cin);
      json report = make_report(
          "factor", json{{"in", fac.in_path}, {"k", fac.k}, {"method", fac.method}});
      for (const Graph& g : graphs) {
        json entry;
        entry["graph_summary"] = graph_summary(g);
        if (fac.method == "gadget") {
          entry["factor"] = to_json(has_k_factor(g, fac.k, fac.guard));
        } else if (fac.method == "deficiency") {
          auto [min_delta, witness] = min_deficiency(g, fac.k, fac.guard);
          FactorVerdict verdict;
          verdict.exists = min_delta >= 0;
          verdict.method = FactorMethod::deficiency;
          verdict.witness_exhaustive = true;
          if (min_delta < 0) verdict.witness = witness;
          entry["factor"] = to_json(verdict);
          entry["factor"]["min_delta"] = min_delta;
        } else {
          entry["factor"] = to_json(brute_force_factor(g, fac.k, fac.max_edges));
        }
        report["results"].push_back(entry);
      }
      emit_report(report, ms_since(start), fac.out_path, out);
      return 0;
    }

    if (params_cmd->parsed()) {
      std::vector<Graph> graphs = read_graphs(par.in_path, std::cin);
      bool want_toughness = par.toughness_only || !par.binding_only;
      bool want_binding = par.binding_only || !par.toughness_only;
      json report = make_report("params", json{{"in", par.in_path},
                                               {"toughness", want_toughness},
                                               {"binding", want_binding},
                                               {"max_n", par.max_n}});
      for (const Graph& g : graphs) {
        json entry;
        entry["graph_summary"] = graph_summary(g);
        entry["params"] = json::array();
        if (want_toughness) {
          try {
            entry["params"].push_back(to_json(toughness(g, par.max_n)));
          } catch (const param_error& e) {
            entry["params"].push_back(json{{"kind", "toughness"}, {"error", e.what()}});
          }
        }
        if (want_binding) {
          try {
            entry["params"].push_back(to_json(binding_number(g, par.max_n)));
          } catch (const param_error& e) {
            entry["params"].push_back(json{{"kind", "binding"}, {"error", e.what()}});
          }
        }
        report["results"].push_back(entry);
      }
      emit_report(report, ms_since(start), par.out_path, out);
      return 0;
    }

    if (verify_cmd->parsed()) {
      std::vector<Graph> graphs = read_graphs(ver.in_path, std::cin);
      VerifyOptions opts;
      opts.spectral_tol = ver.tol;
      opts.param_guard = ver.max_n;
      opts.attest_tough = ver.attest_tough;
      opts.attest_binding = ver.attest_binding;
      json report = make_report("verify", json{{"in", ver.in_path},
                                               {"theorem", ver.theorem},
                                               {"k", ver.k},
                                               {"tol", ver.tol}});
      bool contradiction = false;
      for (const Graph& g : graphs) {
        TheoremVerdict verdict;
        if (ver.theorem == "spectral")
          verdict = check_spectral_theorem(g, ver.k, opts);
        else if (ver.theorem == "edge")
          verdict = check_edge_theorem(g, ver.k, opts);
        else if (ver.theorem == "tough")
          verdict = check_tough_theorem(g, ver.k, opts);
        else if (ver.theorem == "conjecture")
          verdict = check_conjecture_theorem(g, ver.k, opts);
        else
          verdict = check_binding_corollary(g, ver.k, opts);
        contradiction = contradiction || verdict.contradiction();
        json entry;
        entry["graph_summary"] = graph_summary(g);
        entry["verdict"] = to_json(verdict);
        report["results"].push_back(entry);
      }
      emit_report(report, ms_since(start), ver.out_path, out);
      if (contradiction) {
        err << "contradiction: hypotheses hold, graph is not extremal, no factor\n";
        return 1;
      }
      return 0;
    }

    if (sweep_cmd->parsed()) {
      SweepOptions opts;
      opts.p_lo = sw.p_lo;
      opts.p_hi = sw.p_hi;
      opts.threads = sw.threads;
      SweepReport result = sweep(sw.k, sw.n, sw.samples, sw.seed, opts);
      json report = make_report("sweep", json{{"k", sw.k},
                                              {"n", sw.n},
                                              {"samples", sw.samples},
                                              {"seed", sw.seed},
                                              {"p_lo", sw.p_lo},
                                              {"p_hi", sw.p_hi}});
      report["results"].push_back(to_json(result));
      emit_report(report, ms_since(start), sw.out_path, out);
      if (result.total_contradictions > 0) {
        err << "sweep found " << result.total_contradictions << " contradictions\n";
        return 1;
      }
      return 0;
    }
  } catch (const parse_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const param_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const guard_error& e) {
    err << "guard error: " << e.what() << "\n";
    return 2;
  } catch (const sampler_error& e) {
    err << "sampler error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace kfactor
