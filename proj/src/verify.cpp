#include "kfactor/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "kfactor/errors.hpp"
#include "kfactor/families.hpp"
#include "kfactor/spectral.hpp"
#include "kfactor/structure_params.hpp"

namespace kfactor {

std::string theorem_name(TheoremKind kind) {
  switch (kind) {
    case TheoremKind::spectral_threshold: return "spectral";
    case TheoremKind::edge_threshold: return "edge";
    case TheoremKind::tough_spectral: return "tough";
    case TheoremKind::binding_spectral: return "binding";
    case TheoremKind::conjecture_spectral: return "conjecture";
  }
  return "unknown";
}

long long theorem_order_bound(int k) {
  long long kk = k;
  return 13 * kk * kk - 11 * kk - 1;
}

namespace {

void append_note(std::string& note, const std::string& msg) {
  if (!note.empty()) note += "; ";
  note += msg;
}

bool iso_or_note(const Graph& g, const Graph& extremal, int iso_limit, std::string& note) {
  try {
    return is_isomorphic(g, extremal, iso_limit);
  } catch (const guard_error&) {
    append_note(note, "isomorphism check skipped (size guard)");
    return false;
  }
}

void fill_common(HypothesisBreakdown& h, const Graph& g, int k) {
  const long long n = g.vertex_count();
  h.order_ok = n >= theorem_order_bound(k);
  h.min_degree_ok = g.min_degree() >= k;
  h.connected_ok = is_connected(g);
  h.parity_ok = (static_cast<long long>(k) * n) % 2 == 0;
}

void finish(TheoremVerdict& v, const Graph& g, int k, const VerifyOptions& opts) {
  v.hypotheses_hold = v.hypotheses.all_hold();
  if (!v.hypotheses.parity_ok) append_note(v.note, "vacuous: k·n odd");
  v.evidence = has_k_factor(g, k, opts.exhaustive_guard);
  v.conclusion_checked = true;
  v.conclusion_holds = v.evidence->exists;
}

}  // namespace

TheoremVerdict check_spectral_theorem(const Graph& g, int k, const VerifyOptions& opts) {
  if (k < 1) throw param_error("check_spectral_theorem: k must be at least 1");
  TheoremVerdict v;
  v.theorem = TheoremKind::spectral_threshold;
  const int n = g.vertex_count();
  v.hypotheses.k_range_ok = true;
  fill_common(v.hypotheses, g, k);
  v.hypotheses.extremal_defined = n >= 2 * k + 2;
  if (v.hypotheses.extremal_defined) {
    FamilyInstance fam = g1_family(n, k);
    ThresholdComparison cmp = compare_to_threshold(g, fam.graph, opts.spectral_tol);
    v.rho_graph = cmp.rho_graph;
    v.rho_extremal = cmp.rho_threshold;
    v.spectral_gap = cmp.gap;
    v.hypotheses.threshold_ok = cmp.order != ThresholdOrder::below;
    if (cmp.order == ThresholdOrder::equal_within_tol)
      v.extremal_hit = iso_or_note(g, fam.graph, opts.iso_limit, v.note);
  } else {
    append_note(v.note, "threshold graph undefined at this (n,k)");
  }
  finish(v, g, k, opts);
  return v;
}

TheoremVerdict check_edge_theorem(const Graph& g, int k, const VerifyOptions& opts) {
  if (k < 1) throw param_error("check_edge_theorem: k must be at least 1");
  TheoremVerdict v;
  v.theorem = TheoremKind::edge_threshold;
  const int n = g.vertex_count();
  v.hypotheses.k_range_ok = true;
  fill_common(v.hypotheses, g, k);
  const long long threshold = family_edge_threshold(n, k);
  v.edge_gap = g.edge_count() - threshold;
  v.hypotheses.threshold_ok = v.edge_gap > 0;  // strict inequality, no exception case
  if (v.edge_gap == 0) {
    append_note(v.note, "edge count equals the threshold exactly");
    if (n >= 2 * k + 2)
      v.extremal_hit = iso_or_note(g, g1_family(n, k).graph, opts.iso_limit, v.note);
  }
  finish(v, g, k, opts);
  return v;
}

TheoremVerdict check_tough_theorem(const Graph& g, int k, const VerifyOptions& opts) {
  if (k < 1) throw param_error("check_tough_theorem: k must be at least 1");
  TheoremVerdict v;
  v.theorem = TheoremKind::tough_spectral;
  const int n = g.vertex_count();
  v.hypotheses.k_range_ok = k >= 3;
  fill_common(v.hypotheses, g, k);
  v.hypotheses.extremal_defined = k >= 3 && n >= 2 * k + 3;

  if (!v.hypotheses.connected_ok) {
    v.hypotheses.gate_ok = false;  // a disconnected graph is not 1-tough
  } else if (n <= opts.param_guard) {
    ToughnessCheck tough = is_t_tough(g, 1, 1, opts.param_guard);
    v.hypotheses.gate_ok = tough.tough;
    if (tough.vacuous) append_note(v.note, "toughness gate vacuous (complete graph)");
  } else if (opts.attest_tough) {
    v.hypotheses.gate_ok = true;
    v.hypotheses.gate_attested = true;
    append_note(v.note, "1-toughness attested by caller, not certified");
  } else {
    throw guard_error("check_tough_theorem: n=" + std::to_string(n) +
                      " exceeds the toughness guard and no attestation was given");
  }

  if (v.hypotheses.extremal_defined) {
    FamilyInstance fam = g2_family(n, k);
    ThresholdComparison cmp = compare_to_threshold(g, fam.graph, opts.spectral_tol);
    v.rho_graph = cmp.rho_graph;
    v.rho_extremal = cmp.rho_threshold;
    v.spectral_gap = cmp.gap;
    v.hypotheses.threshold_ok = cmp.order != ThresholdOrder::below;
    if (cmp.order == ThresholdOrder::equal_within_tol)
      v.extremal_hit = iso_or_note(g, fam.graph, opts.iso_limit, v.note);
  } else {
    append_note(v.note, "threshold graph undefined at this (n,k)");
  }
  finish(v, g, k, opts);
  return v;
}

TheoremVerdict check_binding_corollary(const Graph& g, int k, const VerifyOptions& opts) {
  if (k < 1) throw param_error("check_binding_corollary: k must be at least 1");
  TheoremVerdict v;
  v.theorem = TheoremKind::binding_spectral;
  const int n = g.vertex_count();
  v.hypotheses.k_range_ok = k >= 2;
  fill_common(v.hypotheses, g, k);
  v.hypotheses.extremal_defined = n >= 2 * k + 2;

  if (n <= opts.param_guard) {
    ParamReport b = binding_number(g, opts.param_guard);
    v.hypotheses.gate_ok = b.value >= Rational(1, 1);
    append_note(v.note, "binding number " + b.value.str());
  } else if (opts.attest_binding) {
    v.hypotheses.gate_ok = true;
    v.hypotheses.gate_attested = true;
    append_note(v.note, "1-binding attested by caller, not certified");
  } else {
    throw guard_error("check_binding_corollary: n=" + std::to_string(n) +
                      " exceeds the binding guard and no attestation was given");
  }

  if (v.hypotheses.extremal_defined) {
    FamilyInstance fam = g1_family(n, k);
    ThresholdComparison cmp = compare_to_threshold(g, fam.graph, opts.spectral_tol);
    v.rho_graph = cmp.rho_graph;
    v.rho_extremal = cmp.rho_threshold;
    v.spectral_gap = cmp.gap;
    v.hypotheses.threshold_ok = cmp.order != ThresholdOrder::below;
    if (cmp.order == ThresholdOrder::equal_within_tol)
      v.extremal_hit = iso_or_note(g, fam.graph, opts.iso_limit, v.note);
  } else {
    append_note(v.note, "threshold graph undefined at this (n,k)");
  }
  finish(v, g, k, opts);
  return v;
}

TheoremVerdict check_conjecture_theorem(const Graph& g, int k, const VerifyOptions& opts) {
  if (k < 1) throw param_error("check_conjecture_theorem: k must be at least 1");
  TheoremVerdict v;
  v.theorem = TheoremKind::conjecture_spectral;
  const int n = g.vertex_count();
  v.hypotheses.k_range_ok = true;
  v.hypotheses.order_ok = n >= 4 * k - 1;
  // no minimum-degree or connectivity hypothesis in this statement
  v.hypotheses.min_degree_ok = true;
  v.hypotheses.connected_ok = true;
  v.hypotheses.parity_ok = (static_cast<long long>(k) * n) % 2 == 0;
  v.hypotheses.extremal_defined = n >= k + 1;
  if (v.hypotheses.extremal_defined) {
    Graph extremal = conjecture_extremal(n, k);
    ThresholdComparison cmp = compare_to_threshold(g, extremal, opts.spectral_tol);
    v.rho_graph = cmp.rho_graph;
    v.rho_extremal = cmp.rho_threshold;
    v.spectral_gap = cmp.gap;
    v.hypotheses.threshold_ok = cmp.order == ThresholdOrder::above;  // strict inequality
    if (cmp.order == ThresholdOrder::equal_within_tol)
      v.extremal_hit = iso_or_note(g, extremal, opts.iso_limit, v.note);
  } else {
    append_note(v.note, "threshold graph undefined at this (n,k)");
  }
  finish(v, g, k, opts);
  return v;
}

bool binomial_shift_inequality(long long a, long long b) {
  if (!(a >= b && b >= 3))
    throw param_error("binomial_shift_inequality: requires a >= b >= 3");
  auto choose2 = [](long long x) { return x * (x - 1) / 2; };
  return choose2(a) + choose2(b) < choose2(a + 1) + choose2(b - 1);
}

namespace {

void tally_verdict(TheoremTally& tally, const TheoremVerdict& v) {
  ++tally.evaluated;
  if (v.hypotheses_hold) {
    ++tally.hypotheses_met;
    if (v.conclusion_holds) ++tally.conclusion_verified;
  }
  if (v.extremal_hit) ++tally.extremal_hits;
  if (v.contradiction()) ++tally.contradictions;
}

}  // namespace

SweepReport sweep(int k, int n, int samples, std::uint64_t seed, const SweepOptions& opts) {
  if (k < 1) throw param_error("sweep: k must be at least 1");
  if (n < 1) throw param_error("sweep: n must be positive");
  if (samples < 0) throw param_error("sweep: samples must be non-negative");
  if ((static_cast<long long>(k) * n) % 2 != 0)
    throw param_error("sweep: k·n must be even");
  if (!(opts.p_lo >= 0.0 && opts.p_hi <= 1.0 && opts.p_lo <= opts.p_hi))
    throw param_error("sweep: p range must satisfy 0 <= lo <= hi <= 1");

  SweepReport report;
  report.k = k;
  report.n = n;
  report.samples = samples;
  report.seed = seed;
  report.p_lo = opts.p_lo;
  report.p_hi = opts.p_hi;
  report.g1_defined = n >= 2 * k + 2;
  report.g2_defined = k >= 3 && n >= 2 * k + 3;
  report.conj_defined = n >= k + 1;
  if (report.g1_defined) report.rho_g1 = spectral_radius(g1_family(n, k).graph).rho;
  if (report.g2_defined) report.rho_g2 = spectral_radius(g2_family(n, k).graph).rho;
  if (report.conj_defined) report.rho_conj = spectral_radius(conjecture_extremal(n, k)).rho;

  const bool binding_applicable = k >= 2;
  const bool tough_applicable = k >= 3;
  const bool params_in_guard = n <= opts.verify.param_guard;

  int workers = opts.threads > 0 ? opts.threads
                                 : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, std::max(1, samples));

  std::vector<SweepReport> locals(workers);
  std::vector<std::exception_ptr> failures(workers);
  std::atomic<int> next{0};

  auto work = [&](int w) {
    try {
      SweepReport& local = locals[w];
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= samples) break;
        std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(i));
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        double p = opts.p_lo + (opts.p_hi - opts.p_lo) * u;
        std::uint64_t gseed = rng();
        RandomGraphOptions sampler;
        sampler.require_connected = true;
        sampler.min_degree = k;
        sampler.max_retries = opts.sampler_retries;
        Graph g = random_graph(n, p, gseed, sampler);

        TheoremVerdict sv = check_spectral_theorem(g, k, opts.verify);
        tally_verdict(local.spectral, sv);
        if (sv.contradiction()) local.contradiction_samples.push_back(i);

        TheoremVerdict ev = check_edge_theorem(g, k, opts.verify);
        tally_verdict(local.edge, ev);
        if (ev.contradiction()) local.contradiction_samples.push_back(i);

        TheoremVerdict cv = check_conjecture_theorem(g, k, opts.verify);
        tally_verdict(local.conjecture, cv);
        if (cv.contradiction()) local.contradiction_samples.push_back(i);

        if (tough_applicable) {
          if (params_in_guard) {
            TheoremVerdict tv = check_tough_theorem(g, k, opts.verify);
            tally_verdict(local.tough, tv);
            if (tv.contradiction()) local.contradiction_samples.push_back(i);
          } else {
            ++local.tough.skipped_guard;
          }
        }
        if (binding_applicable) {
          if (params_in_guard) {
            TheoremVerdict bv = check_binding_corollary(g, k, opts.verify);
            tally_verdict(local.binding, bv);
            if (bv.contradiction()) local.contradiction_samples.push_back(i);
          } else {
            ++local.binding.skipped_guard;
          }
        }
      }
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);

  auto merge = [](TheoremTally& into, const TheoremTally& from) {
    into.evaluated += from.evaluated;
    into.hypotheses_met += from.hypotheses_met;
    into.conclusion_verified += from.conclusion_verified;
    into.extremal_hits += from.extremal_hits;
    into.contradictions += from.contradictions;
    into.skipped_guard += from.skipped_guard;
  };
  for (const SweepReport& local : locals) {
    merge(report.spectral, local.spectral);
    merge(report.edge, local.edge);
    merge(report.tough, local.tough);
    merge(report.binding, local.binding);
    merge(report.conjecture, local.conjecture);
    report.contradiction_samples.insert(report.contradiction_samples.end(),
                                        local.contradiction_samples.begin(),
                                        local.contradiction_samples.end());
  }
  std::sort(report.contradiction_samples.begin(), report.contradiction_samples.end());
  report.total_contradictions = report.spectral.contradictions + report.edge.contradictions +
                                report.tough.contradictions + report.binding.contradictions +
                                report.conjecture.contradictions;
  return report;
}

}  // namespace kfactor
