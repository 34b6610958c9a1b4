#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kfactor/factoring.hpp"
#include "kfactor/graph.hpp"

namespace kfactor {

/// The five sufficient conditions this library can check mechanically:
/// spectral-radius threshold (with minimum-degree hypothesis), edge-count
/// threshold, the 1-tough variant, the 1-binding variant, and the
/// degree-free spectral condition with the K_{a-1} ∨ (K_{n-a} ∪ K_1)
/// threshold instantiated at a = k.
enum class TheoremKind {
  spectral_threshold,
  edge_threshold,
  tough_spectral,
  binding_spectral,
  conjecture_spectral
};

std::string theorem_name(TheoremKind kind);

struct HypothesisBreakdown {
  bool k_range_ok = false;        ///< k within the theorem's range
  bool order_ok = false;          ///< n >= 13k² - 11k - 1
  bool min_degree_ok = false;     ///< δ(g) >= k
  bool connected_ok = false;
  bool parity_ok = false;         ///< k·n even (implicit in the statements)
  bool extremal_defined = true;   ///< threshold graph constructible at (n,k)
  bool gate_ok = true;            ///< 1-tough / 1-binding gate; true when n/a
  bool gate_attested = false;     ///< gate accepted on caller attestation
  bool threshold_ok = false;      ///< spectral or edge threshold met

  bool all_hold() const {
    return k_range_ok && order_ok && min_degree_ok && connected_ok && parity_ok &&
           extremal_defined && gate_ok && threshold_ok;
  }
};

/// Outcome of checking one theorem against one graph. A contradiction
/// (hypotheses hold, graph not the extremal exception, conclusion fails)
/// would falsify the statement being checked and is never expected.
struct TheoremVerdict {
  TheoremKind theorem = TheoremKind::spectral_threshold;
  HypothesisBreakdown hypotheses;
  bool hypotheses_hold = false;
  bool conclusion_checked = false;
  bool conclusion_holds = false;  ///< k-factor exists
  bool extremal_hit = false;      ///< isomorphic to the threshold graph
  std::optional<FactorVerdict> evidence;
  double rho_graph = 0.0;
  double rho_extremal = 0.0;
  double spectral_gap = 0.0;  ///< rho(g) - rho(extremal)
  long long edge_gap = 0;     ///< e(g) - edge threshold (edge theorem only)
  std::string note;

  bool contradiction() const {
    return hypotheses_hold && !extremal_hit && conclusion_checked && !conclusion_holds;
  }
};

struct VerifyOptions {
  double spectral_tol = 1e-8;  ///< equality band for threshold comparisons
  int param_guard = 24;        ///< toughness/binding enumeration guard
  int iso_limit = 32;
  int exhaustive_guard = 14;   ///< witness search guard inside has_k_factor
  bool attest_tough = false;   ///< caller vouches the graph is 1-tough
  bool attest_binding = false; ///< caller vouches binding number >= 1
};

/// Order bound common to all four statements: 13k² - 11k - 1.
long long theorem_order_bound(int k);

/// ρ(G) >= ρ(G¹ₙ,ₖ) with δ >= k forces a k-factor unless G ≅ G¹ₙ,ₖ.
TheoremVerdict check_spectral_theorem(const Graph& g, int k, const VerifyOptions& opts = {});

/// e(G) > C(n-k-1,2) + k(k+1) + k - 1 with δ >= k forces a k-factor.
TheoremVerdict check_edge_theorem(const Graph& g, int k, const VerifyOptions& opts = {});

/// For 1-tough G with k >= 3: ρ(G) >= ρ(G²ₙ,ₖ) forces a k-factor unless
/// G ≅ G²ₙ,ₖ. Throws guard_error when toughness cannot be certified within
/// the guard and no attestation is given.
TheoremVerdict check_tough_theorem(const Graph& g, int k, const VerifyOptions& opts = {});

/// For 1-binding G with k >= 2: ρ(G) >= ρ(G¹ₙ,ₖ) forces a k-factor unless
/// G ≅ G¹ₙ,ₖ.
TheoremVerdict check_binding_corollary(const Graph& g, int k, const VerifyOptions& opts = {});

/// Degree-free variant: for any graph of order n >= 4k-1 with k·n even,
/// ρ(G) > ρ(K_{k-1} ∨ (K_{n-k} ∪ K_1)) (strict) forces a k-factor. No
/// minimum-degree or connectivity hypothesis; the threshold graph itself
/// sits at equality with one vertex of degree k-1 and no k-factor.
TheoremVerdict check_conjecture_theorem(const Graph& g, int k, const VerifyOptions& opts = {});

/// C(a,2) + C(b,2) < C(a+1,2) + C(b-1,2), checked in exact integers.
/// Holds for every a >= b >= 3 (shifting one unit from the smaller part to
/// the larger strictly gains edges). Throws param_error outside that range.
bool binomial_shift_inequality(long long a, long long b);

struct TheoremTally {
  int evaluated = 0;
  int hypotheses_met = 0;
  int conclusion_verified = 0;  ///< hypotheses held and a k-factor was found
  int extremal_hits = 0;
  int contradictions = 0;
  int skipped_guard = 0;  ///< gate not certifiable within the guard
};

struct SweepOptions {
  double p_lo = 0.3;
  double p_hi = 0.9;
  int threads = 0;  ///< 0 = hardware concurrency
  VerifyOptions verify;
  int sampler_retries = 1000;
};

struct SweepReport {
  int k = 0;
  int n = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  double p_lo = 0.0, p_hi = 0.0;
  bool g1_defined = false, g2_defined = false, conj_defined = false;
  double rho_g1 = 0.0, rho_g2 = 0.0;  ///< threshold radii, recorded not ordered
  double rho_conj = 0.0;
  TheoremTally spectral, edge, tough, binding, conjecture;
  int total_contradictions = 0;
  std::vector<int> contradiction_samples;
};

/// Seeded random counterexample search: `samples` connected graphs with
/// δ >= k are drawn (sample i uses seed ^ i) and every applicable checker
/// runs on each. Deterministic regardless of worker count. Requires k·n
/// even; sampler infeasibility propagates.
SweepReport sweep(int k, int n, int samples, std::uint64_t seed, const SweepOptions& opts = {});

}  // namespace kfactor
