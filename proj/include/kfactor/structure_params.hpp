#pragma once

#include <optional>
#include <string>

#include "kfactor/graph.hpp"

namespace kfactor {

/// Exact rational with normalized sign and gcd-reduced terms. The toughness
/// and binding computations never touch floating point: 1-tough versus
/// (1-ε)-tough is a meaningful distinction here.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }
};

enum class ParamKind { toughness, binding };

struct ParamReport {
  ParamKind kind = ParamKind::toughness;
  Rational value;
  VertexSet witness;
  int component_count = 0;  ///< c(G - witness); toughness only
  VertexSet neighborhood;   ///< N(witness); binding only
};

/// Exact toughness min{|S|/c(G-S) : c(G-S) > 1} by exhaustive enumeration,
/// subsets by increasing size with a size-level lower-bound cutoff. Ties
/// break toward smaller |S|, then lexicographically smaller S.
/// Requires a connected, non-complete graph and n <= max_n.
ParamReport toughness(const Graph& g, int max_n = 24);

struct ToughnessCheck {
  bool tough = false;
  bool vacuous = false;  ///< no qualifying cut set exists (complete graph)
  std::optional<VertexSet> violating;
};

/// Decides |S| >= t·c(G-S) for all cut sets S, early-exiting with the first
/// violating S found (smallest, then lexicographically least).
ToughnessCheck is_t_tough(const Graph& g, long long t_num, long long t_den, int max_n = 24);

/// Exact binding number min{|N(S)|/|S| : S nonempty, |N(S)| < n}. Ties
/// break toward larger |S|, then lexicographically smaller S.
ParamReport binding_number(const Graph& g, int max_n = 24);

}  // namespace kfactor
