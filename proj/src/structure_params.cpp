#include "kfactor/structure_params.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "kfactor/errors.hpp"

namespace kfactor {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw param_error("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

namespace {

constexpr int kMaskLimit = 30;

struct MaskGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;
  std::uint32_t full = 0;

  explicit MaskGraph(const Graph& g) : n(g.vertex_count()), adj(n, 0) {
    full = n >= 32 ? ~0u : (1u << n) - 1;
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w : g.neighbors(v)) adj[v] |= 1u << w;
  }

  int component_count(std::uint32_t removed) const {
    std::uint32_t rest = full & ~removed;
    int count = 0;
    while (rest) {
      std::uint32_t comp = rest & (~rest + 1);
      for (;;) {
        std::uint32_t grow = 0;
        for (std::uint32_t m = comp; m;) {
          int v = std::countr_zero(m);
          m &= m - 1;
          grow |= adj[v] & rest;
        }
        grow &= ~comp;
        if (!grow) break;
        comp |= grow;
      }
      ++count;
      rest &= ~comp;
    }
    return count;
  }

  std::uint32_t neighborhood(std::uint32_t s) const {
    std::uint32_t out = 0;
    for (std::uint32_t m = s; m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      out |= adj[v];
    }
    return out;
  }
};

VertexSet decode_mask(std::uint32_t mask) {
  VertexSet out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

bool is_complete_graph(const Graph& g) {
  long long n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

void check_guard(const Graph& g, int max_n, const char* op) {
  if (g.vertex_count() > max_n)
    throw guard_error(std::string(op) + ": n=" + std::to_string(g.vertex_count()) +
                      " exceeds guard " + std::to_string(max_n));
  if (g.vertex_count() > kMaskLimit)
    throw guard_error(std::string(op) + ": n > " + std::to_string(kMaskLimit) +
                      " is not enumerable");
}

// Visits all size-r subsets of 0..n-1 in lexicographic order on the sorted
// vertex sequence. Returns false when the visitor stops the scan.
template <typename Visit>
bool for_each_combination(int n, int r, Visit&& visit) {
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    std::uint32_t mask = 0;
    for (int i : idx) mask |= 1u << i;
    if (!visit(mask)) return false;
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

ParamReport toughness(const Graph& g, int max_n) {
  check_guard(g, max_n, "toughness");
  const int n = g.vertex_count();
  if (is_complete_graph(g))
    throw param_error("toughness: undefined for complete graphs");
  if (!is_connected(g)) throw param_error("toughness: graph must be connected");

  MaskGraph mg(g);
  bool have = false;
  Rational best;
  std::uint32_t best_mask = 0;
  int best_components = 0;

  for (int size = 1; size <= n - 2; ++size) {
    // |S|/c >= size/(n-size) for every S of this size; once that floor
    // passes the incumbent, no larger size can win
    if (have && Rational(size, n - size) >= best) break;
    for_each_combination(n, size, [&](std::uint32_t mask) {
      int c = mg.component_count(mask);
      if (c > 1) {
        Rational val(size, c);
        if (!have || val < best) {
          have = true;
          best = val;
          best_mask = mask;
          best_components = c;
        }
      }
      return true;
    });
  }
  if (!have) throw param_error("toughness: no disconnecting set found");

  ParamReport report;
  report.kind = ParamKind::toughness;
  report.value = best;
  report.witness = decode_mask(best_mask);
  report.component_count = best_components;
  return report;
}

ToughnessCheck is_t_tough(const Graph& g, long long t_num, long long t_den, int max_n) {
  if (t_num < 0 || t_den <= 0) throw param_error("is_t_tough: t must be a non-negative rational");
  check_guard(g, max_n, "is_t_tough");
  if (!is_connected(g)) throw param_error("is_t_tough: graph must be connected");
  const int n = g.vertex_count();

  ToughnessCheck out;
  if (is_complete_graph(g)) {
    out.tough = true;
    out.vacuous = true;
    return out;
  }

  MaskGraph mg(g);
  for (int size = 1; size <= n - 2; ++size) {
    // every S of this size satisfies |S| >= t·c when size >= t·(n-size)
    if (static_cast<long long>(size) * t_den >= t_num * static_cast<long long>(n - size))
      continue;
    bool keep_going = for_each_combination(n, size, [&](std::uint32_t mask) {
      int c = mg.component_count(mask);
      if (c > 1 && static_cast<long long>(size) * t_den < t_num * static_cast<long long>(c)) {
        out.violating = decode_mask(mask);
        return false;
      }
      return true;
    });
    if (!keep_going) {
      out.tough = false;
      return out;
    }
  }
  out.tough = true;
  return out;
}

ParamReport binding_number(const Graph& g, int max_n) {
  check_guard(g, max_n, "binding_number");
  const int n = g.vertex_count();
  if (n < 1) throw param_error("binding_number: graph must have at least one vertex");

  MaskGraph mg(g);
  bool have = false;
  Rational best;
  std::uint32_t best_mask = 0, best_nbhd = 0;

  for (int size = n - 1; size >= 1; --size) {
    for_each_combination(n, size, [&](std::uint32_t mask) {
      std::uint32_t nbhd = mg.neighborhood(mask);
      if (std::popcount(nbhd) < n) {
        Rational val(std::popcount(nbhd), size);
        if (!have || val < best) {
          have = true;
          best = val;
          best_mask = mask;
          best_nbhd = nbhd;
        }
      }
      return true;
    });
  }
  if (!have)
    throw param_error("binding_number: no qualifying set (every nonempty S dominates V)");

  ParamReport report;
  report.kind = ParamKind::binding;
  report.value = best;
  report.witness = decode_mask(best_mask);
  report.neighborhood = decode_mask(best_nbhd);
  return report;
}

}  // namespace kfactor
