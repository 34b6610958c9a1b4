#include "kfactor/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kfactor/errors.hpp"

namespace kfactor {

namespace {

struct ComponentIteration {
  double rho = 0.0;
  std::vector<double> vec;  // indexed by position within the component
  double residual = 0.0;
  int iterations = 0;
  bool converged = true;
};

// Power iteration on A+I restricted to one component. Vertices of the
// component are given in sorted order; `index_of` maps global ids to
// component positions.
ComponentIteration iterate_component(const Graph& g, const VertexSet& comp,
                                     const std::vector<int>& index_of, double tol,
                                     int max_iterations) {
  const int m = static_cast<int>(comp.size());
  ComponentIteration out;
  out.vec.assign(m, 1.0 / std::sqrt(static_cast<double>(m)));
  std::vector<double> next(m, 0.0);

  double mu = 1.0;
  double resid = 0.0;
  for (int iter = 1; iter <= max_iterations; ++iter) {
    // next = (A+I) vec
    for (int i = 0; i < m; ++i) {
      double acc = out.vec[i];
      for (Vertex w : g.neighbors(comp[i])) acc += out.vec[index_of[w]];
      next[i] = acc;
    }
    // Rayleigh quotient of the shifted matrix (vec has unit 2-norm).
    mu = 0.0;
    for (int i = 0; i < m; ++i) mu += out.vec[i] * next[i];

    resid = 0.0;
    for (int i = 0; i < m; ++i) resid = std::max(resid, std::abs(next[i] - mu * out.vec[i]));

    double norm = 0.0;
    for (double x : next) norm += x * x;
    norm = std::sqrt(norm);
    for (int i = 0; i < m; ++i) out.vec[i] = next[i] / norm;

    out.iterations = iter;
    // A component with an edge has rho >= 1, so tol·max(rho,1) never
    // relaxes the |A·x - ρ·x| <= tol·ρ contract; singletons are exact.
    if (resid <= tol * std::max(mu - 1.0, 1.0)) {
      // Residual of the final normalized iterate; A and A+I share it.
      double final_resid = 0.0;
      double mu2 = 0.0;
      for (int i = 0; i < m; ++i) {
        double acc = out.vec[i];
        for (Vertex w : g.neighbors(comp[i])) acc += out.vec[index_of[w]];
        next[i] = acc;
        mu2 += out.vec[i] * acc;
      }
      for (int i = 0; i < m; ++i)
        final_resid = std::max(final_resid, std::abs(next[i] - mu2 * out.vec[i]));
      out.rho = mu2 - 1.0;
      out.residual = final_resid;
      out.converged = true;
      return out;
    }
  }
  out.rho = mu - 1.0;
  out.residual = resid;
  out.converged = false;
  return out;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opts) {
  const int n = g.vertex_count();
  if (n < 1) throw param_error("spectral_radius: graph must have at least one vertex");
  const int max_iterations =
      opts.max_iterations > 0 ? opts.max_iterations : 100 * std::max(n, 10);

  std::vector<int> index_of(n, -1);
  SpectralResult best;
  best.perron.assign(n, 0.0);
  best.rho = -1.0;
  int total_iterations = 0;
  bool all_converged = true;

  for (const VertexSet& comp : components(g)) {
    for (std::size_t i = 0; i < comp.size(); ++i) index_of[comp[i]] = static_cast<int>(i);
    ComponentIteration it = iterate_component(g, comp, index_of, opts.tol, max_iterations);
    total_iterations += it.iterations;
    all_converged = all_converged && it.converged;
    if (it.rho > best.rho) {
      best.rho = it.rho;
      best.residual = it.residual;
      std::fill(best.perron.begin(), best.perron.end(), 0.0);
      double vmax = 0.0;
      for (double x : it.vec) vmax = std::max(vmax, x);
      for (std::size_t i = 0; i < comp.size(); ++i) best.perron[comp[i]] = it.vec[i] / vmax;
    }
  }
  best.iterations = total_iterations;
  best.converged = all_converged;
  return best;
}

SpectralResult spectral_radius(const Graph& g, double tol) {
  SpectralOptions opts;
  opts.tol = tol;
  return spectral_radius(g, opts);
}

double hong_nikiforov_bound(const Graph& g) {
  const int delta = g.min_degree();
  if (delta < 1) throw param_error("hong_nikiforov_bound: minimum degree must be at least 1");
  const double n = static_cast<double>(g.vertex_count());
  const double e = static_cast<double>(g.edge_count());
  const double d = static_cast<double>(delta);
  return (d - 1.0) / 2.0 + std::sqrt(2.0 * e - n * d + (d + 1.0) * (d + 1.0) / 4.0);
}

Graph edge_shift(const Graph& g, Vertex u, Vertex v) {
  const int n = g.vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n || u == v)
    throw param_error("edge_shift: invalid vertex pair");
  VertexSet shifted;
  for (Vertex w : g.neighbors(v))
    if (w != u && !g.has_edge(u, w)) shifted.push_back(w);
  if (shifted.empty())
    throw param_error("edge_shift: N(v) \\ (N(u) ∪ {u}) is empty, nothing to shift");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.edge_count()));
  for (auto [a, b] : g.edges()) {
    bool drop = (a == v && std::binary_search(shifted.begin(), shifted.end(), b)) ||
                (b == v && std::binary_search(shifted.begin(), shifted.end(), a));
    if (!drop) edges.emplace_back(a, b);
  }
  for (Vertex w : shifted) edges.emplace_back(std::min(u, w), std::max(u, w));
  return Graph::from_edges(n, edges);
}

ThresholdComparison compare_to_threshold(const Graph& g, const Graph& extremal, double tol) {
  if (g.vertex_count() < 1 || extremal.vertex_count() < 1)
    throw param_error("compare_to_threshold: graphs must be nonempty");
  SpectralResult a = spectral_radius(g, tol / 4.0);
  SpectralResult b = spectral_radius(extremal, tol / 4.0);
  ThresholdComparison cmp;
  cmp.rho_graph = a.rho;
  cmp.rho_threshold = b.rho;
  cmp.gap = a.rho - b.rho;
  cmp.converged = a.converged && b.converged;
  if (std::abs(cmp.gap) <= tol)
    cmp.order = ThresholdOrder::equal_within_tol;
  else
    cmp.order = cmp.gap > 0 ? ThresholdOrder::above : ThresholdOrder::below;
  return cmp;
}

}  // namespace kfactor
