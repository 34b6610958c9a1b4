#pragma once

#include <vector>

#include "kfactor/graph.hpp"

namespace kfactor {

/// Adjacency spectral radius estimate with its Perron vector.
struct SpectralResult {
  double rho = 0.0;
  /// Perron vector scaled to unit maximum entry. Strictly positive for
  /// connected graphs; zero outside the achieving component otherwise.
  std::vector<double> perron;
  double residual = 0.0;  ///< inf-norm of A·x - rho·x at the returned iterate
  int iterations = 0;
  bool converged = true;
};

struct SpectralOptions {
  double tol = 1e-10;        ///< relative residual target
  int max_iterations = 0;    ///< 0 means 100·n
};

/// Spectral radius via power iteration on A+I (the shift keeps bipartite
/// graphs from oscillating), started from the all-ones vector, reported as
/// the Rayleigh quotient of the final iterate. Disconnected graphs are
/// handled per component and the maximum is returned.
SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opts = {});
SpectralResult spectral_radius(const Graph& g, double tol);

/// (δ-1)/2 + sqrt(2e - nδ + (δ+1)²/4): an upper bound for the spectral
/// radius of any graph with minimum degree δ >= 1, tight exactly for
/// δ-regular graphs and for bidegreed graphs whose degrees are δ and n-1.
double hong_nikiforov_bound(const Graph& g);

/// Rewires every edge v-w with w in N(v) \ (N(u) ∪ {u}) into u-w and
/// returns the resulting graph. Edge count is preserved. Throws param_error
/// when the shift set is empty. Moving the edges toward a vertex with a
/// no-smaller Perron entry strictly increases the spectral radius.
Graph edge_shift(const Graph& g, Vertex u, Vertex v);

enum class ThresholdOrder { below, equal_within_tol, above };

struct ThresholdComparison {
  ThresholdOrder order = ThresholdOrder::equal_within_tol;
  double gap = 0.0;  ///< rho(g) - rho(threshold graph)
  double rho_graph = 0.0;
  double rho_threshold = 0.0;
  bool converged = true;
};

/// Compares rho(g) against rho(extremal), computing both at tol/4 and
/// reporting the band |gap| <= tol as equal_within_tol.
ThresholdComparison compare_to_threshold(const Graph& g, const Graph& extremal,
                                         double tol = 1e-8);

}  // namespace kfactor
