#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace kfactor {

using Vertex = int;

/// Sorted, duplicate-free set of vertex ids. Carrier for the S/T/cut sets
/// that the deficiency, toughness and binding computations pass around.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph over dense vertex ids 0..n-1.
/// Adjacency lists are kept sorted so that every downstream iteration
/// order (witnesses, certificates, DOT output) is deterministic.
class Graph {
 public:
  Graph() = default;

  /// Graph on n vertices with no edges.
  explicit Graph(int n);

  /// Builds from an edge list. Self-loops are rejected; duplicate edges
  /// (in either orientation) are added once.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int vertex_count() const { return n_; }
  long long edge_count() const { return edge_count_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Minimum degree; 0 for the empty graph.
  int min_degree() const;

  /// All edges as (u,v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Rechecks the representation invariants (adjacency symmetry, sortedness,
  /// no loops/multi-edges, cached edge count). Throws std::logic_error on
  /// violation. Cheap enough to call from tests on every constructed graph.
  void validate() const;

 private:
  int n_ = 0;
  long long edge_count_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

// -- constructors and combinators --------------------------------------

/// K_n.
Graph complete(int n);

/// n isolated vertices.
Graph empty_graph(int n);

/// Cycle C_n (n >= 3).
Graph cycle(int n);

/// Path P_n on n vertices.
Graph path(int n);

/// Join: disjoint union plus all edges between the two parts. Vertex ids of
/// g2 are shifted by g1.vertex_count().
Graph join(const Graph& g1, const Graph& g2);

/// Disjoint union, g2's ids shifted by g1.vertex_count().
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Relabels vertices: vertex v of g becomes perm[v]. perm must be a
/// permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

// -- analysis -----------------------------------------------------------

/// Connected components of g - removed, each a sorted VertexSet, ordered by
/// their minimum vertex id. `removed` must be a sorted subset of V(g).
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed = {});

bool is_connected(const Graph& g);

// -- random sampling ------------------------------------------------------

struct RandomGraphOptions {
  bool require_connected = false;
  int min_degree = 0;
  int max_retries = 1000;
};

/// Erdős–Rényi G(n,p) sample, fully determined by (n, p, seed); resampled
/// until the connectivity / minimum-degree constraints hold. Throws
/// sampler_error after the retry budget is exhausted.
Graph random_graph(int n, double p, std::uint64_t seed,
                   const RandomGraphOptions& opts = {});

/// Uniformly random permutation of 0..n-1, deterministic for a given seed.
std::vector<Vertex> random_permutation(int n, std::uint64_t seed);

// -- isomorphism ---------------------------------------------------------

/// Exact isomorphism test via degree-partition refinement plus backtracking.
/// Intended for small graphs; throws guard_error when either graph exceeds
/// `size_limit` vertices.
bool is_isomorphic(const Graph& g1, const Graph& g2, int size_limit = 32);

}  // namespace kfactor
