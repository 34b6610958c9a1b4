#pragma once

#include <utility>
#include <vector>

#include "kfactor/graph.hpp"

namespace kfactor {

/// One of the parameterized extremal constructions, together with the
/// distinguished vertex sets used to build it. Vertex layout is canonical:
/// the K_k join part first (ids 0..k-1), then the independent part
/// (k+1 vertices), then the big clique with its "attachment" vertex first.
struct FamilyInstance {
  Graph graph;
  VertexSet clique_set;        ///< the K_k join part
  VertexSet independent_set;   ///< the (k+1)K_1 part
  VertexSet big_clique;        ///< the K_{n-2k-1} part
  std::vector<Edge> extra_edges;  ///< independent-part -> big-clique edges
  int n = 0;
  int k = 0;
};

/// K_k ∨ ((k+1)K_1 ∪ K_{n-2k-1}) plus k-1 edges from k-1 distinct
/// independent vertices to the first big-clique vertex. Minimum degree is
/// exactly k and the edge count is C(n-k-1,2) + k(k+1) + k-1, which this
/// family attains with equality against the edge threshold.
/// Requires k >= 1 and n >= 2k+2.
FamilyInstance g1_family(int n, int k);

/// Same base as g1_family but the k-1 extra endpoints are split: k-2 edges
/// go from independent vertices v1..v_{k-2} to the first big-clique vertex,
/// and one more edge from v1 to the second big-clique vertex.
/// Requires k >= 3 and n >= 2k+3.
FamilyInstance g2_family(int n, int k);

/// K_{a-1} ∨ (K_{n-a} ∪ K_1): the threshold graph of the general
/// degree-factor conjecture; at a = k it is the extremal for graphs without
/// the minimum-degree hypothesis. Requires a >= 1 and n >= a+1.
Graph conjecture_extremal(int n, int a);

/// Exact edge count of g1_family / g2_family: C(n-k-1,2) + k(k+1) + k-1.
long long family_edge_threshold(int n, int k);

}  // namespace kfactor
