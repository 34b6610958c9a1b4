#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kfactor/graph.hpp"

namespace kfactor {

/// Per-component record used by the deficiency count: component size,
/// number of edges into T, and whether e(C,T) + k|C| is odd.
struct ComponentType {
  int size = 0;
  long long edges_to_t = 0;
  bool odd = false;
};

/// A disjoint pair (S,T) with the exact value of the Tutte-type deficiency
///   δ(S,T) = k(|S|-|T|) + Σ_{v∈T} d(v) - e(S,T) - q(S,T),
/// where q counts the components C of G-(S∪T) with e(C,T) + k|C| odd.
/// δ(S,T) < 0 for some pair exactly when no k-factor exists, and
/// δ ≡ k·n (mod 2) always.
struct DeficiencyWitness {
  VertexSet s;
  VertexSet t;
  int q = 0;
  long long delta = 0;
  std::vector<ComponentType> component_types;
};

/// Evaluates δ(S,T) exactly. S and T must be sorted, in range and disjoint.
DeficiencyWitness deficiency(const Graph& g, const VertexSet& s, const VertexSet& t, int k);

/// Exhaustive minimum of δ over all 3^n disjoint (S,T) assignments.
/// Returns the minimum and the lexicographically least achieving pair
/// (ordered by S, then T). Throws guard_error when n exceeds max_n.
std::pair<long long, DeficiencyWitness> min_deficiency(const Graph& g, int k, int max_n = 14);

/// Edge set of a k-regular spanning subgraph.
struct FactorCertificate {
  int k = 0;
  std::vector<Edge> edges;  ///< sorted (u,v), u < v
};

/// True when cert is a k-regular spanning subgraph of g.
bool certificate_valid(const Graph& g, const FactorCertificate& cert);

enum class FactorMethod { gadget, deficiency, brute };

struct FactorVerdict {
  bool exists = false;
  std::optional<FactorCertificate> certificate;  ///< present iff exists
  std::optional<DeficiencyWitness> witness;      ///< may be absent above the exhaustive guard
  FactorMethod method = FactorMethod::gadget;
  bool parity_impossible = false;   ///< k·n odd: no graph of this order has one
  bool witness_exhaustive = false;  ///< witness came from the full 3^n scan
};

/// The degree-constrained-subgraph gadget: vertex v expands into d(v)
/// edge-end nodes plus d(v)-k slack nodes joined completely to them, and
/// each original edge becomes one edge-end to edge-end edge. The gadget has
/// a perfect matching exactly when g has a k-factor; a k-factor's edges are
/// the original edges whose cross edge is matched.
struct TutteGadget {
  Graph gadget;
  bool feasible = true;          ///< false when some d(v) < k; gadget left empty
  Vertex deficient_vertex = -1;  ///< lowest-id vertex with d(v) < k when infeasible
  std::vector<Edge> original_edges;  ///< edges of g in lexicographic order
  std::vector<Edge> cross_pairs;     ///< gadget endpoints of each original edge
};

TutteGadget tutte_gadget(const Graph& g, int k);

/// Maximum cardinality matching via augmenting paths with blossom
/// contraction, greedy-initialized. Returns the mate array (-1 = exposed).
/// Deterministic for a fixed vertex order.
std::vector<int> max_matching_blossom(const Graph& g);

/// Decides k-factor existence constructively: parity short-circuit, then
/// gadget + blossom; on nonexistence the witness is recovered by the
/// exhaustive scan when n <= exhaustive_guard and by a low-degree
/// neighborhood heuristic otherwise (absent witness is flagged).
FactorVerdict has_k_factor(const Graph& g, int k, int exhaustive_guard = 14);

/// Independent oracle: degree-pruned backtracking over edge subsets.
/// Throws guard_error when e(g) exceeds max_edges.
FactorVerdict brute_force_factor(const Graph& g, int k, long long max_edges = 24);

}  // namespace kfactor
