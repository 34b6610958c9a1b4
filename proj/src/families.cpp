#include "kfactor/families.hpp"

#include <numeric>
#include <string>

#include "kfactor/errors.hpp"

namespace kfactor {

namespace {

// Shared base: K_k ∨ ((k+1)K_1 ∪ K_{n-2k-1}) with the canonical layout.
FamilyInstance base_family(int n, int k) {
  FamilyInstance fam;
  fam.n = n;
  fam.k = k;
  for (Vertex v = 0; v < k; ++v) fam.clique_set.push_back(v);
  for (Vertex v = k; v < 2 * k + 1; ++v) fam.independent_set.push_back(v);
  for (Vertex v = 2 * k + 1; v < n; ++v) fam.big_clique.push_back(v);

  std::vector<Edge> edges;
  for (Vertex u : fam.clique_set) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  for (std::size_t i = 0; i < fam.big_clique.size(); ++i)
    for (std::size_t j = i + 1; j < fam.big_clique.size(); ++j)
      edges.emplace_back(fam.big_clique[i], fam.big_clique[j]);
  fam.graph = Graph::from_edges(n, edges);
  return fam;
}

Graph with_extras(const FamilyInstance& fam) {
  std::vector<Edge> edges = fam.graph.edges();
  edges.insert(edges.end(), fam.extra_edges.begin(), fam.extra_edges.end());
  return Graph::from_edges(fam.n, edges);
}

}  // namespace

long long family_edge_threshold(int n, int k) {
  long long m = n - k - 1;
  return m * (m - 1) / 2 + static_cast<long long>(k) * (k + 1) + k - 1;
}

FamilyInstance g1_family(int n, int k) {
  if (k < 1) throw param_error("g1_family: k must be at least 1");
  if (n < 2 * k + 2)
    throw param_error("g1_family: n must be at least 2k+2 = " + std::to_string(2 * k + 2));
  FamilyInstance fam = base_family(n, k);
  Vertex attach = fam.big_clique.front();
  for (int i = 0; i < k - 1; ++i)
    fam.extra_edges.emplace_back(fam.independent_set[i], attach);
  fam.graph = with_extras(fam);
  return fam;
}

FamilyInstance g2_family(int n, int k) {
  if (k < 3) throw param_error("g2_family: k must be at least 3");
  if (n < 2 * k + 3)
    throw param_error("g2_family: n must be at least 2k+3 = " + std::to_string(2 * k + 3));
  FamilyInstance fam = base_family(n, k);
  Vertex attach = fam.big_clique[0];
  Vertex attach2 = fam.big_clique[1];
  for (int i = 0; i < k - 2; ++i)
    fam.extra_edges.emplace_back(fam.independent_set[i], attach);
  fam.extra_edges.emplace_back(fam.independent_set[0], attach2);
  fam.graph = with_extras(fam);
  return fam;
}

Graph conjecture_extremal(int n, int a) {
  if (a < 1) throw param_error("conjecture_extremal: a must be at least 1");
  if (n < a + 1)
    throw param_error("conjecture_extremal: n must be at least a+1 = " + std::to_string(a + 1));
  return join(complete(a - 1), disjoint_union(complete(n - a), complete(1)));
}

}  // namespace kfactor
