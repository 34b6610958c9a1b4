#include "kfactor/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "kfactor/errors.hpp"

namespace kfactor {

Graph::Graph(int n) : n_(n), adj_(n) {
  if (n < 0) throw param_error("vertex count must be non-negative");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw param_error("edge endpoint out of range: (" + std::to_string(u) +
                        "," + std::to_string(v) + ")");
    if (u == v) throw param_error("self-loop rejected at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  long long m = 0;
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    m += static_cast<long long>(nbrs.size());
  }
  g.edge_count_ = m / 2;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (const auto& nbrs : adj_) d = std::min(d, static_cast<int>(nbrs.size()));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::validate() const {
  if (static_cast<int>(adj_.size()) != n_) throw std::logic_error("adjacency size mismatch");
  long long m = 0;
  for (Vertex u = 0; u < n_; ++u) {
    const auto& nbrs = adj_[u];
    if (!std::is_sorted(nbrs.begin(), nbrs.end())) throw std::logic_error("adjacency not sorted");
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw std::logic_error("multi-edge present");
    for (Vertex v : nbrs) {
      if (v < 0 || v >= n_) throw std::logic_error("neighbor out of range");
      if (v == u) throw std::logic_error("self-loop present");
      if (!has_edge(v, u)) throw std::logic_error("adjacency not symmetric");
    }
    m += static_cast<long long>(nbrs.size());
  }
  if (m / 2 != edge_count_ || m % 2 != 0) throw std::logic_error("edge count inconsistent");
}

Graph complete(int n) {
  if (n < 0) throw param_error("complete: n must be non-negative");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle(int n) {
  if (n < 3) throw param_error("cycle: n must be at least 3");
  std::vector<Edge> edges;
  edges.reserve(n);
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path(int n) {
  if (n < 1) throw param_error("path: n must be positive");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph join(const Graph& g1, const Graph& g2) {
  int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  std::vector<Edge> edges = g1.edges();
  for (auto [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
  for (Vertex u = 0; u < n1; ++u)
    for (Vertex v = 0; v < n2; ++v) edges.emplace_back(u, v + n1);
  return Graph::from_edges(n1 + n2, edges);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  std::vector<Edge> edges = g1.edges();
  for (auto [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
  return Graph::from_edges(n1 + n2, edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) throw param_error("relabel: permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (Vertex v : perm) {
    if (v < 0 || v >= n || seen[v]) throw param_error("relabel: not a permutation");
    seen[v] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.edge_count()));
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(n, edges);
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  int n = g.vertex_count();
  std::vector<char> skip(n, 0);
  for (Vertex v : removed) {
    if (v < 0 || v >= n) throw param_error("components: removed vertex out of range");
    skip[v] = 1;
  }
  std::vector<char> visited(n, 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (skip[start] || visited[start]) continue;
    VertexSet comp;
    stack.push_back(start);
    visited[start] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!skip[w] && !visited[w]) {
          visited[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  return components(g).size() == 1;
}

namespace {

// Draws uniformly from [0, bound) by rejection; keeps the sampler's output
// independent of the standard library's distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace

Graph random_graph(int n, double p, std::uint64_t seed, const RandomGraphOptions& opts) {
  if (n < 1) throw param_error("random_graph: n must be positive");
  if (p < 0.0 || p > 1.0) throw param_error("random_graph: p must be in [0,1]");
  std::mt19937_64 rng(seed);
  const bool all = p >= 1.0, none = p <= 0.0;
  // p * 2^64, computed as p * 2^32 * 2^32 to stay in double range.
  const std::uint64_t threshold =
      all || none ? 0 : static_cast<std::uint64_t>(p * 4294967296.0 * 4294967296.0);
  std::vector<Edge> edges;
  for (int attempt = 0; attempt < opts.max_retries; ++attempt) {
    edges.clear();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (all) {
          edges.emplace_back(u, v);
        } else if (!none) {
          if (rng() < threshold) edges.emplace_back(u, v);
        }
      }
    }
    Graph g = Graph::from_edges(n, edges);
    if (g.min_degree() < opts.min_degree) continue;
    if (opts.require_connected && !is_connected(g)) continue;
    return g;
  }
  throw sampler_error("random_graph: constraints not met after " +
                      std::to_string(opts.max_retries) + " attempts (n=" +
                      std::to_string(n) + ", p=" + std::to_string(p) +
                      ", min_degree=" + std::to_string(opts.min_degree) +
                      (opts.require_connected ? ", connected" : "") + ")");
}

std::vector<Vertex> random_permutation(int n, std::uint64_t seed) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

namespace {

// Iterated neighbor-color refinement. Returns per-vertex color ids; colors
// are canonical across graphs (assigned by sorted signature) so two graphs
// can be compared cell by cell.
std::vector<int> refine_colors(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n);
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  for (int round = 0; round < n; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> sig_ids;
    std::vector<std::pair<int, std::vector<int>>> sigs(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> nbr_colors;
      nbr_colors.reserve(g.degree(v));
      for (Vertex w : g.neighbors(v)) nbr_colors.push_back(color[w]);
      std::sort(nbr_colors.begin(), nbr_colors.end());
      sigs[v] = {color[v], std::move(nbr_colors)};
      sig_ids.emplace(sigs[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : sig_ids) id = next++;
    std::vector<int> fresh(n);
    for (Vertex v = 0; v < n; ++v) fresh[v] = sig_ids[sigs[v]];
    if (fresh == color) break;
    color = std::move(fresh);
  }
  return color;
}

bool extend_mapping(const Graph& g1, const Graph& g2,
                    const std::vector<std::vector<Vertex>>& candidates,
                    const std::vector<Vertex>& order, std::size_t pos,
                    std::vector<Vertex>& map12, std::vector<Vertex>& map21) {
  if (pos == order.size()) return true;
  Vertex u = order[pos];
  for (Vertex v : candidates[u]) {
    if (map21[v] >= 0) continue;
    bool ok = true;
    // mapped neighbors of u must land on neighbors of v
    for (Vertex w : g1.neighbors(u)) {
      Vertex mw = map12[w];
      if (mw >= 0 && !g2.has_edge(v, mw)) {
        ok = false;
        break;
      }
    }
    // mapped preimages of v's neighbors must be neighbors of u
    if (ok) {
      for (Vertex w2 : g2.neighbors(v)) {
        Vertex w = map21[w2];
        if (w >= 0 && !g1.has_edge(u, w)) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    map12[u] = v;
    map21[v] = u;
    if (extend_mapping(g1, g2, candidates, order, pos + 1, map12, map21)) return true;
    map12[u] = -1;
    map21[v] = -1;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const Graph& g1, const Graph& g2, int size_limit) {
  if (g1.vertex_count() > size_limit || g2.vertex_count() > size_limit)
    throw guard_error("is_isomorphic: graph exceeds size limit of " +
                      std::to_string(size_limit) + " vertices");
  int n = g1.vertex_count();
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
  if (n == 0) return true;

  std::vector<int> c1 = refine_colors(g1), c2 = refine_colors(g2);
  {
    std::vector<int> s1 = c1, s2 = c2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
  }

  std::vector<std::vector<Vertex>> candidates(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (c1[u] == c2[v]) candidates[u].push_back(v);

  // Most-constrained vertices first.
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    if (candidates[a].size() != candidates[b].size())
      return candidates[a].size() < candidates[b].size();
    return a < b;
  });

  std::vector<Vertex> map12(n, -1), map21(n, -1);
  return extend_mapping(g1, g2, candidates, order, 0, map12, map21);
}

}  // namespace kfactor
