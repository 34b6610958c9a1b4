#include <doctest.h>

#include <algorithm>
#include <random>

#include "kfactor/errors.hpp"
#include "kfactor/factoring.hpp"
#include "kfactor/families.hpp"
#include "kfactor/graph.hpp"

using namespace kfactor;

namespace {

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph::from_edges(10, edges);
}

int matching_size(const std::vector<int>& mate) {
  int matched = 0;
  for (int v = 0; v < static_cast<int>(mate.size()); ++v)
    if (mate[v] >= 0) ++matched;
  return matched / 2;
}

void check_matching_valid(const Graph& g, const std::vector<int>& mate) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (mate[v] >= 0) {
      CHECK(mate[mate[v]] == v);
      CHECK(g.has_edge(v, mate[v]));
    }
  }
}

}  // namespace

TEST_CASE("deficiency on empty sets") {
  // K_4, k=3: single component, e(C,T)=0, k|C|=12 even, so q=0 and δ=0
  DeficiencyWitness w = deficiency(complete(4), {}, {}, 3);
  CHECK(w.delta == 0);
  CHECK(w.q == 0);

  // C_5, k=1: one component of odd size, q=1, δ=-1
  DeficiencyWitness odd = deficiency(cycle(5), {}, {}, 1);
  CHECK(odd.q == 1);
  CHECK(odd.delta == -1);
}

TEST_CASE("deficiency at the extremal witness of g1(12,2)") {
  FamilyInstance fam = g1_family(12, 2);
  DeficiencyWitness w = deficiency(fam.graph, fam.clique_set, fam.independent_set, 2);
  // k(|S|-|T|) = -2, Σ d_T = 7, e(S,T) = 6, q = 1
  CHECK(w.delta == -2);
  CHECK(w.q == 1);
  REQUIRE(w.component_types.size() == 1);
  CHECK(w.component_types[0].size == 7);
  CHECK(w.component_types[0].edges_to_t == 1);
  CHECK(w.component_types[0].odd);
}

TEST_CASE("deficiency rejects overlapping sets") {
  CHECK_THROWS_AS(deficiency(complete(4), {0, 1}, {1, 2}, 1), param_error);
  CHECK_THROWS_AS(deficiency(complete(4), {0}, {5}, 1), param_error);
}

TEST_CASE("parity identity on random (g,S,T,k) tuples") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);
    int k = 1 + static_cast<int>(rng() % 3);
    Graph g = random_graph(n, 0.5, rng());
    VertexSet s, t;
    for (Vertex v = 0; v < n; ++v) {
      switch (rng() % 3) {
        case 1: s.push_back(v); break;
        case 2: t.push_back(v); break;
        default: break;
      }
    }
    DeficiencyWitness w = deficiency(g, s, t, k);
    long long kn = static_cast<long long>(k) * n;
    CHECK(((w.delta % 2) + 2) % 2 == ((kn % 2) + 2) % 2);
  }
}

TEST_CASE("min deficiency on small graphs") {
  auto [min_c5, wit_c5] = min_deficiency(cycle(5), 1);
  CHECK(min_c5 < 0);
  CHECK(((min_c5 % 2) + 2) % 2 == 1);  // δ ≡ kn ≡ 1 (mod 2)

  auto [min_k4, wit_k4] = min_deficiency(complete(4), 3);
  CHECK(min_k4 >= 0);

  FamilyInstance fam = g1_family(10, 2);
  auto [min_g1, wit_g1] = min_deficiency(fam.graph, 2);
  CHECK(min_g1 == -2);
  CHECK(wit_g1.s == fam.clique_set);
  CHECK(wit_g1.t == fam.independent_set);
  CHECK(wit_g1.delta == -2);

  CHECK_THROWS_AS(min_deficiency(complete(15), 2), guard_error);
}

TEST_CASE("min deficiency witness recomputes") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(7, 0.45, rng());
    int k = 1 + static_cast<int>(rng() % 3);
    auto [min_delta, wit] = min_deficiency(g, k);
    DeficiencyWitness again = deficiency(g, wit.s, wit.t, k);
    CHECK(again.delta == min_delta);
    CHECK(again.q == wit.q);
  }
}

TEST_CASE("gadget node count is 4e - kn") {
  for (auto [g, k] : {std::pair<Graph, int>{cycle(6), 2}, {complete(4), 1},
                      {complete(5), 2}, {petersen(), 3}}) {
    TutteGadget gadget = tutte_gadget(g, k);
    REQUIRE(gadget.feasible);
    CHECK(gadget.gadget.vertex_count() ==
          4 * g.edge_count() - static_cast<long long>(k) * g.vertex_count());
  }
}

TEST_CASE("gadget short-circuits when a vertex is too poor") {
  TutteGadget gadget = tutte_gadget(path(4), 2);  // endpoints have degree 1
  CHECK_FALSE(gadget.feasible);
  CHECK(gadget.deficient_vertex == 0);
}

TEST_CASE("gadget matching encodes the factor") {
  // C_6, k=2: no slack nodes at all, the gadget matching is exactly the
  // 2-factor (the cycle itself)
  TutteGadget gadget = tutte_gadget(cycle(6), 2);
  REQUIRE(gadget.feasible);
  std::vector<int> mate = max_matching_blossom(gadget.gadget);
  CHECK(std::count(mate.begin(), mate.end(), -1) == 0);

  // K_4, k=1: perfect matching exists
  TutteGadget k4 = tutte_gadget(complete(4), 1);
  std::vector<int> mate4 = max_matching_blossom(k4.gadget);
  CHECK(std::count(mate4.begin(), mate4.end(), -1) == 0);
}

TEST_CASE("blossom matcher on fixed graphs") {
  auto k4 = max_matching_blossom(complete(4));
  check_matching_valid(complete(4), k4);
  CHECK(matching_size(k4) == 2);

  auto c5 = max_matching_blossom(cycle(5));
  check_matching_valid(cycle(5), c5);
  CHECK(matching_size(c5) == 2);

  auto pet = max_matching_blossom(petersen());
  check_matching_valid(petersen(), pet);
  CHECK(matching_size(pet) == 5);

  // odd blossom chain: two triangles bridged, maximum matching 3
  Graph bowtieish = Graph::from_edges(
      7, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}});
  auto m = max_matching_blossom(bowtieish);
  check_matching_valid(bowtieish, m);
  CHECK(matching_size(m) == 3);
}

TEST_CASE("blossom matcher agrees with brute force maximum on random graphs") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + static_cast<int>(rng() % 6);
    Graph g = random_graph(n, 0.45, rng());
    auto mate = max_matching_blossom(g);
    check_matching_valid(g, mate);
    // brute force maximum matching over edge subsets
    auto edges = g.edges();
    int best = 0;
    int m = static_cast<int>(edges.size());
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<char> used(n, 0);
      bool ok = true;
      int size = 0;
      for (int i = 0; i < m && ok; ++i) {
        if (mask & (1u << i)) {
          auto [u, v] = edges[i];
          if (used[u] || used[v]) ok = false;
          used[u] = used[v] = 1;
          ++size;
        }
      }
      if (ok) best = std::max(best, size);
    }
    CHECK(matching_size(mate) == best);
  }
}

TEST_CASE("blossom matching size matches the Berge duality bound") {
  // max matching = (n - max_S [odd_components(G-S) - |S|]) / 2, with the
  // maximum over all vertex subsets; exhaustive at small n
  std::mt19937_64 rng(20202);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 8 + static_cast<int>(rng() % 6);
    Graph g = random_graph(n, 0.3, rng());
    int worst = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      VertexSet removed;
      for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) removed.push_back(v);
      int odd = 0;
      for (const VertexSet& comp : components(g, removed))
        if (comp.size() % 2 == 1) ++odd;
      worst = std::max(worst, odd - static_cast<int>(removed.size()));
    }
    int expected = (n - worst) / 2;
    CHECK(matching_size(max_matching_blossom(g)) == expected);
  }
}

TEST_CASE("has_k_factor handles disconnected graphs componentwise") {
  Graph two_triangles = disjoint_union(cycle(3), cycle(3));
  FactorVerdict both = has_k_factor(two_triangles, 2);
  CHECK(both.exists);
  CHECK(certificate_valid(two_triangles, *both.certificate));

  Graph mixed = disjoint_union(cycle(3), complete(4));
  CHECK(has_k_factor(mixed, 2).exists);

  // K_3 ∪ K_2 with k=1: the odd component blocks a perfect matching
  Graph blocked = disjoint_union(complete(3), complete(2));
  FactorVerdict v = has_k_factor(blocked, 1);
  CHECK_FALSE(v.exists);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->delta <= -1);
}

TEST_CASE("gadget edge count is sum of d(d-k) plus e") {
  for (auto [g, k] : {std::pair<Graph, int>{complete(6), 2}, {petersen(), 2}, {cycle(8), 2}}) {
    TutteGadget gadget = tutte_gadget(g, k);
    REQUIRE(gadget.feasible);
    long long expected = g.edge_count();
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      expected += static_cast<long long>(g.degree(v)) * (g.degree(v) - k);
    CHECK(gadget.gadget.edge_count() == expected);
  }
}

TEST_CASE("has_k_factor on cycles, extremal graphs, Petersen") {
  FactorVerdict even_cycle = has_k_factor(cycle(6), 1);
  CHECK(even_cycle.exists);
  REQUIRE(even_cycle.certificate.has_value());
  CHECK(certificate_valid(cycle(6), *even_cycle.certificate));
  CHECK(even_cycle.certificate->edges.size() == 3);

  FactorVerdict extremal = has_k_factor(g1_family(12, 2).graph, 2);
  CHECK_FALSE(extremal.exists);
  REQUIRE(extremal.witness.has_value());
  CHECK(extremal.witness->delta == -2);
  CHECK(extremal.witness_exhaustive);  // n=12 within the guard

  FactorVerdict pet = has_k_factor(petersen(), 2);
  CHECK(pet.exists);
  REQUIRE(pet.certificate.has_value());
  CHECK(certificate_valid(petersen(), *pet.certificate));

  // parity short-circuit
  FactorVerdict odd = has_k_factor(cycle(5), 1);
  CHECK_FALSE(odd.exists);
  CHECK(odd.parity_impossible);
  REQUIRE(odd.witness.has_value());
  CHECK(odd.witness->delta < 0);

  // empty graph trivially has one
  CHECK(has_k_factor(empty_graph(0), 2).exists);
}

TEST_CASE("has_k_factor beyond the exhaustive guard still finds the witness") {
  FamilyInstance fam = g1_family(20, 2);
  FactorVerdict verdict = has_k_factor(fam.graph, 2);
  CHECK_FALSE(verdict.exists);
  CHECK_FALSE(verdict.witness_exhaustive);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->delta == -2);
  CHECK(verdict.witness->s == fam.clique_set);
  CHECK(verdict.witness->t == fam.independent_set);
}

TEST_CASE("witnesses recompute to their stated delta") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(rng() % 5);
    int k = 1 + static_cast<int>(rng() % 3);
    if ((k * n) % 2) continue;
    Graph g = random_graph(n, 0.4, rng());
    FactorVerdict v = has_k_factor(g, k);
    if (v.exists) {
      CHECK(certificate_valid(g, *v.certificate));
      CHECK(v.certificate->edges.size() ==
            static_cast<std::size_t>(static_cast<long long>(k) * n / 2));
    } else if (v.witness) {
      DeficiencyWitness w = deficiency(g, v.witness->s, v.witness->t, k);
      CHECK(w.delta == v.witness->delta);
      CHECK(w.delta <= -2);  // kn even makes -1 impossible
    }
  }
}

TEST_CASE("brute force factor") {
  FactorVerdict k4 = brute_force_factor(complete(4), 2);
  CHECK(k4.exists);
  CHECK(certificate_valid(complete(4), *k4.certificate));

  Graph star = join(complete(1), empty_graph(3));
  CHECK_FALSE(brute_force_factor(star, 1).exists);

  CHECK_THROWS_AS(brute_force_factor(complete(8), 3), guard_error);  // 28 edges > 24

  FactorVerdict pet = brute_force_factor(petersen(), 2, 15);
  CHECK(pet.exists);
  CHECK(certificate_valid(petersen(), *pet.certificate));
}

TEST_CASE("three deciders agree on random small graphs") {
  std::mt19937_64 rng(9090);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    int k = 1 + static_cast<int>(rng() % 3);
    if ((k * n) % 2) continue;
    Graph g = random_graph(n, 0.5, rng());
    bool constructive = has_k_factor(g, k).exists;
    bool exhaustive = min_deficiency(g, k).first >= 0;
    bool brute = brute_force_factor(g, k).exists;
    CHECK(constructive == exhaustive);
    CHECK(constructive == brute);
    ++checked;
  }
  CHECK(checked > 60);
}
