#include <doctest.h>

#include <bit>
#include <cstdint>
#include <random>

#include "kfactor/errors.hpp"
#include "kfactor/families.hpp"
#include "kfactor/graph.hpp"
#include "kfactor/structure_params.hpp"

using namespace kfactor;

namespace {

Graph star(int leaves) { return join(complete(1), empty_graph(leaves)); }

// Test-only second opinion: plain mask scan in numeric order, no size
// ordering, no pruning. Values must match the library's enumeration.
Rational toughness_second_pass(const Graph& g) {
  const int n = g.vertex_count();
  bool have = false;
  Rational best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexSet removed;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) removed.push_back(v);
    if (static_cast<int>(removed.size()) >= n) continue;
    int c = static_cast<int>(components(g, removed).size());
    if (c > 1) {
      Rational val(static_cast<long long>(removed.size()), c);
      if (!have || val < best) {
        have = true;
        best = val;
      }
    }
  }
  REQUIRE(have);
  return best;
}

Rational binding_second_pass(const Graph& g) {
  const int n = g.vertex_count();
  bool have = false;
  Rational best;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) == n) continue;
    std::vector<char> in_n(n, 0);
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v))
        for (Vertex w : g.neighbors(v)) in_n[w] = 1;
    int size_n = 0;
    for (char c : in_n) size_n += c;
    if (size_n < n) {
      Rational val(size_n, std::popcount(mask));
      if (!have || val < best) {
        have = true;
        best = val;
      }
    }
  }
  REQUIRE(have);
  return best;
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(1, -2).num == -1);
  CHECK(Rational(3, 4) < Rational(1, 1));
  CHECK(Rational(5, 5) >= Rational(1, 1));
  CHECK(Rational(0, 7) == Rational(0, 1));
  CHECK_THROWS_AS(Rational(1, 0), param_error);
  CHECK(Rational(3, 4).str() == "3/4");
}

TEST_CASE("toughness of fixed graphs") {
  ParamReport c4 = toughness(cycle(4));
  CHECK(c4.value == Rational(1, 1));
  CHECK(c4.witness == VertexSet{0, 2});
  CHECK(c4.component_count == 2);

  ParamReport k13 = toughness(star(3));
  CHECK(k13.value == Rational(1, 3));
  CHECK(k13.witness == VertexSet{0});
  CHECK(k13.component_count == 3);

  ParamReport p5 = toughness(path(5));
  CHECK(p5.value == Rational(1, 2));
}

TEST_CASE("toughness of the split-attachment extremal family") {
  // The three bare independent vertices cap toughness at k/4: removing the
  // K_k join part leaves them isolated plus one big component.
  ParamReport t3 = toughness(g2_family(14, 3).graph);
  CHECK(t3.value == Rational(3, 4));
  CHECK(t3.witness == VertexSet{0, 1, 2});
  CHECK(t3.component_count == 4);

  // at k = 4 the same cut reaches exactly 1 and nothing does better
  ParamReport t4 = toughness(g2_family(18, 4).graph);
  CHECK(t4.value == Rational(1, 1));
}

TEST_CASE("toughness errors") {
  CHECK_THROWS_AS(toughness(complete(5)), param_error);
  CHECK_THROWS_AS(toughness(disjoint_union(complete(3), complete(2))), param_error);
  CHECK_THROWS_AS(toughness(cycle(30), 24), guard_error);
}

TEST_CASE("is_t_tough") {
  ToughnessCheck c6 = is_t_tough(cycle(6), 1, 1);
  CHECK(c6.tough);
  CHECK_FALSE(c6.vacuous);

  ToughnessCheck k13 = is_t_tough(star(3), 1, 1);
  CHECK_FALSE(k13.tough);
  REQUIRE(k13.violating.has_value());
  CHECK(*k13.violating == VertexSet{0});

  // complete graphs are t-tough for every t: no qualifying cut set
  ToughnessCheck kn = is_t_tough(complete(6), 5, 1);
  CHECK(kn.tough);
  CHECK(kn.vacuous);

  // the k=3 split-attachment family is not 1-tough; the violating set is
  // the K_k join part
  ToughnessCheck g2 = is_t_tough(g2_family(20, 3).graph, 1, 1);
  CHECK_FALSE(g2.tough);
  REQUIRE(g2.violating.has_value());
  CHECK(*g2.violating == VertexSet{0, 1, 2});

  // cycles are exactly 1-tough: 3/2-tough fails
  CHECK_FALSE(is_t_tough(cycle(6), 3, 2).tough);
  CHECK(is_t_tough(g2_family(18, 4).graph, 1, 1).tough);
}

TEST_CASE("binding number of fixed graphs") {
  ParamReport k13 = binding_number(star(3));
  CHECK(k13.value == Rational(1, 3));
  CHECK(k13.witness == VertexSet{1, 2, 3});
  CHECK(k13.neighborhood == VertexSet{0});

  ParamReport c4 = binding_number(cycle(4));
  CHECK(c4.value == Rational(1, 1));
  CHECK(c4.witness == VertexSet{0, 2});

  // complete graph: only singletons qualify, value n-1
  ParamReport k5 = binding_number(complete(5));
  CHECK(k5.value == Rational(4, 1));
  CHECK(k5.witness.size() == 1);
}

TEST_CASE("binding number of the extremal family is at least 1 for k=2") {
  for (int n : {10, 12, 14, 16}) {
    ParamReport b = binding_number(g1_family(n, 2).graph);
    CHECK(b.value >= Rational(1, 1));
    CHECK(b.value == Rational(1, 1));  // two bare independent vertices share N(S) = clique
  }
}

TEST_CASE("witness validity: reported values recompute from witnesses") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    RandomGraphOptions opts;
    opts.require_connected = true;
    Graph g = random_graph(4 + static_cast<int>(rng() % 6), 0.5, rng(), opts);
    if (g.edge_count() == static_cast<long long>(g.vertex_count()) * (g.vertex_count() - 1) / 2)
      continue;  // complete: toughness undefined
    ParamReport t = toughness(g);
    int c = static_cast<int>(components(g, t.witness).size());
    CHECK(c == t.component_count);
    CHECK(Rational(static_cast<long long>(t.witness.size()), c) == t.value);

    ParamReport b = binding_number(g);
    std::vector<char> nb(g.vertex_count(), 0);
    for (Vertex v : b.witness)
      for (Vertex w : g.neighbors(v)) nb[w] = 1;
    long long size_n = 0;
    for (char x : nb) size_n += x;
    CHECK(Rational(size_n, static_cast<long long>(b.witness.size())) == b.value);
    CHECK(static_cast<std::size_t>(size_n) == b.neighborhood.size());
  }
}

TEST_CASE("independent second pass agrees on 200 seeded graphs") {
  std::mt19937_64 rng(55);
  int done = 0;
  for (int trial = 0; trial < 400 && done < 200; ++trial) {
    int n = 4 + static_cast<int>(rng() % 7);  // n <= 10
    RandomGraphOptions opts;
    opts.require_connected = true;
    Graph g = random_graph(n, 0.45, rng(), opts);
    CHECK(binding_number(g).value == binding_second_pass(g));
    if (g.edge_count() < static_cast<long long>(n) * (n - 1) / 2) {
      CHECK(toughness(g).value == toughness_second_pass(g));
    }
    ++done;
  }
  CHECK(done == 200);
}

TEST_CASE("both parameters are monotone under edge addition") {
  std::mt19937_64 rng(808);
  int exercised = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int n = 5 + static_cast<int>(rng() % 5);
    RandomGraphOptions opts;
    opts.require_connected = true;
    Graph g = random_graph(n, 0.45, rng(), opts);
    // find a non-edge
    std::vector<Edge> non_edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v)) non_edges.emplace_back(u, v);
    if (non_edges.empty()) continue;
    auto edges = g.edges();
    edges.push_back(non_edges[rng() % non_edges.size()]);
    Graph bigger = Graph::from_edges(n, edges);

    CHECK(binding_number(bigger).value >= binding_number(g).value);
    bool bigger_complete =
        bigger.edge_count() == static_cast<long long>(n) * (n - 1) / 2;
    if (!bigger_complete) {
      CHECK(toughness(bigger).value >= toughness(g).value);
    }
    ++exercised;
  }
  CHECK(exercised >= 40);
}

TEST_CASE("is_t_tough agrees with the computed toughness") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(rng() % 6);
    RandomGraphOptions opts;
    opts.require_connected = true;
    Graph g = random_graph(n, 0.5, rng(), opts);
    if (g.edge_count() == static_cast<long long>(n) * (n - 1) / 2) continue;
    ParamReport t = toughness(g);
    CHECK(is_t_tough(g, t.value.num, t.value.den).tough);
    // anything strictly above the toughness fails
    CHECK_FALSE(is_t_tough(g, t.value.num * 3 + 1, t.value.den * 3).tough);
  }
}

TEST_CASE("guard errors") {
  CHECK_THROWS_AS(binding_number(cycle(25)), guard_error);
  CHECK_THROWS_AS(is_t_tough(cycle(25), 1, 1), guard_error);
  CHECK_THROWS_AS(is_t_tough(cycle(6), -1, 1), param_error);
}
