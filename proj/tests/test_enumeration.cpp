#include <doctest.h>

#include <map>
#include <set>

#include "kfactor/graph.hpp"
#include "support/enumerate_graphs.hpp"

using namespace kfactor;
using namespace kfactor::testsupport;

TEST_CASE("unlabeled graph counts match the known sequence") {
  const int expected_all[] = {0, 1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) CHECK(static_cast<int>(all_graphs(n).size()) == expected_all[n]);
}

TEST_CASE("labeled connected counts from the recurrence") {
  const long long expected[] = {0, 1, 1, 4, 38, 728, 26704, 1866256};
  for (int n = 1; n <= 7; ++n) CHECK(labeled_connected_count(n) == expected[n]);
}

TEST_CASE("corpus file is exactly the connected graphs on up to 7 vertices") {
  std::vector<Graph> corpus = load_graph6_file(data_path("connected_upto7.g6"));
  REQUIRE(corpus.size() == 996);

  std::map<int, std::set<std::uint64_t>> corpus_forms;
  std::map<int, long long> labeled_total;
  for (const Graph& g : corpus) {
    CHECK(is_connected(g));
    bool fresh = corpus_forms[g.vertex_count()].insert(canonical_form(g)).second;
    CHECK(fresh);  // no isomorphic duplicates
  }

  const int expected_connected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  long long factorial = 1;
  for (int n = 1; n <= 7; ++n) {
    factorial *= n;
    CHECK(static_cast<int>(corpus_forms[n].size()) == expected_connected[n]);
  }

  // double-entry check: sum of orbit sizes n!/|Aut| over the corpus must
  // reproduce the labeled connected counts from the recurrence
  std::map<int, long long> orbit_sum;
  for (const Graph& g : corpus) {
    long long fact = 1;
    for (int i = 2; i <= g.vertex_count(); ++i) fact *= i;
    orbit_sum[g.vertex_count()] += fact / automorphism_count(g);
  }
  for (int n = 1; n <= 7; ++n) CHECK(orbit_sum[n] == labeled_connected_count(n));

  // independent enumerator reproduces the same canonical sets
  for (int n = 1; n <= 7; ++n) {
    std::set<std::uint64_t> mine;
    for (const Graph& g : all_graphs(n))
      if (is_connected(g)) mine.insert(canonical_form(g));
    CHECK(mine == corpus_forms[n]);
  }
}

TEST_CASE("library isomorphism agrees with canonical forms") {
  std::vector<Graph> graphs = all_graphs(5);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i; j < graphs.size(); ++j) {
      bool same_canon = canonical_form(graphs[i]) == canonical_form(graphs[j]);
      CHECK(is_isomorphic(graphs[i], graphs[j]) == same_canon);
    }
  }
  // relabeled pairs on 6 vertices
  for (const Graph& g : all_graphs(6)) {
    Graph h = relabel(g, random_permutation(6, canonical_form(g) + 1));
    CHECK(canonical_form(h) == canonical_form(g));
    CHECK(is_isomorphic(g, h));
  }
}
