#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kfactor/graph.hpp"

// Test-only exhaustive small-graph machinery, kept independent of the
// library's isomorphism and decision code so it can serve as an oracle.
namespace kfactor::testsupport {

/// Canonical form: minimum upper-triangle edge bitmask over all n!
/// relabelings. Only for n <= 8.
std::uint64_t canonical_form(const Graph& g);

/// All non-isomorphic graphs on exactly n vertices (n <= 8 practical),
/// built by vertex extension + canonical dedup.
std::vector<Graph> all_graphs(int n);

/// All non-isomorphic connected graphs on 1..n vertices, in (n, canonical
/// form) order.
std::vector<Graph> connected_graphs_upto(int n);

/// Number of relabelings fixing the graph (n <= 8).
long long automorphism_count(const Graph& g);

/// Number of labeled connected graphs on n vertices, via the classical
/// subtraction recurrence over the component of vertex 1.
long long labeled_connected_count(int n);

/// Reads a headerless graph6 file, one graph per line.
std::vector<Graph> load_graph6_file(const std::string& path);

/// Absolute path into the repository's data directory.
std::string data_path(const std::string& name);

}  // namespace kfactor::testsupport
