#!/usr/bin/env python3
"""Regenerates data/connected_upto7.g6 from the networkx graph atlas.

The file holds every connected graph on 1..7 vertices, one headerless
graph6 line each (996 lines). test_enumeration cross-checks it against an
independent canonical-form enumerator and an automorphism-count identity.
"""

import networkx as nx
from networkx.generators.atlas import graph_atlas_g


def main() -> None:
    lines = []
    counts = {}
    for g in graph_atlas_g():
        n = g.number_of_nodes()
        if n < 1 or not nx.is_connected(g):
            continue
        counts[n] = counts.get(n, 0) + 1
        lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
    assert counts == {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}, counts
    with open("data/connected_upto7.g6", "w") as f:
        f.write("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs")


if __name__ == "__main__":
    main()
