"""End-to-end smoke tests for the python bindings."""

import math

import pytest

import kfactor as kf


def test_graph_basics():
    g = kf.complete(4)
    assert g.n == 4
    assert g.e == 6
    assert g.min_degree() == 3
    assert g.has_edge(0, 3)
    g.validate()

    h = kf.Graph(3, [(0, 1), (1, 2)])
    assert h.e == 2
    assert h.neighbors(1) == [0, 2]

    with pytest.raises(ValueError):
        kf.Graph(2, [(0, 0)])


def test_combinators_and_components():
    k33 = kf.join(kf.empty_graph(3), kf.empty_graph(3))
    assert k33.e == 9
    two = kf.disjoint_union(kf.complete(3), kf.complete(3))
    assert len(kf.components(two)) == 2
    assert kf.components(kf.cycle(6), [0, 3]) == [[1, 2], [4, 5]]
    assert not kf.is_connected(two)


def test_random_graph_determinism():
    a = kf.random_graph(12, 0.4, 7, connected=True, min_degree=1)
    b = kf.random_graph(12, 0.4, 7, connected=True, min_degree=1)
    assert a.edges() == b.edges()
    assert kf.is_connected(a)


def test_families():
    fam = kf.g1_family(12, 2)
    assert fam.graph.e == 43
    assert fam.graph.e == kf.family_edge_threshold(12, 2)
    assert fam.graph.min_degree() == 2
    assert fam.clique_set == [0, 1]
    assert fam.independent_set == [2, 3, 4]

    g2 = kf.g2_family(14, 3)
    assert g2.graph.min_degree() == 3
    assert g2.graph.degree(g2.independent_set[0]) == 5

    with pytest.raises(ValueError):
        kf.g2_family(12, 2)

    conj = kf.conjecture_extremal(6, 1)
    assert not kf.is_connected(conj)


def test_spectral():
    assert kf.spectral_radius(kf.complete(10)).rho == pytest.approx(9.0, abs=1e-10)
    kab = kf.join(kf.empty_graph(2), kf.empty_graph(3))
    assert kf.spectral_radius(kab).rho == pytest.approx(math.sqrt(6), abs=1e-10)
    assert kf.hong_nikiforov_bound(kf.cycle(5)) == pytest.approx(2.0)

    r = kf.spectral_radius(kf.cycle(8))
    assert r.converged
    assert min(r.perron) > 0
    assert max(r.perron) == pytest.approx(1.0)

    cmp = kf.compare_to_threshold(kf.complete(8), kf.complete(8))
    assert cmp.order == "equal_within_tol"


def test_factoring():
    fam = kf.g1_family(12, 2)
    verdict = kf.has_k_factor(fam.graph, 2)
    assert not verdict.exists
    assert verdict.witness.delta == -2
    assert verdict.witness.s == [0, 1]
    assert verdict.witness.t == [2, 3, 4]

    ok = kf.has_k_factor(kf.cycle(6), 2)
    assert ok.exists
    assert kf.certificate_valid(kf.cycle(6), ok.certificate)

    md, wit = kf.min_deficiency(fam.graph.__class__(4, [(0, 1), (1, 2), (2, 3), (0, 3)]), 2)
    assert md >= 0

    assert not kf.brute_force_factor(kf.join(kf.complete(1), kf.empty_graph(3)), 1).exists

    mate = kf.max_matching_blossom(kf.complete(4))
    assert sorted(mate) != [-1] * 4

    gadget = kf.tutte_gadget(kf.cycle(6), 2)
    assert gadget.feasible
    assert gadget.gadget.n == 4 * 6 - 2 * 6


def test_parity_shortcut():
    v = kf.has_k_factor(kf.cycle(5), 1)
    assert not v.exists
    assert v.parity_impossible


def test_structure_params():
    t = kf.toughness(kf.cycle(4))
    assert (t.value.num, t.value.den) == (1, 1)
    assert t.witness == [0, 2]

    star = kf.join(kf.complete(1), kf.empty_graph(3))
    b = kf.binding_number(star)
    assert (b.value.num, b.value.den) == (1, 3)

    g2 = kf.g2_family(14, 3)
    tough = kf.is_t_tough(g2.graph, 1, 1)
    assert not tough.tough
    assert tough.violating == [0, 1, 2]

    with pytest.raises(ValueError):
        kf.toughness(kf.complete(5))
    with pytest.raises(RuntimeError):
        kf.binding_number(kf.cycle(30))


def test_verify():
    v = kf.check_spectral_theorem(kf.complete(30), 2)
    assert v.hypotheses_hold
    assert v.conclusion_holds
    assert not v.contradiction()

    fam = kf.g1_family(12, 2)
    w = kf.check_binding_corollary(fam.graph, 2)
    assert w.extremal_hit
    assert not w.hypotheses.order_ok
    assert not w.contradiction()

    assert kf.binomial_shift_inequality(10, 3)
    assert kf.theorem_order_bound(2) == 29

    report = kf.sweep(1, 10, 25, 99)
    assert report.total_contradictions == 0
    assert report.spectral.evaluated == 25


def test_graph6():
    g = kf.parse_graph6("D?{")
    assert g.n == 5
    assert g.edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]
    assert kf.encode_graph6(g) == "D?{"
    assert kf.encode_graph6(kf.complete(1)) == "@"
    with pytest.raises(ValueError):
        kf.parse_graph6("A_?")

    nx = pytest.importorskip("networkx")
    for seed in range(25):
        g = kf.random_graph(2 + seed % 20, 0.45, seed)
        line = kf.encode_graph6(g)
        ref = nx.from_graph6_bytes(line.encode())
        assert sorted(tuple(sorted(e)) for e in ref.edges()) == g.edges()


def test_dot():
    dot = kf.emit_dot(kf.complete(3))
    assert "0 -- 1" in dot
    highlighted = kf.emit_dot(kf.complete(3), ([0], [2]))
    assert "group=S" in highlighted and "group=T" in highlighted
