from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from regpow import graph as gr
from regpow.edge_ideals import build_ideal
from regpow.graph import Graph
from regpow.resolution import height, minimal_generator_count
from regpow.taxonomy import (BinomialClass, ParityClass, WitnessNotFound, classify,
                             classify_binomial, classify_parity, decompose_structure)

from .conftest import graphs

B, P = BinomialClass, ParityClass


@pytest.mark.parametrize("g, verdict, subtype", [
    (gr.path_graph(5), B.CI_Paths, ""),
    (gr.star_graph(3), B.ACI_TTypeTree, ""),
    (gr.triangle_with_paths(1, 1, 1), B.ACI_C3Type, ""),
    (gr.cycle_graph(3), B.ACI_C3Type, "degenerate"),
    (gr.cycle_graph(5), B.ACI_Cycle, ""),
    (gr.balloon_graph(4, 1), B.ACI_Balloon, ""),
    (gr.fm_graph(3), B.ACI_G2Type, ""),
    (Graph(6, [(1, 2), (2, 3), (4, 5), (5, 6), (2, 5)]), B.ACI_HTypeTree, ""),
    (gr.complete_graph(4), B.NotACI, ""),
    (gr.star_graph(4), B.NotACI, ""),
])
def test_binomial_examples(g, verdict, subtype):
    c = classify_binomial(g)
    assert c.verdict is verdict and c.subtype == subtype


def test_t_type_params():
    c = classify_binomial(gr.star_graph(3))
    assert c.params["iv"] == 1


C4_CHORD = Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)])
TWO_TRIANGLES = Graph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4)])


@pytest.mark.parametrize("g, verdict", [
    (gr.cycle_graph(5), P.CI_PathsAndOddCycles),
    (C4_CHORD, P.ACI_ChordEvenCycle),
    (TWO_TRIANGLES, P.ACI_TwoOddCyclesBridge),
    (gr.balloon_graph(3, 2), P.ACI_OddBalloon),
    (gr.triangle_with_paths(1, 1, 1), P.ACI_TrianglePaths),
    (gr.triangle_with_paths(1, 1, 0), P.ACI_G2Odd),
    (gr.cycle_graph(4), P.ACI_BipartiteUnicyclic),
    (gr.complete_graph(4), P.NotACI),
])
def test_parity_examples(g, verdict):
    assert classify_parity(g).verdict is verdict


def test_triangle_paths_needs_all_three_paths():
    # a triangle with two pendant paths is not the triangle-with-paths family
    assert classify_parity(gr.triangle_with_paths(1, 1, 0)).verdict is not P.ACI_TrianglePaths


def test_empty_edge_set():
    for kind in ("binomial", "parity"):
        c = classify(Graph(3), kind)
        assert c.label == "NotACI" and c.reason == "no edges"


def test_disconnected():
    g = gr.disjoint_union(gr.path_graph(3), gr.cycle_graph(4))
    assert classify_binomial(g).verdict is B.ACI_Cycle
    g = gr.disjoint_union(gr.cycle_graph(4), gr.cycle_graph(4))
    assert classify_binomial(g).verdict is B.NotACI
    g = gr.disjoint_union(gr.cycle_graph(3), gr.path_graph(2))
    assert classify_parity(g).verdict is P.CI_PathsAndOddCycles


def test_decompose_examples():
    d = decompose_structure(C4_CHORD, classify_parity(C4_CHORD))
    assert sorted(d["chord"]) == [1, 3] and d["cycle_length"] == 4
    bal = gr.balloon_graph(3, 2)
    d = decompose_structure(bal, classify_binomial(bal))
    assert sorted(d["cycle"]) == [1, 2, 3] and sorted(d["path_lengths"]) == [0, 0, 2]
    star = gr.star_graph(3)
    d = decompose_structure(star, classify_binomial(star))
    assert d["edge"] == [1, 2]
    with pytest.raises(ValueError):
        decompose_structure(gr.complete_graph(4), B.NotACI)
    with pytest.raises(WitnessNotFound):
        decompose_structure(gr.complete_graph(4), B.ACI_C3Type)


@given(st.lists(st.integers(1, 4), min_size=1, max_size=3))
def test_disjoint_paths_are_ci(lengths):
    g = gr.disjoint_union(*[gr.path_graph(k) for k in lengths])
    if g.m:
        assert classify_binomial(g).verdict is B.CI_Paths


@given(graphs(max_n=7), st.data())
def test_classification_is_relabeling_invariant(g, data):
    perm = list(data.draw(st.permutations(list(range(1, g.n + 1)))))
    h = g.relabel(perm)
    for kind in ("binomial", "parity"):
        assert classify(g, kind).label == classify(h, kind).label


@given(graphs(min_n=2, max_n=7, connected=True))
def test_witness_edge_is_an_edge(g):
    for kind in ("binomial", "parity"):
        c = classify(g, kind)
        if c.is_aci:
            assert g.has_edge(*c.witness["edge"])
            assert decompose_structure(g, c) == c.witness


def _algebraic(g, kind):
    I = build_ideal(g, kind)
    mu, ht = minimal_generator_count(I), height(I)
    return mu == ht, mu == ht + 1


def test_exhaustive_seven_vertices_against_mu_and_height():
    # every connected graph on seven vertices, both ideal kinds
    bad = []
    for g in gr.connected_graphs(7):
        for kind in ("binomial", "parity"):
            ci, aci = _algebraic(g, kind)
            c = classify(g, kind)
            if (c.is_ci, c.is_aci) != (ci, aci):
                bad.append((g.sorted_edges(), kind, c.label))
    assert not bad


@given(graphs(max_n=7))
def test_disconnected_against_mu_and_height(g):
    if g.m == 0:
        return
    for kind in ("binomial", "parity"):
        ci, aci = _algebraic(g, kind)
        c = classify(g, kind)
        assert (c.is_ci, c.is_aci) == (ci, aci)
