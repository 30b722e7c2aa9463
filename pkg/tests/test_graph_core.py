from __future__ import annotations

import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from regpow import graph as gr
from regpow.graph import ACYCLIC, EdgeListParseError, Graph, GraphError

from .conftest import graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.sorted_edges())
    return h


F3 = gr.fm_graph(3)


def test_graph_rejects_loops_and_bad_labels():
    with pytest.raises(GraphError):
        Graph(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph(3, [(1, 4)])
    with pytest.raises(GraphError):
        Graph(3, [(2, 1), (1, 2)])
    assert Graph(3, [(2, 1)]).sorted_edges() == [(1, 2)]


def test_girth_examples():
    assert gr.girth(gr.cycle_graph(5)) == 5
    assert gr.girth(gr.path_graph(4)) == ACYCLIC
    assert gr.girth(F3) == 4


def test_bipartition_examples():
    assert gr.bipartition(gr.cycle_graph(4)) == ({1, 3}, {2, 4})
    assert gr.bipartition(gr.cycle_graph(3)) is None
    v1, v2 = gr.bipartition(F3)
    assert v1 == {1, 3, 5} and v2 == {2, 4, 6}


def test_internal_vertex_examples():
    for n in range(2, 11):
        assert gr.internal_vertex_count(gr.path_graph(n)) == n - 2
    star = gr.star_graph(3)
    assert gr.internal_vertex_count(star) == star.n - 3
    h_tree = Graph(6, [(1, 2), (2, 3), (4, 5), (5, 6), (2, 5)])
    assert gr.internal_vertex_count(h_tree) == h_tree.n - 4


def test_longest_induced_path_examples():
    assert gr.longest_induced_path(gr.path_graph(5)) == 4
    assert gr.longest_induced_path(gr.complete_graph(4)) == 1
    assert gr.longest_induced_path(gr.cycle_graph(6)) == 4


def test_delete_edge_examples():
    assert gr.delete_edge(gr.cycle_graph(3), (1, 2)).sorted_edges() == [(1, 3), (2, 3)]
    h = gr.delete_edge(gr.path_graph(3), (1, 2))
    assert h.sorted_edges() == [(2, 3)] and len(gr.components(h)) == 2
    c4c = gr.add_edge(gr.cycle_graph(4), (1, 3))
    assert gr.delete_edge(c4c, (1, 3)) == gr.cycle_graph(4)
    with pytest.raises(GraphError):
        gr.delete_edge(gr.path_graph(3), (1, 3))


def test_edge_completion_examples():
    g = Graph(3, [(1, 3), (2, 3)])
    assert gr.edge_completion(g, (1, 2)) == g
    with pytest.raises(GraphError):
        gr.edge_completion(g, (1, 3))
    # five-cycle minus a chord context: both neighbourhoods become edges
    c6 = gr.cycle_graph(6)
    done = gr.edge_completion(c6, (1, 4))
    assert set(done.sorted_edges()) - set(c6.sorted_edges()) == {(2, 6), (3, 5)}


def test_blocks_examples():
    bowtie = Graph(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])
    blocks, cuts = gr.blocks_and_cut_vertices(bowtie)
    assert len(blocks) == 2 and set(cuts) == {3}
    blocks, cuts = gr.blocks_and_cut_vertices(gr.path_graph(4))
    assert len(blocks) == 3 and set(cuts) == {2, 3}
    blocks, cuts = gr.blocks_and_cut_vertices(gr.cycle_graph(5))
    assert len(blocks) == 1 and not cuts


def test_parse_edge_list_roundtrip_and_errors():
    g = gr.parse_edge_list("# c3\n3 3\n1 2\n\n2 3  # tail\n1 3\n")
    assert g == gr.cycle_graph(3)
    assert gr.parse_edge_list(gr.format_edge_list(F3)) == F3
    with pytest.raises(EdgeListParseError) as info:
        gr.parse_edge_list("3 1\n1 2 3\n")
    assert info.value.line == 2 and info.value.column == 5
    with pytest.raises(EdgeListParseError) as info:
        gr.parse_edge_list("3 1\n1 x\n")
    assert info.value.line == 2
    with pytest.raises(EdgeListParseError):
        gr.parse_edge_list("3 2\n1 2\n")
    with pytest.raises(EdgeListParseError):
        gr.parse_edge_list("")


def test_connected_graph_counts():
    # connected unlabeled graphs on 1..6 vertices
    assert [len(gr.connected_graphs(n)) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]


# -- properties --------------------------------------------------------------

def _has_odd_cycle(g):
    # exhaustive: some vertex subset carries a cycle subgraph of odd length
    adj = {v: g.neighbors(v) for v in g.vertices()}
    for k in range(3, g.n + 1, 2):
        for combo in itertools.permutations(g.vertices(), k):
            if combo[0] != min(combo):
                continue
            if all(combo[(i + 1) % k] in adj[combo[i]] for i in range(k)):
                return True
    return False


@given(graphs(max_n=7))
def test_bipartite_iff_no_odd_girth(g):
    gi = gr.girth(g)
    assert (gr.bipartition(g) is not None) == (gi == ACYCLIC or gi % 2 == 0)
    assert (gr.bipartition(g) is None) == _has_odd_cycle(g)


@given(graphs(max_n=8))
def test_bipartition_is_a_valid_coloring(g):
    bp = gr.bipartition(g)
    if bp is None:
        return
    v1, v2 = bp
    assert v1 | v2 == set(g.vertices()) and not v1 & v2
    for i, j in g.sorted_edges():
        assert (i in v1) != (j in v1)
    for comp in gr.components(g):
        assert min(comp) in v1


@given(graphs(max_n=8))
def test_invariants_against_networkx(g):
    h = to_nx(g)
    mine = sorted(sorted(c) for c in gr.maximal_cliques(g))
    theirs = sorted(sorted(c) for c in nx.find_cliques(h))
    assert mine == theirs
    assert gr.is_connected(g) == nx.is_connected(h)
    gi = gr.girth(g)
    ref = nx.girth(h)
    assert (gi == ACYCLIC and ref == float("inf")) or gi == ref
    blocks, cuts = gr.blocks_and_cut_vertices(g)
    assert set(cuts) == set(nx.articulation_points(h))
    ref_blocks = sorted(sorted(tuple(sorted(e)) for e in b) for b in nx.biconnected_component_edges(h))
    assert sorted(sorted(b) for b in blocks) == ref_blocks


@given(graphs(max_n=8))
def test_every_edge_in_exactly_one_block(g):
    blocks, _ = gr.blocks_and_cut_vertices(g)
    seen = [tuple(e) for b in blocks for e in b]
    assert sorted(seen) == g.sorted_edges()


@given(graphs(max_n=8))
def test_internal_plus_free_is_n(g):
    assert gr.internal_vertex_count(g) + len(gr.free_vertices(g)) == g.n


@given(graphs(min_n=2, max_n=7), st.data())
def test_edge_completion_monotone_and_idempotent(g, data):
    missing = [(i, j) for i in range(1, g.n + 1) for j in range(i + 1, g.n + 1) if not g.has_edge(i, j)]
    if not missing:
        return
    e = data.draw(st.sampled_from(missing))
    once = gr.edge_completion(g, e)
    assert set(g.sorted_edges()) <= set(once.sorted_edges())
    if not once.has_edge(*e):
        assert gr.edge_completion(once, e) == once


@given(graphs(min_n=2, max_n=8), st.data())
def test_delete_then_add_restores(g, data):
    if g.m == 0:
        return
    e = data.draw(st.sampled_from(g.sorted_edges()))
    assert gr.add_edge(gr.delete_edge(g, e), e) == g


@given(graphs(max_n=7), st.data())
def test_canonical_form_is_relabeling_invariant(g, data):
    perm = data.draw(st.permutations(list(range(1, g.n + 1))))
    h = g.relabel(list(perm))
    assert gr.canonical_form(g) == gr.canonical_form(h)
    assert nx.is_isomorphic(to_nx(g), to_nx(gr.canonical_graph(g)))


@given(graphs(max_n=6), graphs(max_n=6))
def test_canonical_form_separates_non_isomorphic(g, h):
    same = g.n == h.n and nx.is_isomorphic(to_nx(g), to_nx(h))
    assert (gr.canonical_form(g) == gr.canonical_form(h)) == same


@given(graphs(max_n=7))
def test_longest_induced_path_brute_force(g):
    best = 0
    for k in range(2, g.n + 1):
        for vs in itertools.permutations(g.vertices(), k):
            if vs[0] > vs[-1]:
                continue
            sub = g.induced(sorted(vs))
            if sub.m == k - 1 and all(g.has_edge(vs[i], vs[i + 1]) for i in range(k - 1)):
                best = max(best, k - 1)
    assert gr.longest_induced_path(g) == best
