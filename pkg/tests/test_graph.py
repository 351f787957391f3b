import pytest
from hypothesis import given
from hypothesis import strategies as st

import sbgraph as sg
from helpers import bidirected_complete, c3, digraphs, single_arc


def test_build_cycle():
    g = c3()
    assert g.n == 3
    assert g.m == 3
    assert g.edges == ((0, 1), (1, 2), (2, 0))
    assert g.out_adj == ((1,), (2,), (0,))
    assert g.in_adj == ((2,), (0,), (1,))


def test_build_rejects_out_of_range():
    with pytest.raises(sg.VertexRangeError):
        sg.build_digraph(2, [(0, 2)])
    with pytest.raises(sg.VertexRangeError):
        sg.build_digraph(2, [(-1, 0)])


def test_build_rejects_self_loop():
    with pytest.raises(sg.SelfLoopError):
        sg.build_digraph(2, [(0, 0)])


def test_build_rejects_duplicate_arc():
    with pytest.raises(sg.DuplicateEdgeError):
        sg.build_digraph(3, [(0, 1), (0, 1)])


def test_antiparallel_arcs_allowed():
    g = sg.build_digraph(2, [(0, 1), (1, 0)])
    assert g.m == 2


def test_remove_edge_cycle():
    g = c3()
    h = sg.remove_edge(g, (0, 1))
    assert h.n == 3
    assert set(h.edges) == {(1, 2), (2, 0)}
    # original untouched
    assert g.m == 3


def test_remove_edge_bidirected_pair():
    g = sg.build_digraph(2, [(0, 1), (1, 0)])
    h = sg.remove_edge(g, (0, 1))
    assert h.edges == ((1, 0),)


def test_remove_edge_missing():
    with pytest.raises(sg.MissingEdgeError):
        sg.remove_edge(c3(), (1, 0))


def test_remove_vertex_cycle():
    h, old_to_new = sg.remove_vertex(c3(), 0)
    assert h.n == 2
    assert h.edges == ((0, 1),)  # old arc 1->2
    assert old_to_new == {1: 0, 2: 1}


def test_remove_vertex_complete():
    g = bidirected_complete(4)
    for v in range(4):
        h, _ = sg.remove_vertex(g, v)
        assert h == bidirected_complete(3)


def test_remove_vertex_out_of_range():
    with pytest.raises(sg.VertexRangeError):
        sg.remove_vertex(c3(), 3)


def test_induced_identity():
    g = c3()
    h, old_to_new = sg.induced_subgraph(g, range(3))
    assert h == g
    assert old_to_new == {0: 0, 1: 1, 2: 2}


def test_induced_pair():
    h, _ = sg.induced_subgraph(c3(), [0, 1])
    assert h.n == 2
    assert h.edges == ((0, 1),)


def test_induced_out_of_range():
    with pytest.raises(sg.VertexRangeError):
        sg.induced_subgraph(c3(), [0, 5])


def test_underlying_collapses_antiparallel():
    g = sg.build_digraph(2, [(0, 1), (1, 0)])
    u = sg.underlying(g)
    assert u.edges == ((0, 1),)


def test_underlying_triangle():
    u = sg.underlying(c3())
    assert u.edges == ((0, 1), (0, 2), (1, 2))
    assert u.adj == ((1, 2), (0, 2), (0, 1))


def test_underlying_unchanged_iff_antiparallel():
    g = sg.build_digraph(3, [(0, 1), (1, 0), (1, 2)])
    assert sg.underlying(sg.remove_edge(g, (0, 1))) == sg.underlying(g)
    assert sg.underlying(sg.remove_edge(g, (1, 2))) != sg.underlying(g)


@given(digraphs())
def test_roundtrip_reconstruction(g):
    assert sg.build_digraph(g.n, g.edges) == g


@given(digraphs(), st.data())
def test_remove_edge_counts(g, data):
    if not g.edges:
        return
    e = data.draw(st.sampled_from(list(g.edges)))
    h = sg.remove_edge(g, e)
    assert h.n == g.n
    assert h.m == g.m - 1
    assert not h.has_edge(*e)


@given(digraphs(), st.data())
def test_underlying_edge_rule(g, data):
    if not g.edges:
        return
    u, v = data.draw(st.sampled_from(list(g.edges)))
    same = sg.underlying(sg.remove_edge(g, (u, v))) == sg.underlying(g)
    assert same == g.has_edge(v, u)


def test_undirected_graph_rejects_self_loop():
    with pytest.raises(sg.SelfLoopError):
        sg.UndirectedGraph(2, [(1, 1)])


def test_single_arc_adjacency():
    g = single_arc()
    assert g.out_adj == ((1,), ())
    assert g.in_adj == ((), (0,))
