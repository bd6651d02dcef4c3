import io

import pytest
from hypothesis import given

from catherding.graph import (Graph, GraphError, bridges, is_two_edge_connected, k_core_number,
                              read_edge_list, state_key, to_dot, two_edge_connected_components,
                              write_edge_list)
from catherding import generators as gen

from conftest import graphs
from oracles import brute_bridges, brute_k_core


def test_delete_edge_keeps_parent():
    g = gen.path(3)
    h = g.delete_edge((1, 0))
    assert g.edges() == [(0, 1), (1, 2)]
    assert h.edges() == [(1, 2)]
    assert h.universe == g.universe


@pytest.mark.parametrize("edges, msg", [
    ([(0, 0)], "self-loop"),
    ([(0, 1), (1, 0)], "parallel"),
    ([(0, 5)], "out of range"),
])
def test_bad_graphs(edges, msg):
    with pytest.raises(GraphError, match=msg):
        Graph(3, edges)


def test_negative_vertex_count():
    with pytest.raises(GraphError):
        Graph(-1)


def test_delete_missing_edge():
    g = gen.path(3).delete_edge((0, 1))
    with pytest.raises(GraphError):
        g.delete_edge((0, 1))


def test_component_of():
    g = gen.path(4).delete_edge((1, 2))
    assert g.component_of(0) == {0, 1}
    assert g.component_of(3) == {2, 3}
    assert len(g.components()) == 2


def test_bridges_examples():
    assert bridges(gen.path(4)) == [(0, 1), (1, 2), (2, 3)]
    assert bridges(gen.cycle(5)) == []
    assert is_two_edge_connected(gen.cycle(5)) and not is_two_edge_connected(gen.path(3))
    assert two_edge_connected_components(gen.chained_cliques([3, 3, 1])).sizes == [3, 3, 1]


@given(graphs(max_n=7))
def test_bridges_match_brute_force(g):
    assert bridges(g) == brute_bridges(g.n, g.edges())


@given(graphs(max_n=7))
def test_two_edge_components_partition_vertices(g):
    dec = two_edge_connected_components(g)
    seen = sorted(v for s in dec.sets for v in s)
    assert seen == list(range(g.n))
    for s in dec.sets:
        h = g.induced(s)
        assert bridges(h) == []
        assert h.component_of(min(s)) == s


@given(graphs(max_n=7))
def test_k_core_matches_brute_force(g):
    assert k_core_number(g) == brute_k_core(g.n, g.edges())


def test_k_core_examples():
    assert k_core_number(gen.complete(5)) == 4
    assert k_core_number(gen.path(5)) == 1
    assert k_core_number(gen.wheel(6)) == 3


@given(graphs(max_n=6))
def test_edge_list_round_trip(g):
    buf = io.StringIO()
    write_edge_list(g, buf)
    buf.seek(0)
    assert read_edge_list(buf) == g


def test_edge_list_errors():
    with pytest.raises(GraphError, match="header"):
        read_edge_list(io.StringIO("3 2 1\n0 1\n1 2\n"))
    with pytest.raises(GraphError, match="announces"):
        read_edge_list(io.StringIO("3 2\n0 1\n"))
    with pytest.raises(GraphError, match="malformed"):
        read_edge_list(io.StringIO("3 1\n0\n"))
    with pytest.raises(GraphError, match="u < v"):
        read_edge_list(io.StringIO("3 1\n2 1\n"))


def test_state_key_and_dot():
    g = gen.path(3)
    assert state_key(g, 1) == (g.mask, 1)
    with pytest.raises(GraphError):
        state_key(g, 3)
    dot = to_dot(g, cat=1)
    assert "1 [style=filled" in dot and "0 -- 1" in dot
