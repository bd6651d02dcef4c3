import pytest

from catherding import generators as gen
from catherding.graph import GraphError


def degrees(g):
    return sorted((g.degree(v) for v in range(g.n)), reverse=True)


def test_small_families():
    assert gen.path(9).edges()[:2] == [(0, 1), (1, 2)] and gen.path(9).num_edges == 8
    assert gen.cycle(5).has_edge(0, 4)
    assert gen.star(4).num_edges == 4 and gen.star(4).degree(0) == 4
    w = gen.wheel(6)
    assert w.degree(0) == 5 and w.has_edge(1, 5) and w.num_edges == 10
    assert gen.complete(6).num_edges == 15


def test_hypercube():
    q = gen.hypercube(3)
    assert (q.n, q.num_edges) == (8, 12)
    assert q.has_edge(0, 4) and not q.has_edge(1, 2)
    assert gen.hypercube(0).n == 1


def test_spider():
    g = gen.spider()
    assert (g.n, g.num_edges) == (8, 7)
    assert degrees(g) == [3, 2, 2, 2, 2, 1, 1, 1]


def test_chained_cliques():
    g = gen.chained_cliques((3, 3, 1))
    assert (g.n, g.num_edges) == (7, 8)
    assert g.has_edge(0, 3) and g.has_edge(3, 6)
    assert gen.chained_cliques((1,)).n == 1


@pytest.mark.parametrize("p, k, n", [(3, 1, 21), (3, 2, 33), (4, 1, 40)])
def test_grid_gadget(p, k, n):
    g = gen.grid_gadget(p, k)
    assert g.n == n and max(degrees(g)) == 4 * k
    assert all(g.degree(v) == 2 for v in range(p * p, g.n))


def test_gap_gadget():
    g = gen.gap_gadget(5)
    assert g.n == 7 and g.num_edges == 4 + 6


@pytest.mark.parametrize("fn, arg", [(gen.path, 0), (gen.cycle, 2), (gen.star, -1),
                                     (gen.wheel, 3), (gen.complete, 0), (gen.gap_gadget, 4)])
def test_bad_parameters(fn, arg):
    with pytest.raises(GraphError):
        fn(arg)


def test_bad_chains_and_grids():
    with pytest.raises(GraphError):
        gen.chained_cliques((3, 2))
    with pytest.raises(GraphError):
        gen.grid_gadget(2, 1)


def test_from_spec():
    assert gen.from_spec("path:9").num_edges == 8
    assert gen.from_spec("gr:3,1").n == 21
    assert gen.from_spec("spider").n == 8
    assert gen.from_spec("chain:3,3,1").num_edges == 8
    for bad in ("blob:3", "path:x", "path:1,2", "gr:3"):
        with pytest.raises(GraphError):
            gen.from_spec(bad)
