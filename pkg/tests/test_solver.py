import pytest
from hypothesis import given

from catherding import formulas as F
from catherding import generators as gen
from catherding.graph import Graph
from catherding.retrograde import MAX_EDGES, solve_table, table_cut_value, table_values
from catherding.solver import (GameState, IllegalMoveError, Side, Solver, TerminalStateError,
                               best_response_score, cut_value, cut_value_at, optimal_move,
                               optimal_trace, solve)
from catherding.strategies import PathCat, PathHerder, StarHerder, BinaryHerder
from catherding.strategies.base import CatStrategy, HerderStrategy

from conftest import graphs
from oracles import naive_value


@pytest.mark.parametrize("n", range(2, 15))
def test_paths(n):
    assert cut_value(gen.path(n)) == F.path_value(n)


@pytest.mark.parametrize("n", range(3, 11))
def test_cycles(n):
    assert cut_value(gen.cycle(n)) == F.cycle_value(n)


@pytest.mark.parametrize("leaves, want", [(0, 0), (1, 1), (2, 2), (5, 2), (8, 2)])
def test_stars(leaves, want):
    assert cut_value(gen.star(leaves)) == want


@pytest.mark.parametrize("n", range(4, 8))
def test_wheels(n):
    assert cut_value(gen.wheel(n)) == n + 1


@pytest.mark.parametrize("n, want", [(1, 0), (2, 1), (3, 2), (4, 5), (5, 8)])
def test_complete(n, want):
    assert cut_value(gen.complete(n)) == want


def test_per_vertex_values():
    assert Solver(gen.path(9)).values() == [1, 2, 3, 3, 4, 3, 3, 2, 1]
    assert Solver(gen.spider()).values() == [1, 2, 3, 4, 3, 2, 1, 1]


def test_empty_graph():
    assert cut_value(Graph(0)) == 0
    assert optimal_trace(Graph(0)).score == 0


@given(graphs(max_n=5))
def test_solver_matches_naive_minimax(g):
    s = Solver(g)
    assert s.values() == [naive_value(g.n, g.edges(), v) for v in range(g.n)]


def test_solver_matches_table_on_atlas(atlas6):
    bad = [g for g in atlas6 if g.num_edges < 13 and Solver(g).values() != table_values(g)]
    assert bad == []


@given(graphs(max_n=5))
def test_pruning_does_not_change_values(g):
    assert Solver(g, prune=False).values() == Solver(g).values()


@pytest.mark.parametrize("g", [gen.wheel(6), gen.spider(), gen.gap_gadget(5),
                               gen.chained_cliques((4, 1, 1))])
def test_pruning_does_not_change_values_on_families(g):
    assert Solver(g, prune=False).values() == Solver(g).values()


@given(graphs(max_n=5))
def test_tiny_table_budget_gives_same_values(g):
    assert Solver(g, max_entries=64).values() == Solver(g).values()


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("CATHERDING_TT_ENTRIES", "10")
    s = Solver(gen.cycle(6))
    assert s.max_entries == 10
    assert cut_value(gen.cycle(6)) == 4
    assert len(s.table) == 0 and s.values() == [4] * 6 and len(s.table) <= 10


def test_parallel_values_agree():
    assert cut_value(gen.wheel(6), jobs=2) == 7


def test_cut_value_at():
    assert cut_value_at(gen.path(9), 6) == 3
    assert cut_value_at(gen.path(9), 4, prune=False) == 4


def test_optimal_trace_p9():
    rec = optimal_trace(gen.path(9))
    assert rec.start == 4 and rec.score == 4 and rec.complete


def test_traces_are_deterministic():
    g = gen.wheel(6)
    assert optimal_trace(g).to_text() == optimal_trace(g).to_text()
    st = GameState(g, 0, Side.HERDER)
    assert solve(st) == solve(st)


def test_solve_and_optimal_move():
    g = gen.path(9)
    res = solve(GameState(g, 6, Side.HERDER))
    assert res.value == 3 and res.best_move == (3, 4)
    after = solve(GameState(g.delete_edge(res.best_move), 6, Side.CAT))
    assert after.value == 2 and after.best_move in (5, 7, 4, 8)
    cat_res = solve(GameState(g.delete_edge((5, 6)), 6, Side.CAT))
    assert cat_res.best_move == 7 and cat_res.value == 2
    assert optimal_move(GameState(g, 4, Side.HERDER)) in g.edges()


def test_terminal_state():
    g = gen.path(2).delete_edge((0, 1))
    with pytest.raises(TerminalStateError):
        optimal_move(GameState(g, 0, Side.HERDER))
    assert solve(GameState(g, 0, Side.CAT)).value == 0


def test_table_limits():
    assert table_cut_value(gen.complete(5)) == 8
    with pytest.raises(ValueError):
        solve_table(gen.complete(8))
    assert MAX_EDGES >= 21


@given(graphs(max_n=5))
def test_table_matches_naive(g):
    assert table_values(g) == [naive_value(g.n, g.edges(), v) for v in range(g.n)]


# -- best response ------------------------------------------------------------------


def test_best_response_examples():
    assert best_response_score(gen.path(8), PathCat(), Side.CAT) == 3
    assert best_response_score(gen.complete(5), BinaryHerder(), Side.HERDER) == 8
    assert best_response_score(gen.star(4), StarHerder(), Side.HERDER) == 2


def test_best_response_scope_component_only():
    g = gen.path(9)
    assert best_response_score(g, PathCat(), Side.CAT, herder_scope="component") == 4
    with pytest.raises(ValueError):
        best_response_score(g, PathCat(), Side.CAT, herder_scope="nowhere")


class _CheatingHerder(HerderStrategy):
    def next(self, state):
        return (0, state.graph.n + 3)


class _FrozenCat(CatStrategy):
    def opening(self, g):
        return 1

    def next(self, state):
        return state.cat


def test_illegal_moves_name_the_state():
    with pytest.raises(IllegalMoveError, match="state"):
        best_response_score(gen.path(4), _CheatingHerder(), Side.HERDER)
    with pytest.raises(IllegalMoveError, match="cat at 1"):
        best_response_score(gen.path(4), _FrozenCat(), Side.CAT)


def test_best_response_against_weak_herder_exceeds_value():
    # the path herder is exact on paths; on a star it is not applicable
    assert best_response_score(gen.path(5), PathHerder(), Side.HERDER) == 3
