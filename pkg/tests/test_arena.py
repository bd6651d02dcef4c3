import io

import pytest

from catherding import generators as gen
from catherding.arena import (OptimalCat, OptimalHerder, interactive_play, play, render_view,
                              resolve, tournament)
from catherding.graph import Graph, GraphError
from catherding.records import GameRecord, replay
from catherding.solver import IllegalMoveError
from catherding.strategies import BinaryHerder, CatStrategyC, PathCat
from catherding.strategies.base import CatStrategy


def session(g, side, lines, **kw):
    out = io.StringIO()
    rec = interactive_play(g, side, stdin=io.StringIO("".join(l + "\n" for l in lines)),
                           stdout=out, **kw)
    return rec, out.getvalue()


def test_play_examples():
    assert play(gen.complete(4), CatStrategyC(), BinaryHerder()).score == 5
    assert play(gen.path(2), "optimal", "optimal").score == 1
    assert play(gen.star(3), "optimal", "star_herder").score == 2


def test_optimal_play_reaches_the_value():
    rec = play(gen.path(9), OptimalCat(), OptimalHerder())
    assert rec.start == 4 and rec.score == 4 and rec.complete
    replay(rec)


def test_forced_start():
    assert play(gen.path(9), "optimal", "optimal", start=0).score == 1
    with pytest.raises(IllegalMoveError):
        play(gen.path(3), "optimal", "optimal", start=7)


def test_empty_graph_rejected():
    with pytest.raises(GraphError):
        play(Graph(0), "optimal", "optimal")


class _Leaper(CatStrategy):
    name = "leaper"

    def opening(self, g):
        return 0

    def next(self, state):
        return state.graph.n - 1


def test_referee_rejects_moves_outside_the_component():
    with pytest.raises(IllegalMoveError):
        play(gen.path(5), _Leaper(), "path_herder")


def test_resolve():
    assert isinstance(resolve("cat", "optimal"), OptimalCat)
    with pytest.raises(ValueError):
        resolve("herder", "human")
    p = PathCat()
    p.bans = frozenset({1})
    fresh = resolve("cat", p)
    assert fresh is not p and fresh.bans == frozenset()


def test_render_view():
    text = render_view(gen.path(3), 1)
    assert text.splitlines() == ["cat at 1; cuts available in component: 2",
                                 " 0: 1", "*1: 0 2", " 2: 1"]


def test_human_herder_on_p9():
    rec, out = session(gen.path(9), "herder", ["5 6", "9 9", "6 7", "7 8"], start=6)
    assert rec.complete and rec.score == 3
    assert "rejected:" in out and out.rstrip().endswith("score 3")
    assert rec.cuts == [(5, 6), (6, 7), (7, 8)]
    replay(rec)


def test_human_cat_reprompts_and_finishes():
    rec, out = session(gen.path(4), "cat", ["9", "1", "3", "0"], opponent="path_herder")
    assert rec.start == 1 and rec.complete
    assert out.count("start vertex> ") == 2
    replay(rec)


def test_end_of_input_leaves_an_incomplete_prefix():
    rec, out = session(gen.path(9), "herder", ["5 6"], start=6)
    assert not rec.complete
    assert len(rec.turns) == 1 and rec.turns[0][0] == (5, 6) and rec.turns[0][1] in (7, 8)
    assert "(incomplete)" in out
    text = rec.to_text()
    assert GameRecord.from_text(text).complete is False
    replay(GameRecord.from_text(text))


def test_unanswered_cut_is_dropped():
    rec, out = session(gen.path(4), "cat", ["1"], opponent="path_herder")
    assert not rec.complete and rec.turns == []
    assert "herder cuts" in out


def test_too_many_bad_inputs():
    rec, out = session(gen.path(4), "herder", ["x"] * 3, start=1, retries=3)
    assert "too many invalid inputs" in out and not rec.complete


def test_isolated_cat_ends_at_once():
    rec, out = session(Graph(3, [(1, 2)]), "herder", [], start=0)
    assert rec.complete and rec.score == 0 and out.endswith("score 0\n")


def test_interactive_argument_errors():
    with pytest.raises(ValueError):
        interactive_play(gen.path(3), "dog")
    with pytest.raises(GraphError):
        interactive_play(Graph(0), "cat")


def test_tournament_paths():
    graphs = [(f"P{n}", gen.path(n)) for n in range(4, 9)]
    t = tournament(graphs, ["path_cat"], ["path_herder"])
    rows = t.to_tsv().splitlines()
    assert rows[0] == "graph\tcat\therder\tscore"
    assert [r.split("\t")[3] for r in rows[1:]] == ["2", "3", "3", "3", "3"]


def test_tournament_complete_graphs_with_skips():
    graphs = [(f"K{n}", gen.complete(n)) for n in range(2, 6)]
    t = tournament(graphs, ["optimal"], ["binary_herder", "path_herder"], jobs=2)
    assert [t.cells[(f"K{n}", "optimal", "binary_herder")] for n in range(2, 6)] == [1, 2, 5, 8]
    skipped = t.cells[("K4", "optimal", "path_herder")]
    assert isinstance(skipped, str) and skipped.startswith("StrategyError")
    assert "skip: StrategyError" in t.to_tsv()


def test_tournament_edge_cases():
    assert tournament([], ["optimal"], ["optimal"]).to_tsv() == "graph\tcat\therder\tscore\n"
    t = tournament([gen.path(3)], [PathCat()], ["optimal"])
    assert t.graphs == ["G0"] and t.cells[("G0", "path_cat", "optimal")] == 2
