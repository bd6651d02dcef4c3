"""Game loop: strategies, exact players and a line-protocol human, all refereed here.

Strategies only propose moves.  The arena validates every proposal against the
real graph, so a strategy's voluntary restrictions never bind anyone else.
"""

from __future__ import annotations

import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, TextIO

from .graph import EdgeId, Graph, GraphError, canonical_edge
from .records import GameRecord
from .solver import (GameState, IllegalMoveError, Side, Solver, _check_cat_move,
                     _check_herder_move)
from .strategies import registry
from .strategies.base import CatStrategy, HerderStrategy, StrategyError


class OptimalCat(CatStrategy):
    """Exact play, lowest id among equally good moves."""

    name = "optimal"

    def __init__(self, solver: Solver | None = None):
        self.solver = solver

    def _solver(self, g: Graph) -> Solver:
        if self.solver is None or self.solver.graph.universe != g.universe:
            self.solver = Solver(g)
        return self.solver

    def opening(self, g: Graph) -> int:
        return self._solver(g).best_start()[0]

    def next(self, state) -> int:
        return self._solver(state.graph).best_cat_move(state.graph.mask, state.cat)[0]


class OptimalHerder(HerderStrategy):
    name = "optimal"

    def __init__(self, solver: Solver | None = None):
        self.solver = solver

    def next(self, state) -> EdgeId:
        g = state.graph
        if self.solver is None or self.solver.graph.universe != g.universe:
            self.solver = Solver(g)
        return self.solver.best_herder_move(g.mask, state.cat)[0]


def resolve(side: str, player, **kwargs):
    """Turn a name, or an existing strategy, into a fresh strategy object."""
    if isinstance(player, str):
        if player == "optimal":
            return OptimalCat() if side == "cat" else OptimalHerder()
        if player == "human":
            raise ValueError("human players go through interactive_play")
        return registry.get(side, player, **kwargs)
    s = player.clone()
    s.reset()
    return s


def _check_start(g: Graph, v) -> int:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < g.n:
        raise IllegalMoveError(f"cat opened on {v!r}; graph has {g.n} vertices", None, v)
    return v


def play(g: Graph, cat, herder, start: int | None = None) -> GameRecord:
    """One refereed game.  ``cat``/``herder`` are strategies or registry names.

    ``start`` forces the opening vertex instead of asking the cat.
    """
    if g.n == 0:
        raise GraphError("cannot play on an empty graph")
    cat_s, herder_s = resolve("cat", cat), resolve("herder", herder)
    pos = _check_start(g, cat_s.opening(g) if start is None else start)
    rec = GameRecord(g, pos, [])
    cur = g
    m0 = g.num_edges
    while cur.degree(pos) > 0:
        state = GameState(cur, pos, Side.HERDER, m0 - cur.num_edges)
        e = _check_herder_move(state, herder_s.next(state))
        cur = cur.delete_edge(e)
        if cur.degree(pos) == 0:
            rec.turns.append((e, None))
            break
        state = GameState(cur, pos, Side.CAT, m0 - cur.num_edges)
        pos = _check_cat_move(state, cat_s.next(state))
        rec.turns.append((e, pos))
    return rec


# -- human play ---------------------------------------------------------------------


def render_view(g: Graph, cat: int) -> str:
    """Adjacency listing of the cat's component, cat marked with '*'."""
    comp = sorted(g.component_of(cat))
    lines = [f"cat at {cat}; cuts available in component: "
             f"{sum(1 for u, v in g.edges() if u in comp)}"]
    for v in comp:
        mark = "*" if v == cat else " "
        lines.append(f"{mark}{v}: {' '.join(map(str, g.neighbors(v)))}")
    return "\n".join(lines)


class _Abort(Exception):
    pass


@dataclass
class _Console:
    inp: TextIO
    out: TextIO
    retries: int

    def ask(self, prompt: str, parse):
        for _ in range(self.retries):
            self.out.write(prompt)
            self.out.flush()
            line = self.inp.readline()
            if not line:
                self.out.write("\nend of input\n")
                raise _Abort
            try:
                return parse(line.split())
            except (ValueError, GraphError, IllegalMoveError) as exc:
                self.out.write(f"rejected: {exc}\n")
        self.out.write("too many invalid inputs\n")
        raise _Abort


def interactive_play(g: Graph, human_side: str, opponent="optimal", *,
                     stdin: TextIO | None = None, stdout: TextIO | None = None,
                     start: int | None = None, retries: int = 5) -> GameRecord:
    """Play against ``opponent`` over a plain-text line protocol.

    The human types a vertex id (cat) or two endpoint ids (herder).  Invalid
    input is rejected and re-asked up to ``retries`` times; end of input or
    running out of retries returns the partial record with ``complete=False``.
    """
    if human_side not in ("cat", "herder"):
        raise ValueError("human_side must be 'cat' or 'herder'")
    if g.n == 0:
        raise GraphError("cannot play on an empty graph")
    con = _Console(stdin or sys.stdin, stdout or sys.stdout, retries)
    other = "herder" if human_side == "cat" else "cat"
    opp = resolve(other, opponent)
    rec = GameRecord(g, None, [], complete=False)
    cur, m0 = g, g.num_edges

    def vertex(state_graph, cat):
        def parse(tok):
            if len(tok) != 1:
                raise ValueError("enter one vertex id")
            v = int(tok[0])
            if cat is None:
                return _check_start(state_graph, v)
            return _check_cat_move(GameState(state_graph, cat, Side.CAT), v)
        return parse

    def edge(state):
        def parse(tok):
            if len(tok) != 2:
                raise ValueError("enter two endpoint ids")
            return _check_herder_move(state, canonical_edge(int(tok[0]), int(tok[1])))
        return parse

    try:
        if start is not None:
            pos = _check_start(g, start)
        elif human_side == "cat":
            con.out.write(render_view(g, 0).split("\n", 1)[1] + "\n")
            pos = con.ask("start vertex> ", vertex(g, None))
        else:
            pos = _check_start(g, opp.opening(g))
        rec.start = pos
        con.out.write(f"cat starts at {pos}\n")
        while cur.degree(pos) > 0:
            state = GameState(cur, pos, Side.HERDER, m0 - cur.num_edges)
            con.out.write(render_view(cur, pos) + "\n")
            if human_side == "herder":
                e = con.ask("cut> ", edge(state))
            else:
                e = _check_herder_move(state, opp.next(state))
            con.out.write(f"herder cuts {e[0]} {e[1]}\n")
            cur = cur.delete_edge(e)
            if cur.degree(pos) == 0:
                rec.turns.append((e, None))
                break
            rec.turns.append((e, None))
            if human_side == "cat":
                con.out.write(render_view(cur, pos) + "\n")
                dest = con.ask("move> ", vertex(cur, pos))
            else:
                state = GameState(cur, pos, Side.CAT, m0 - cur.num_edges)
                dest = _check_cat_move(state, opp.next(state))
            con.out.write(f"cat moves to {dest}\n")
            rec.turns[-1] = (e, dest)
            pos = dest
        rec.complete = True
    except _Abort:
        # a cut without its reply is dropped so the partial record stays a prefix
        if rec.turns and rec.turns[-1][1] is None and cur.degree(pos) > 0:
            rec.turns.pop()
    con.out.write(f"score {rec.score}{'' if rec.complete else ' (incomplete)'}\n")
    return rec


# -- tournaments --------------------------------------------------------------------


@dataclass
class Tournament:
    graphs: list[str]
    cats: list[str]
    herders: list[str]
    # (graph, cat, herder) -> score, or the error text for a skipped cell
    cells: dict[tuple[str, str, str], int | str] = field(default_factory=dict)

    def to_tsv(self) -> str:
        lines = ["graph\tcat\therder\tscore"]
        for gname in self.graphs:
            for c in self.cats:
                for h in self.herders:
                    v = self.cells[(gname, c, h)]
                    lines.append(f"{gname}\t{c}\t{h}\t{v if isinstance(v, int) else 'skip: ' + v}")
        return "\n".join(lines) + "\n"


def _cell(args):
    g, c, h = args
    try:
        return play(g, c, h).score
    except (StrategyError, IllegalMoveError, GraphError, KeyError, ValueError) as exc:
        return f"{type(exc).__name__}: {exc}".replace("\t", " ").replace("\n", " ")


def tournament(graphs: Iterable, cats: Iterable, herders: Iterable, jobs: int = 1) -> Tournament:
    """Every graph against every (cat, herder) pair.

    ``graphs`` holds Graphs or ``(label, Graph)`` pairs; players are registry
    names or strategy objects.  A failing cell is recorded, never raised.
    """
    named = []
    for i, item in enumerate(graphs):
        named.append(item if isinstance(item, tuple) else (f"G{i}", item))
    cats, herders = list(cats), list(herders)
    label = lambda p: p if isinstance(p, str) else p.name  # noqa: E731
    t = Tournament([n for n, _ in named], [label(c) for c in cats], [label(h) for h in herders])
    jobsl = [(gname, g, c, h) for gname, g in named for c in cats for h in herders]
    work = [(g, c, h) for _, g, c, h in jobsl]
    if jobs > 1 and work:
        with ThreadPoolExecutor(jobs) as ex:
            results = list(ex.map(_cell, work))
    else:
        results = [_cell(w) for w in work]
    for (gname, _, c, h), r in zip(jobsl, results):
        t.cells[(gname, label(c), label(h))] = r
    return t
