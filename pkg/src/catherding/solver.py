"""Exact minimax solver for Cat Herding.

Values count the cuts still to come under optimal play.  The herder node
``(graph, cat)`` with the herder to move has value 0 when the cat is
isolated and otherwise ``min_e 1 + catnode(graph - e, cat)``; a cat node is 0
if the cut isolated the cat and otherwise the maximum herder-node value over
the cat's destinations (its component minus its own vertex).

By default the herder only cuts inside the cat's component and the
transposition table is keyed on that component's edge mask.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from typing import Hashable, Union

from .graph import EdgeId, Graph, GraphError, canonical_edge, component_masks, iter_bits
from .records import GameRecord

INF = 1 << 30

Move = Union[EdgeId, int]


class Side(enum.Enum):
    HERDER = "herder"
    CAT = "cat"


class IllegalMoveError(RuntimeError):
    """A player produced a move that is not legal in the current state."""

    def __init__(self, message: str, state: "GameState | None" = None, move=None):
        super().__init__(message)
        self.state = state
        self.move = move


class TerminalStateError(ValueError):
    pass


@dataclass(frozen=True)
class GameState:
    graph: Graph
    cat: int
    to_move: Side
    cuts_so_far: int = 0

    def __post_init__(self):
        if not 0 <= self.cat < self.graph.n:
            raise GraphError(f"cat vertex {self.cat} out of range")

    @property
    def over(self) -> bool:
        return self.graph.degree(self.cat) == 0

    def describe(self) -> str:
        return (f"{self.to_move.value} to move, cat at {self.cat}, "
                f"{self.cuts_so_far} cuts, edges {self.graph.edges()}")


@dataclass
class SolveResult:
    value: int
    best_move: Move | None = None
    nodes_expanded: int = 0
    table_hits: int = 0


def _default_budget() -> int | None:
    raw = os.environ.get("CATHERDING_TT_ENTRIES")
    return int(raw) if raw else None


class Solver:
    """Alpha-beta search with a transposition table of value intervals.

    ``prune=False`` lets the herder cut anywhere (passing moves included) and
    keys the table on the full edge mask; values are identical, which the
    test-suite checks.  ``max_entries`` caps the table; once full, new
    positions are searched without being stored.
    """

    def __init__(self, graph: Graph, prune: bool = True, max_entries: int | None = None):
        self.graph = graph
        self.prune = prune
        self.max_entries = _default_budget() if max_entries is None else max_entries
        self._inc = graph._u.inc
        self._xe = graph._u.xor_ends
        self._ends = graph._u.edges
        self.table: dict[tuple[int, int], tuple[int, int]] = {}
        self.nodes = 0
        self.hits = 0

    # -- core search ---------------------------------------------------------

    def _store(self, key, lo, hi):
        if self.max_entries is None or len(self.table) < self.max_entries or key in self.table:
            self.table[key] = (lo, hi)

    def _herder(self, mask: int, v: int, alpha: int, beta: int) -> int:
        _, cm = component_masks(self._inc, self._xe, mask, v)
        if not cm:
            return 0
        return self._hnode(cm if self.prune else mask, cm, v, alpha, beta)

    def _hnode(self, moves: int, cm: int, v: int, alpha: int, beta: int) -> int:
        """Herder to move, cat on ``v`` whose component has edge mask ``cm``.

        ``moves`` is the set of cuttable edges and doubles as the table key.
        """
        key = (moves, v)
        entry = self.table.get(key)
        if entry is None:
            lo, hi = 1, cm.bit_count()
        else:
            self.hits += 1
            lo, hi = entry
        if lo == hi or lo >= beta:
            return lo
        if hi <= alpha:
            return hi
        a = max(alpha, lo)
        b = min(beta, hi)
        self.nodes += 1
        best = INF
        bound = b
        cls = self._twin_classes(cm, v) if self.prune else None
        seen = set()
        ends = self._ends
        m = moves
        while m:
            low = m & -m
            m ^= low
            if cls is not None:
                x, y = ends[low.bit_length() - 1]
                x, y = cls[x], cls[y]
                orbit = (x, y) if x <= y else (y, x)
                if orbit in seen:
                    continue
                seen.add(orbit)
            val = 1 + self._cat(moves ^ low, v, a - 1, bound - 1)
            if val < best:
                best = val
                if best <= a:
                    break
                if best < bound:
                    bound = best
        if best <= a:
            self._store(key, lo, min(hi, best))
        elif best >= b:
            self._store(key, max(lo, best), hi)
        else:
            self._store(key, best, best)
        return best

    def _twin_classes(self, cm: int, v: int) -> dict[int, int]:
        """Class id per vertex of the component: vertices with equal open or
        equal closed neighbourhoods share a class, ``v`` is kept alone.

        Swapping two twins is an automorphism fixing ``v``, so cuts and
        destinations only need one representative per orbit.
        """
        nb: dict[int, int] = {}
        for i in iter_bits(cm):
            x, y = self._ends[i]
            nb[x] = nb.get(x, 0) | 1 << y
            nb[y] = nb.get(y, 0) | 1 << x
        cls = {v: 0}
        by_open: dict[int, int] = {}
        by_closed: dict[int, int] = {}
        nxt = 1
        for u in sorted(nb):
            if u == v:
                continue
            o, c = nb[u], nb[u] | 1 << u
            k = by_open.get(o, by_closed.get(c))
            if k is None:
                k = nxt
                nxt += 1
            cls[u] = k
            by_open.setdefault(o, k)
            by_closed.setdefault(c, k)
        return cls

    def _cat(self, mask: int, v: int, alpha: int, beta: int) -> int:
        vs, cm = component_masks(self._inc, self._xe, mask, v)
        if not cm:
            return 0
        inc = self._inc
        moves = cm if self.prune else mask
        # one destination per twin class, high degree first
        dests = iter_bits(vs ^ (1 << v))
        if self.prune:
            cls = self._twin_classes(cm, v)
            picked = {}
            for u in dests:
                picked.setdefault(cls[u], u)
            dests = picked.values()
        dests = sorted(dests, key=lambda u: -(inc[u] & cm).bit_count())
        best = -INF
        a = alpha
        for u in dests:
            val = self._hnode(moves, cm, u, a, beta)
            if val > best:
                best = val
                if best >= beta:
                    break
                if best > a:
                    a = best
        return best

    # -- exact queries -------------------------------------------------------

    def herder_value(self, mask: int, cat: int) -> int:
        return self._herder(mask, cat, -INF, INF)

    def cat_value(self, mask: int, cat: int) -> int:
        return self._cat(mask, cat, -INF, INF)

    def value_at(self, v: int) -> int:
        if not 0 <= v < self.graph.n:
            raise GraphError(f"vertex {v} out of range")
        return self.herder_value(self.graph.mask, v)

    def values(self) -> list[int]:
        return [self.value_at(v) for v in range(self.graph.n)]

    def best_herder_move(self, mask: int, cat: int) -> tuple[EdgeId, int]:
        """Lowest-id cut achieving the value; returns (edge, value)."""
        value = self.herder_value(mask, cat)
        if value == 0:
            raise TerminalStateError("cat is already isolated")
        _, cm = component_masks(self._inc, self._xe, mask, cat)
        moves = cm if self.prune else mask
        for i in iter_bits(moves):
            if 1 + self._cat(mask ^ (1 << i), cat, value - 2, value) <= value:
                return self.graph._u.edges[i], value
        raise AssertionError("no move reproduces the minimax value")

    def best_cat_move(self, mask: int, cat: int) -> tuple[int, int]:
        """Lowest-id destination achieving the value; returns (vertex, value)."""
        vs, cm = component_masks(self._inc, self._xe, mask, cat)
        if not cm:
            raise TerminalStateError("cat is isolated and cannot move")
        value = self.cat_value(mask, cat)
        for u in iter_bits(vs ^ (1 << cat)):
            if self._herder(mask, u, value - 1, value + 1) >= value:
                return u, value
        raise AssertionError("no move reproduces the minimax value")

    def best_start(self) -> tuple[int, int]:
        vals = self.values()
        best = max(vals)
        return vals.index(best), best


# -- module-level API ----------------------------------------------------------


def cut_value_at(g: Graph, v: int, prune: bool = True) -> int:
    return Solver(g, prune=prune).value_at(v)


def cut_value(g: Graph, prune: bool = True, jobs: int = 1) -> int:
    if g.n == 0:
        return 0
    if jobs > 1 and g.n > 1:
        return max(parallel_values(g, jobs, prune))
    return max(Solver(g, prune=prune).values())


def _values_worker(args):
    g, vs, prune = args
    s = Solver(g, prune=prune)
    return [s.value_at(v) for v in vs]


def parallel_values(g: Graph, jobs: int, prune: bool = True) -> list[int]:
    """Per-vertex values with root-level parallelism (one table per worker)."""
    from concurrent.futures import ProcessPoolExecutor

    chunks = [list(range(g.n))[i::jobs] for i in range(jobs)]
    out = [0] * g.n
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for vs, vals in zip(chunks, pool.map(_values_worker, [(g, c, prune) for c in chunks])):
            for v, val in zip(vs, vals):
                out[v] = val
    return out


def solve(state: GameState, solver: Solver | None = None) -> SolveResult:
    """Exact value of ``state`` plus an optimal move (None when terminal)."""
    s = solver or Solver(state.graph)
    n0, h0 = s.nodes, s.hits
    mask = state.graph.mask
    if state.over:
        return SolveResult(0, None, 0, 0)
    if state.to_move is Side.HERDER:
        move, value = s.best_herder_move(mask, state.cat)
    else:
        move, value = s.best_cat_move(mask, state.cat)
    return SolveResult(value, move, s.nodes - n0, s.hits - h0)


def optimal_move(state: GameState, solver: Solver | None = None) -> Move:
    if state.over:
        raise TerminalStateError("game is over: the cat is isolated")
    return solve(state, solver).best_move


def optimal_trace(g: Graph, solver: Solver | None = None) -> GameRecord:
    """Full game with both sides playing the lowest-id optimal move."""
    if g.n == 0:
        return GameRecord(g, None, [])
    s = solver or Solver(g)
    start, _ = s.best_start()
    rec = GameRecord(g, start, [])
    mask, cat = g.mask, start
    while component_masks(s._inc, s._xe, mask, cat)[1]:
        e, _ = s.best_herder_move(mask, cat)
        mask &= ~(1 << g.edge_index(e))
        if not component_masks(s._inc, s._xe, mask, cat)[1]:
            rec.turns.append((e, None))
            break
        dest, _ = s.best_cat_move(mask, cat)
        rec.turns.append((e, dest))
        cat = dest
    return rec


# -- best response against fixed strategies ------------------------------------


def _check_cat_move(state: GameState, u) -> int:
    if not isinstance(u, int) or isinstance(u, bool) or not 0 <= u < state.graph.n:
        raise IllegalMoveError(f"cat strategy returned {u!r}; state: {state.describe()}", state, u)
    if u == state.cat or u not in state.graph.component_of(state.cat):
        raise IllegalMoveError(
            f"cat strategy moved {state.cat} -> {u} illegally; state: {state.describe()}", state, u)
    return u


def _check_herder_move(state: GameState, e) -> EdgeId:
    try:
        ce = canonical_edge(*e)
    except (TypeError, ValueError, GraphError):
        raise IllegalMoveError(f"herder strategy returned {e!r}; state: {state.describe()}",
                               state, e) from None
    if not (0 <= ce[0] < state.graph.n and 0 <= ce[1] < state.graph.n) or not state.graph.has_edge(*ce):
        raise IllegalMoveError(f"herder strategy cut absent edge {ce}; state: {state.describe()}",
                               state, e)
    return ce


class _BestResponse:
    def __init__(self, g: Graph, herder_scope: str):
        if herder_scope not in ("all", "component"):
            raise ValueError("herder_scope must be 'all' or 'component'")
        self.g = g
        self.scope = herder_scope
        self.inc = g._u.inc
        self.xe = g._u.xor_ends
        self.m0 = g.num_edges
        self.memo: dict[tuple, tuple[int, int]] = {}
        self.replies: dict[tuple, tuple[int, object]] = {}
        self.nodes = 0

    def _state(self, mask, cat, side):
        return GameState(self.g.with_mask(mask), cat, side, self.m0 - mask.bit_count())

    def _cat_reply(self, mask: int, cat: int, strat):
        """The fixed cat's move and resulting memory, cached per observed state."""
        key = (mask, cat, strat.snapshot())
        hit = self.replies.get(key)
        if hit is None:
            s = strat.clone()
            state = self._state(mask, cat, Side.CAT)
            hit = (_check_cat_move(state, s.next(state)), s)
            self.replies[key] = hit
        return hit

    # fixed cat: herder searches (alpha-beta on the herder's min, memo of bounds)
    def herder_node(self, mask: int, cat: int, strat, alpha: int, beta: int) -> int:
        _, cm = component_masks(self.inc, self.xe, mask, cat)
        if not cm:
            return 0
        key = (mask, cat, strat.snapshot())
        lo, hi = self.memo.get(key, (1, cm.bit_count()))
        if lo == hi or lo >= beta:
            return lo
        if hi <= alpha:
            return hi
        a, b = max(alpha, lo), min(beta, hi)
        self.nodes += 1
        best = INF
        bound = b
        # cuts inside the cat's component first, passing cuts last
        order = list(iter_bits(cm))
        if self.scope == "all":
            order += iter_bits(mask & ~cm)
        for i in order:
            child = mask ^ (1 << i)
            if not (self.inc[cat] & child):
                val = 1
            else:
                u, s = self._cat_reply(child, cat, strat)
                val = 1 + self.herder_node(child, u, s, a - 1, bound - 1)
            if val < best:
                best = val
                if best <= a:
                    break
                bound = min(bound, best)
        if best <= a:
            self.memo[key] = (lo, min(hi, best))
        elif best >= b:
            self.memo[key] = (max(lo, best), hi)
        else:
            self.memo[key] = (best, best)
        return best

    # fixed herder: cat searches (max over destinations)
    def cat_turn(self, mask: int, cat: int, strat, alpha: int, beta: int) -> int:
        """Value with the herder (fixed) about to cut and the cat at ``cat``."""
        if not (self.inc[cat] & mask):
            return 0
        key = (mask, cat, strat.snapshot())
        lo, hi = self.memo.get(key, (1, self.m0))
        if lo == hi or lo >= beta:
            return lo
        if hi <= alpha:
            return hi
        a, b = max(alpha, lo), min(beta, hi)
        self.nodes += 1
        s = strat.clone()
        state = self._state(mask, cat, Side.HERDER)
        e = _check_herder_move(state, s.next(state))
        child = mask & ~(1 << self.g.edge_index(e))
        vs, cm = component_masks(self.inc, self.xe, child, cat)
        if not cm:
            best = 1
        else:
            best = -INF
            aa = a
            for u in iter_bits(vs ^ (1 << cat)):
                val = 1 + self.cat_turn(child, u, s, aa - 1, b - 1)
                if val > best:
                    best = val
                    if best >= b:
                        break
                    aa = max(aa, best)
        if best <= a:
            self.memo[key] = (lo, min(hi, best))
        elif best >= b:
            self.memo[key] = (max(lo, best), hi)
        else:
            self.memo[key] = (best, best)
        return best


def _mtd(search, guess: int) -> int:
    """Exact value from null-window probes (MTD(f)); ``guess`` seeds the first probe."""
    lo, hi = -INF, INF
    g = guess
    while lo < hi:
        beta = g + 1 if g == lo else g
        g = search(beta - 1, beta)
        if g < beta:
            hi = g
        else:
            lo = g
    return g


def _herder_playout(g: Graph, start: int, strat) -> int:
    """Score when the herder always cuts its lowest component edge (an upper bound)."""
    s = strat.clone()
    mask, cat, score = g.mask, start, 0
    inc, xe = g._u.inc, g._u.xor_ends
    m0 = g.num_edges
    while True:
        _, cm = component_masks(inc, xe, mask, cat)
        if not cm:
            return score
        mask ^= cm & -cm
        score += 1
        if not inc[cat] & mask:
            return score
        state = GameState(g.with_mask(mask), cat, Side.CAT, m0 - mask.bit_count())
        cat = _check_cat_move(state, s.next(state))


def best_response_score(g: Graph, fixed, fixed_side: Side, herder_scope: str = "all") -> int:
    """Guaranteed score of a deterministic strategy against exhaustive search.

    For a fixed cat the herder may cut any surviving edge (``herder_scope``
    ``"component"`` restricts it to the cat's component).  For a fixed herder
    the cat searches every opening vertex and every destination.
    """
    if g.n == 0:
        return 0
    br = _BestResponse(g, herder_scope)
    strat = fixed.clone()
    strat.reset()
    if fixed_side is Side.CAT:
        start = strat.opening(g)
        if not isinstance(start, int) or not 0 <= start < g.n:
            raise IllegalMoveError(f"cat strategy opened on {start!r}", None, start)
        guess = _herder_playout(g, start, strat)
        return _mtd(lambda a, b: br.herder_node(g.mask, start, strat, a, b), guess)
    return max(_mtd(lambda a, b, v=v: br.cat_turn(g.mask, v, strat, a, b), 1)
               for v in range(g.n))
