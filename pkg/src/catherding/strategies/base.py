"""Strategy interfaces and the structural helpers strategies share."""

from __future__ import annotations

import copy
from dataclasses import dataclass
from typing import Hashable, Iterable

from ..graph import EdgeId, Graph, GraphError, canonical_edge


class StrategyError(RuntimeError):
    """A strategy met a position its rules do not cover.

    ``branch`` names the rule that was active.
    """

    def __init__(self, branch: str, message: str):
        super().__init__(f"[{branch}] {message}")
        self.branch = branch


class Strategy:
    """Deterministic, possibly stateful policy.

    All memory lives in attributes holding immutable values, so ``clone`` is a
    shallow copy and ``snapshot`` is a hashable summary of that memory.
    """

    name = "strategy"
    side = None  # "cat" or "herder"

    def reset(self) -> None:
        pass

    def snapshot(self) -> Hashable:
        return tuple(sorted((k, v) for k, v in vars(self).items()))

    def clone(self) -> "Strategy":
        return copy.copy(self)

    def next(self, state):
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


class HerderStrategy(Strategy):
    side = "herder"

    def next(self, state) -> EdgeId:
        raise NotImplementedError


class CatStrategy(Strategy):
    side = "cat"

    def opening(self, g: Graph) -> int:
        raise NotImplementedError

    def next(self, state) -> int:
        raise NotImplementedError


@dataclass(frozen=True)
class Restriction:
    """Voluntary confinement: the cat plays as if only ``allowed`` minus
    ``banned`` existed.  ``until`` names the condition that lifts it."""

    allowed: frozenset | None = None
    banned: frozenset = frozenset()
    until: Hashable = None

    def usable(self, v: int) -> bool:
        return (self.allowed is None or v in self.allowed) and v not in self.banned


NO_RESTRICTION = Restriction()


# -- structural helpers ---------------------------------------------------------


def reach(g: Graph, v: int, usable=None) -> frozenset[int]:
    """Vertices reachable from ``v`` through vertices accepted by ``usable``."""
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if y not in seen and (usable is None or usable(y)):
                seen.add(y)
                stack.append(y)
    return frozenset(seen)


def induced_edges(g: Graph, vs: Iterable[int]) -> list[EdgeId]:
    vs = set(vs)
    return [e for e in g.edges() if e[0] in vs and e[1] in vs]


def induced_degree(g: Graph, v: int, vs: frozenset) -> int:
    return sum(1 for y in g.neighbors(v) if y in vs)


def path_order(g: Graph, vs: frozenset) -> list[int] | None:
    """Vertices of G[vs] along the path from its lower-id endpoint, or None."""
    if len(vs) == 1:
        return [next(iter(vs))]
    nbrs = {v: [y for y in g.neighbors(v) if y in vs] for v in vs}
    if sum(len(a) for a in nbrs.values()) != 2 * (len(vs) - 1):
        return None
    ends = sorted(v for v, a in nbrs.items() if len(a) == 1)
    if len(ends) != 2 or any(len(a) > 2 for a in nbrs.values()):
        return None
    order = [ends[0]]
    prev = None
    while len(order) < len(vs):
        x = order[-1]
        nxt = [y for y in nbrs[x] if y != prev]
        if not nxt:
            return None
        prev = x
        order.append(nxt[0])
    return order


def local_bridges(g: Graph, vs: frozenset) -> list[EdgeId]:
    from ..graph import bridges

    return [e for e in bridges(g.induced(vs)) if e[0] in vs]


def local_blocks(g: Graph, vs: frozenset) -> tuple[list[frozenset], list[EdgeId]]:
    """2-edge-connected pieces of G[vs], sorted by (size desc, min id)."""
    br = set(local_bridges(g, vs))
    comps = []
    seen: set[int] = set()
    for v in sorted(vs):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y in vs and y not in comp and canonical_edge(x, y) not in br:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(frozenset(comp))
    comps.sort(key=lambda c: (-len(c), min(c)))
    return comps, sorted(br)


def best_vertex(g: Graph, candidates: Iterable[int], scope: frozenset, exclude: int | None = None):
    """Max degree inside ``scope``, then lowest id; None if no candidate."""
    best = None
    for v in candidates:
        if v == exclude:
            continue
        key = (-induced_degree(g, v, scope), v)
        if best is None or key < best[0]:
            best = (key, v)
    return None if best is None else best[1]


def check_edge(g: Graph, e) -> EdgeId:
    ce = canonical_edge(*e)
    if not g.has_edge(*ce):
        raise GraphError(f"edge {ce} absent")
    return ce
