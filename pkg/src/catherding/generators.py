"""Graph families with fixed, documented labelings.

* path: 0-1-...-(n-1); cycle adds (0, n-1)
* star: centre 0, leaves 1..n
* wheel: hub 0, rim 1..n-1 in cyclic order
* hypercube: vertices are bitstrings read as integers
* grid_gadget: grid vertex (r, c) is r*p + c, then k subdivision vertices per
  grid edge, grid edges taken in sorted order
* gap_gadget: 4-cycle 0-1-3-2-0 whose vertex 3 belongs to a clique on 3..n+1
* chained_cliques: cliques in descending size on consecutive ids, each joined
  to the next by a bridge between their lowest ids
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .graph import Graph, GraphError


def _need(cond: bool, msg: str):
    if not cond:
        raise GraphError(msg)


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star(leaves: int) -> Graph:
    _need(leaves >= 0, "star needs a non-negative leaf count")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def wheel(n: int) -> Graph:
    _need(n >= 4, "wheel needs n >= 4 (the hub plus a rim cycle of at least 3)")
    rim = [(i, i + 1) for i in range(1, n - 1)] + [(1, n - 1)]
    return Graph(n, [(0, i) for i in range(1, n)] + rim)


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def hypercube(d: int) -> Graph:
    _need(d >= 0, "hypercube needs d >= 0")
    n = 1 << d
    return Graph(n, [(v, v | (1 << b)) for v in range(n) for b in range(d) if not v >> b & 1])


def grid_gadget(p: int, k: int) -> Graph:
    """p x p grid with every edge replaced by k parallel paths of length two."""
    _need(p >= 3 and k >= 1, "grid gadget needs p >= 3 and k >= 1")
    grid_edges = []
    for r in range(p):
        for c in range(p):
            v = r * p + c
            if c + 1 < p:
                grid_edges.append((v, v + 1))
            if r + 1 < p:
                grid_edges.append((v, v + p))
    grid_edges.sort()
    edges = []
    nxt = p * p
    for u, v in grid_edges:
        for _ in range(k):
            edges += [(u, nxt), (v, nxt)]
            nxt += 1
    return Graph(nxt, edges)


def spider() -> Graph:
    """Seven-vertex path 0..6 with an extra leaf 7 on the middle vertex 3."""
    return Graph(8, [(i, i + 1) for i in range(6)] + [(3, 7)])


spider_fig3 = spider  # name used by external callers


def gap_gadget(n: int) -> Graph:
    """4-cycle sharing its vertex 3 with a clique of n-1 vertices."""
    _need(n >= 5, "gap gadget needs n >= 5")
    clique = range(3, n + 2)
    return Graph(n + 2, [(0, 1), (1, 3), (2, 3), (0, 2)] + list(combinations(clique, 2)))


def chained_cliques(parts: Sequence[int]) -> Graph:
    sizes = sorted((int(x) for x in getattr(parts, "parts", parts)), reverse=True)
    _need(bool(sizes) and all(s >= 1 and s != 2 for s in sizes),
          "chained cliques need parts >= 1 and no part equal to 2")
    edges = []
    starts = []
    base = 0
    for s in sizes:
        starts.append(base)
        edges += combinations(range(base, base + s), 2)
        base += s
    edges += [(a, b) for a, b in zip(starts, starts[1:])]
    return Graph(base, edges)


FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "wheel": (wheel, 1),
    "complete": (complete, 1),
    "hypercube": (hypercube, 1),
    "gr": (grid_gadget, 2),
    "spider": (spider, 0),
    "gap": (gap_gadget, 1),
    "chain": (chained_cliques, None),
}


def from_spec(spec: str) -> Graph:
    """Build a graph from ``family:args`` such as ``path:9``, ``gr:3,1`` or ``chain:3,3,1``."""
    name, _, rest = spec.partition(":")
    if name not in FAMILIES:
        raise GraphError(f"unknown family '{name}'; choose from {', '.join(sorted(FAMILIES))}")
    fn, arity = FAMILIES[name]
    try:
        args = [int(x) for x in rest.split(",")] if rest else []
    except ValueError:
        raise GraphError(f"malformed generator spec '{spec}'") from None
    if arity is None:
        return fn(args)
    if len(args) != arity:
        raise GraphError(f"'{name}' takes {arity} parameter(s), got {len(args)}")
    return fn(*args)
