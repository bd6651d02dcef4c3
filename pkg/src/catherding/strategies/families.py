"""Proof strategies for paths, cycles, stars, wheels and cutwidth orderings.

Every rule breaks ties towards the lowest vertex or edge id.
"""

from __future__ import annotations

from ..graph import EdgeId, Graph, canonical_edge
from .base import CatStrategy, HerderStrategy, StrategyError, path_order, reach

# -- shared path rules -----------------------------------------------------------


def middle_vertex(order: list[int]) -> int:
    L = len(order)
    if L % 2:
        return order[(L - 1) // 2]
    return min(order[L // 2 - 1], order[L // 2])


def path_cat_step(g: Graph, view: frozenset, cat: int, bans: frozenset,
                  branch: str = "path") -> tuple[int, frozenset]:
    """Cat move on a path view; returns (destination, updated virtual bans).

    An odd path with the cat already on its centre gets a virtual leaf cut:
    the far leaf is banned and the cat steps to a centre of what remains.
    """
    order = path_order(g, view)
    if order is None:
        raise StrategyError(branch, f"cat's component {sorted(view)} is not a path")
    L = len(order)
    if L < 2:
        raise StrategyError(branch, "no legal move on a single vertex")
    i = order.index(cat)
    if L % 2:
        c = (L - 1) // 2
        if i != c:
            return order[c], bans
        left, right = order[c - 1], order[c + 1]
        if left < right:
            return left, bans | {order[-1]}
        return right, bans | {order[0]}
    a, b = order[L // 2 - 1], order[L // 2]
    if cat == a:
        return b, bans
    if cat == b:
        return a, bans
    return min(a, b), bans


def path_herder_cut(order: list[int], cat: int) -> EdgeId:
    L = len(order)
    if L % 2 == 0:
        return canonical_edge(order[L // 2 - 1], order[L // 2])
    c = (L - 1) // 2
    i = order.index(cat)
    if i == c:
        return min(canonical_edge(order[c - 1], order[c]), canonical_edge(order[c], order[c + 1]))
    if i < c:
        return canonical_edge(order[c], order[c + 1])
    return canonical_edge(order[c - 1], order[c])


def _component_path(g: Graph, cat: int, branch: str) -> list[int]:
    order = path_order(g, g.component_of(cat))
    if order is None:
        raise StrategyError(branch, f"cat's component {sorted(g.component_of(cat))} is not a path")
    return order


def cycle_order(g: Graph, start: int) -> list[int] | None:
    """Walk of the cycle containing ``start`` towards its lower neighbour first."""
    comp = g.component_of(start)
    if len(comp) < 3 or any(g.degree(v) != 2 for v in comp):
        return None
    walk = [start]
    prev, x = start, g.neighbors(start)[0]
    while x != start:
        walk.append(x)
        prev, x = x, [y for y in g.neighbors(x) if y != prev][0]
    return walk


def is_path_graph(g: Graph) -> bool:
    return g.n >= 1 and g.is_connected() and path_order(g, frozenset(range(g.n))) is not None


def is_star_graph(g: Graph) -> bool:
    if g.n == 1:
        return g.num_edges == 0
    return g.num_edges == g.n - 1 and max(g.degrees()) == g.n - 1


def is_wheel_graph(g: Graph) -> bool:
    """Hub 0 joined to rim 1..n-1, rim edges (i, i+1) plus (1, n-1)."""
    n = g.n
    if n < 4:
        return False
    want = {(0, i) for i in range(1, n)} | {(i, i + 1) for i in range(1, n - 1)} | {(1, n - 1)}
    return set(g.edges()) == want


# -- paths -----------------------------------------------------------------------


class PathCat(CatStrategy):
    """Always head for a middle-most vertex of the surviving path."""

    name = "path_cat"

    def __init__(self):
        self.bans = frozenset()

    def reset(self):
        self.bans = frozenset()

    def opening(self, g: Graph) -> int:
        if not is_path_graph(g):
            raise StrategyError("path", "path_cat needs a path as starting graph")
        return middle_vertex(_component_path(g, 0, "path"))

    def next(self, state) -> int:
        g, cat = state.graph, state.cat
        view = reach(g, cat, lambda y: y not in self.bans)
        if len(view) < 2:
            self.bans = frozenset()
            view = g.component_of(cat)
        dest, self.bans = path_cat_step(g, view, cat, self.bans)
        return dest


class PathHerder(HerderStrategy):
    """Cut a central edge; on odd paths cut the centre edge away from the cat."""

    name = "path_herder"

    def next(self, state) -> EdgeId:
        return path_herder_cut(_component_path(state.graph, state.cat, "path_herder"), state.cat)


# -- cycles ----------------------------------------------------------------------


class CycleCat(PathCat):
    name = "cycle_cat"

    def opening(self, g: Graph) -> int:
        if cycle_order(g, 0) is None or not g.is_connected():
            raise StrategyError("cycle", "cycle_cat needs a cycle as starting graph")
        return 0


class CycleHerder(HerderStrategy):
    """Odd cycles: cut opposite the cat, then lock it on its side of the centre.
    Even cycles: cut at the opposite vertex, then play the path rules."""

    name = "cycle_herder"

    def __init__(self):
        self.phase = "open"
        self.center = None

    def reset(self):
        self.phase, self.center = "open", None

    def next(self, state) -> EdgeId:
        g, cat = state.graph, state.cat
        if self.phase == "open":
            walk = cycle_order(g, cat)
            if walk is None or not g.is_connected():
                raise StrategyError("cycle_herder", "starting graph is not a cycle")
            n = len(walk)
            if n % 2:
                k = n // 2
                self.phase, self.center = "lock", cat
                return canonical_edge(walk[k], walk[k + 1])
            self.phase = "path"
            opp = walk[n // 2]
            return min(canonical_edge(opp, y) for y in g.neighbors(opp))
        order = _component_path(g, cat, "cycle_herder")
        if self.phase == "lock":
            self.phase = "path"
            if self.center in order and cat != self.center:
                c = order.index(self.center)
                i = order.index(cat)
                if i < c:
                    return canonical_edge(order[c - 1], order[c])
                return canonical_edge(order[c], order[c + 1])
        return path_herder_cut(order, cat)


# -- stars -----------------------------------------------------------------------


class StarHerder(HerderStrategy):
    """Cut the cat's edge once it sits on a leaf; otherwise stall."""

    name = "star_herder"

    def __init__(self):
        self.checked = False

    def reset(self):
        self.checked = False

    def next(self, state) -> EdgeId:
        g, cat = state.graph, state.cat
        if not self.checked:
            if not is_star_graph(g):
                raise StrategyError("star_herder", "starting graph is not a star")
            self.checked = True
        if g.degree(cat) == 1:
            return g.incident_edges(cat)[0]
        _, cm = g.component_masks(cat)
        return g.universe[(cm & -cm).bit_length() - 1]


# -- wheels ----------------------------------------------------------------------


class WheelHerder(HerderStrategy):
    """Cut every rim edge (lowest first), then finish on the remaining star."""

    name = "wheel_herder"

    def __init__(self):
        self.checked = False

    def reset(self):
        self.checked = False

    def next(self, state) -> EdgeId:
        g, cat = state.graph, state.cat
        if not self.checked:
            if not is_wheel_graph(g):
                raise StrategyError("wheel_herder", "starting graph is not a wheel with hub 0")
            self.checked = True
        if g.degree(cat) == 1:
            return g.incident_edges(cat)[0]
        comp_edges = [g.universe[i] for i in _bits(g.component_masks(cat)[1])]
        rim = [e for e in comp_edges if e[0] != 0]
        return rim[0] if rim else comp_edges[0]


def _bits(mask):
    from ..graph import iter_bits

    return iter_bits(mask)


def safe_zones(g: Graph, n: int) -> list[frozenset]:
    """Rim vertex sets of the chordless hub cycles of a (cut) wheel on n vertices.

    Each zone runs between two cyclically consecutive rim vertices that still
    have spokes, along a fully intact rim arc.
    """
    rim = list(range(1, n))
    spoked = [v for v in rim if g.has_edge(0, v)]
    if len(spoked) < 2:
        return []
    zones = []
    for idx, a in enumerate(spoked):
        b = spoked[(idx + 1) % len(spoked)]
        arc = [a]
        x = a
        ok = True
        while x != b:
            y = x % (n - 1) + 1
            if not g.has_edge(x, y):
                ok = False
                break
            arc.append(y)
            x = y
        if ok:
            zones.append(frozenset(arc))
    return zones


class WheelCat(CatStrategy):
    """Stay on a safe zone's rim; otherwise look one cut ahead."""

    name = "wheel_cat"

    def __init__(self):
        self.n = None

    def reset(self):
        self.n = None

    def opening(self, g: Graph) -> int:
        if not is_wheel_graph(g):
            raise StrategyError("wheel_cat", "starting graph is not a wheel with hub 0")
        self.n = g.n
        return 1

    def next(self, state) -> int:
        g, cat = state.graph, state.cat
        n = self.n or g.n
        comp = g.component_of(cat)
        targets = sorted({v for z in safe_zones(g, n) for v in z if v in comp and v != cat})
        # a zone vertex must survive one more cut with a non-leaf escape;
        # on small wheels a zone can collapse into a star centred on the cat
        for v in targets:
            if _lookahead(g, v) == 3:
                return v
        return max((v for v in sorted(comp) if v != cat),
                   key=lambda u: (_lookahead(g, u), -u))


def _lookahead(g: Graph, u: int) -> int:
    """3 if after any single cut the cat at u can reach a vertex of degree >= 2,
    2 if u itself has degree >= 2, else 1."""
    if g.degree(u) < 2:
        return 1
    _, cm = g.component_masks(u)
    for i in _bits(cm):
        h = g.with_mask(g.mask & ~(1 << i))
        if not any(w != u and h.degree(w) >= 2 for w in h.component_of(u)):
            return 2
    return 3


# -- cutwidth orderings ----------------------------------------------------------


class CutwidthHerder(HerderStrategy):
    """Binary search along a vertex ordering, one separator edge per turn.

    The herder tracks an index interval [lo, hi] of the ordering that contains
    the cat's component, picks a virtual path cut by the path rules and then
    deletes the separator edges inside the cat's component, lowest first.
    """

    name = "cutwidth_herder"

    def __init__(self, ordering):
        self.ordering = tuple(ordering)
        self.reset()

    def reset(self):
        self.lo, self.hi, self.boundary = 0, len(self.ordering) - 1, None

    def snapshot(self):
        return (self.lo, self.hi, self.boundary)

    def next(self, state) -> EdgeId:
        g, cat = state.graph, state.cat
        if sorted(self.ordering) != list(range(g.n)):
            raise StrategyError("cutwidth", f"ordering {list(self.ordering)} is not a permutation of V(G)")
        pos = {v: i for i, v in enumerate(self.ordering)}
        _, cm = g.component_masks(cat)
        comp_edges = [g.universe[i] for i in _bits(cm)]
        while True:
            L = self.hi - self.lo + 1
            if L < 2:
                raise StrategyError("cutwidth", "cat escaped the tracked interval")
            if self.boundary is None:
                i = pos[cat]
                if L % 2 == 0:
                    self.boundary = self.lo + L // 2 - 1
                else:
                    c = self.lo + (L - 1) // 2
                    self.boundary = c if i < c else c - 1
            b = self.boundary
            crossing = [e for e in comp_edges
                        if min(pos[e[0]], pos[e[1]]) <= b < max(pos[e[0]], pos[e[1]])]
            if crossing:
                return crossing[0]
            if pos[cat] <= b:
                self.hi = b
            else:
                self.lo = b + 1
            self.boundary = None

