"""Strategies for complete graphs: binary-search herder and cat strategy C.

Cat strategy C keeps a voluntary restriction (an allowed vertex set plus
temporary bans) and a small *plan* describing what to do after the next cut.
Its view of the board is the cat's component inside the allowed vertices.
While that view is 2-edge-connected the cat hops to a maximum-degree vertex;
when it first stops being so, the sizes of its 2-edge-connected pieces
(the partition ``lam``, largest first) pick the branch.
"""

from __future__ import annotations

from ..graph import EdgeId, Graph, canonical_edge
from .base import (CatStrategy, HerderStrategy, StrategyError, best_vertex,
                   induced_edges, local_blocks, reach)
from .families import path_cat_step


def is_complete_graph(g: Graph) -> bool:
    return g.num_edges == g.n * (g.n - 1) // 2


def is_three_pow2(x: int) -> bool:
    """x = 3 * 2**m for some m >= 0."""
    return x % 3 == 0 and (x // 3) & (x // 3 - 1) == 0


def cuts_inside(g: Graph, vs) -> int:
    s = len(vs)
    return s * (s - 1) // 2 - len(induced_edges(g, vs))


def is_intact(g: Graph, vs) -> bool:
    return cuts_inside(g, vs) == 0


# -- herder ----------------------------------------------------------------------


class BinaryHerder(HerderStrategy):
    """Split the current clique into near-halves and cut between them.

    The lower ids go to the larger half.  Blocks of two or three vertices are
    finished with the path and triangle endgames.
    """

    name = "binary_herder"

    def __init__(self):
        self.reset()

    def reset(self):
        self.block = None
        self.split = None

    def next(self, state) -> EdgeId:
        g, cat = state.graph, state.cat
        if self.block is None:
            if not is_complete_graph(g):
                raise StrategyError("binary_herder", "starting graph is not complete")
            self.block = tuple(range(g.n))
        while True:
            m = len(self.block)
            if m == 2:
                return canonical_edge(*self.block)
            if m == 3:
                if g.degree(cat) == 1:
                    return g.incident_edges(cat)[0]
                rest = [v for v in self.block if v != cat]
                if len(rest) == 2 and g.has_edge(*rest):
                    return canonical_edge(*rest)
                return g.incident_edges(cat)[0]
            if m < 2:
                raise StrategyError("binary_herder", "cat left the tracked block")
            if self.split is None:
                h = (m + 1) // 2
                self.split = (self.block[:h], self.block[h:])
            S, T = self.split
            tset = set(T)
            for u in S:
                for v in g.neighbors(u):
                    if v in tset:
                        return canonical_edge(u, v)
            self.block = S if cat in S else T
            self.split = None


# -- cat -------------------------------------------------------------------------


def block_tree_center(blocks: list[frozenset], bridges: list[EdgeId]) -> int:
    """Index of the block of least eccentricity in the bridge tree (lowest index on ties)."""
    where = {v: i for i, b in enumerate(blocks) for v in b}
    adj = {i: set() for i in range(len(blocks))}
    for a, b in bridges:
        adj[where[a]].add(where[b])
        adj[where[b]].add(where[a])

    def ecc(i):
        dist = {i: 0}
        frontier = [i]
        while frontier:
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        nxt.append(y)
            frontier = nxt
        return max(dist.values())

    return min(range(len(blocks)), key=lambda i: (ecc(i), i))


class CatStrategyC(CatStrategy):
    """The full cat strategy for play starting on a complete graph."""

    name = "cat_strategy_C"

    def __init__(self):
        self.reset()

    def reset(self):
        self.region = None  # allowed vertices, None = whole graph
        self.banned = frozenset()
        self.plan = None
        self.saved = None  # region to restore when a hold ends

    def snapshot(self):
        return (self.region, self.banned, self.plan, self.saved)

    # -- helpers ------------------------------------------------------------

    def _usable(self, v):
        return (self.region is None or v in self.region) and v not in self.banned

    def _view(self, g: Graph, cat: int, bans: bool = True) -> frozenset:
        if bans:
            return reach(g, cat, self._usable)
        return reach(g, cat, lambda v: self.region is None or v in self.region)

    def _restrict(self, g, cat, vs, branch) -> int:
        """Confine play to ``vs`` and move to its best vertex."""
        self.region = frozenset(vs)
        self.banned = frozenset()
        self.plan = None
        return self._move_into(g, cat, vs, branch)

    def _move_into(self, g, cat, vs, branch, scope=None) -> int:
        comp = g.component_of(cat)
        dest = best_vertex(g, sorted(v for v in vs if v in comp), scope or frozenset(vs), exclude=cat)
        if dest is None:
            raise StrategyError(branch, f"no legal vertex in {sorted(vs)} from {cat}")
        return dest

    def _partition(self, g, cat, bans=False):
        blocks, _ = local_blocks(g, self._view(g, cat, bans))
        return tuple(len(b) for b in blocks)

    def opening(self, g: Graph) -> int:
        if not is_complete_graph(g) or g.n < 1:
            raise StrategyError("cat_strategy_C", "starting graph is not complete")
        self.reset()
        return 0

    # -- main loop ----------------------------------------------------------

    def next(self, state) -> int:
        g, cat = state.graph, state.cat
        view = self._view(g, cat)
        if len(view) < 2:
            # restriction leaves no move: restore the outer region, then drop it
            if self.saved is not None:
                self.region = self.saved[0]
            else:
                self.region = None
            self.banned, self.plan, self.saved = frozenset(), None, None
            view = self._view(g, cat)
            if len(view) < 2:
                self.region = None
                view = self._view(g, cat)
        if self.plan is not None:
            dest = self._continue_plan(g, cat, view)
            if dest is not None:
                return dest
            view = self._view(g, cat)
        return self._dispatch(g, cat, view)

    def _dispatch(self, g: Graph, cat: int, view: frozenset) -> int:
        blocks, br = local_blocks(g, view)
        if len(blocks) == 1:
            return self._move_into(g, cat, view, "2ec", scope=view)
        lam = tuple(len(b) for b in blocks)
        n = len(view)
        if n <= 9 and (lam[0] == 3 or lam == (6, 1)):
            return self._small(g, cat, view, blocks, br, lam)
        if lam[0] == 1:
            self.plan = ("path",)
            dest, self.banned = path_cat_step(g, view, cat, self.banned, "path")
            return dest
        if len(lam) == 3 and lam[0] == lam[1] and is_three_pow2(lam[0]) and lam[2] == 1:
            center = blocks[block_tree_center(blocks, br)]
            self.plan = ("twin_wait", tuple(b for b in blocks if len(b) == lam[0]))
            return self._move_into(g, cat, center, "twin")
        if lam[0] - lam[1] <= 1:
            return self._near_binary(g, cat, view, blocks, lam)
        if len(lam) == 2 and is_three_pow2(lam[0]) and lam[1] == 1:
            self.banned = blocks[1]
            self.plan = ("pend", lam)
            return self._move_into(g, cat, blocks[0], "pend")
        return self._restrict(g, cat, blocks[0], "largest")

    # -- small partitions ---------------------------------------------------

    def _small(self, g, cat, view, blocks, br, lam) -> int:
        if lam == (3, 3, 1):
            center = blocks[block_tree_center(blocks, br)]
            if center == frozenset([cat]):
                raise StrategyError("k331", "cat already sits on the centre singleton")
            self.plan = ("k331", tuple(b for b in blocks if len(b) == 3))
            return self._move_into(g, cat, center, "k331")
        if lam[0] == 3:
            return self._triangle_plan(g, cat, blocks, br, "k3")
        # lam == (6, 1)
        self.saved = (self.region,)
        self.plan = ("hold61", lam)
        self.region = blocks[0]
        return self._move_into(g, cat, blocks[0], "hold61")

    def _triangle_plan(self, g, cat, blocks, br, branch) -> int:
        options = []
        for tri in blocks:
            if len(tri) != 3:
                continue
            for a, b in br:
                for w, z in ((a, b), (b, a)):
                    if w in tri and z not in tri:
                        for x in tri:
                            if x not in (w, cat):
                                options.append((x, w, z, tri))
        if not options:
            raise StrategyError(branch, "no triangle with a bridge is available")
        x, w, z, tri = min(options, key=lambda o: (o[0], o[1], o[2]))
        self.plan = ("k3", tri, w, z)
        return x

    # -- plans in progress --------------------------------------------------

    def _continue_plan(self, g: Graph, cat: int, view: frozenset):
        tag = self.plan[0]
        if tag == "path":
            dest, self.banned = path_cat_step(g, view, cat, self.banned, "path")
            return dest
        if tag == "k3":
            _, tri, w, z = self.plan
            if is_intact(g, tri):
                return self._restrict(g, cat, tri, "k3")
            if not g.has_edge(w, z):
                raise StrategyError("k3", f"bridge {(w, z)} vanished together with a triangle edge")
            ys = [y for y in sorted(tri) if y != w and g.has_edge(y, w)]
            if not ys or w not in g.component_of(cat):
                raise StrategyError("k3", f"triangle vertex {w} is out of reach")
            self.region = frozenset((ys[0], w, z))
            self.banned = frozenset()
            self.plan = ("path",)
            return w
        if tag == "k331":
            return self._after_k331(g, cat, view)
        if tag == "hold61":
            if self._outer_partition(g, cat) != self.plan[1]:
                self.region = self.saved[0]
                self.plan, self.saved = None, None
                return None
            return self._hold_move(g, cat, view, "hold61")
        if tag == "twin_wait":
            return self._after_twin(g, cat, view)
        if tag in ("twin_hold", "pend"):
            if self._partition(g, cat, bans=False) != self.plan[1]:
                self.banned, self.plan = frozenset(), None
                return None
            return self._hold_move(g, cat, view, tag)
        if tag == "eq_wait":
            tops = self.plan[1]
            ok = [b for b in tops if is_intact(g, b) and b <= view]
            if not ok:
                raise StrategyError("eq_wait", "no untouched largest component is reachable")
            ok.sort(key=lambda b: (cat not in b, min(b)))
            return self._restrict(g, cat, ok[0], "eq_wait")
        if tag == "near":
            return self._near_step(g, cat, view)
        raise StrategyError(tag, "unknown plan")

    def _outer_partition(self, g, cat):
        region = self.saved[0]
        vs = reach(g, cat, lambda v: region is None or v in region)
        blocks, _ = local_blocks(g, vs)
        return tuple(len(b) for b in blocks)

    def _hold_move(self, g, cat, view, branch) -> int:
        blocks, _ = local_blocks(g, view)
        if len(blocks) != 1:
            raise StrategyError(branch, f"held component split into {[sorted(b) for b in blocks]}")
        return self._move_into(g, cat, view, branch, scope=view)

    def _after_k331(self, g, cat, view) -> int:
        options = []
        for tri in self.plan[1]:
            if not (is_intact(g, tri) and tri <= view):
                continue
            for w in sorted(tri):
                for s in g.neighbors(w):
                    if s not in tri and s in view:
                        options.append((cat not in tri, min(tri), w, s, tri))
        if not options:
            raise StrategyError("k331", "no intact triangle with a bridge after the cut")
        *_, w, s, tri = min(options, key=lambda o: o[:4])
        self.region = tri | {s}
        self.banned = frozenset()
        xs = [x for x in sorted(tri) if x not in (w, cat)]
        self.plan = ("k3", tri, w, s)
        return xs[0]

    def _after_twin(self, g, cat, view) -> int:
        options = []
        for big in self.plan[1]:
            if not big <= view:
                continue
            for w in sorted(big):
                for a in g.neighbors(w):
                    if a not in big and a in view:
                        options.append((cuts_inside(g, big), cat not in big, min(big), a, big))
        if not options:
            raise StrategyError("twin", "no large component with an intact bridge")
        *_, a, big = min(options, key=lambda o: o[:4])
        self.region = big | {a}
        self.banned = frozenset([a])
        self.plan = ("twin_hold", self._partition(g, cat, bans=False))
        return self._move_into(g, cat, big, "twin")

    # -- near-binary splits -------------------------------------------------

    def _near_binary(self, g, cat, view, blocks, lam) -> int:
        top = lam[0]
        if lam[0] == lam[1]:
            tops = [b for b in blocks if len(b) == top]
            cut = [(cuts_inside(g, b), min(b), b) for b in tops]
            if any(c for c, _, _ in cut):
                return self._restrict(g, cat, min(cut, key=lambda t: t[:2])[2], "equal")
            home = next((b for b in tops if cat in b), tops[0])
            self.plan = ("eq_wait", tuple(tops))
            return self._move_into(g, cat, home, "equal")
        ck = blocks[0]
        second = [b for b in blocks if len(b) == lam[1]]
        ck1 = min(second, key=lambda b: (cuts_inside(g, b), min(b)))
        if cuts_inside(g, ck1):
            return self._restrict(g, cat, ck, "near")
        self.plan = ("near", ck, ck1, "k", self._outside_mask(g, ck))
        return self._near_step(g, cat, view)

    @staticmethod
    def _inside_mask(g, vs):
        m = 0
        for e in induced_edges(g.with_mask(g._u.full), vs):
            m |= 1 << g.edge_index(e)
        return m

    def _outside_mask(self, g, vs):
        return g.mask & ~self._inside_mask(g, vs)

    def _near_step(self, g, cat, view) -> int:
        _, ck, ck1, stage, mark = self.plan
        a = len(ck1)
        if stage == "k":
            if self._outside_mask(g, ck) != mark:
                return self._restrict(g, cat, ck, "near")
            t = cuts_inside(g, ck)
            if t <= a - 2:
                return self._move_into(g, cat, ck, "near")
            if t == a - 1:
                self.plan = ("near", ck, ck1, "k1", g.mask)
                return self._move_into(g, cat, ck1, "near")
            return self._restrict(g, cat, ck1, "near")
        gone = mark & ~g.mask
        if gone & self._inside_mask(g, ck1):
            return self._restrict(g, cat, ck, "near")
        return self._restrict(g, cat, ck1, "near")
