"""Simple undirected graphs with a fixed edge universe.

A :class:`Graph` stores the surviving edges as a bitmask over the edge
universe fixed at construction time, so deleting an edge is O(1) and yields
a new value that shares the universe with its parent.  Vertices are the dense
integers ``0..n-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO

EdgeId = tuple[int, int]


class GraphError(ValueError):
    """Raised on malformed graphs or violated preconditions."""


def canonical_edge(u: int, v: int) -> EdgeId:
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Universe:
    """Edge universe shared by a graph and everything derived from it."""

    __slots__ = ("n", "edges", "index", "inc", "xor_ends", "full")

    def __init__(self, n: int, edges: Iterable[EdgeId]):
        canon = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for {n} vertices")
            e = canonical_edge(u, v)
            if e in canon:
                raise GraphError(f"parallel edge {e}")
            canon.add(e)
        self.n = n
        self.edges: tuple[EdgeId, ...] = tuple(sorted(canon))
        self.index = {e: i for i, e in enumerate(self.edges)}
        inc = [0] * n
        for i, (u, v) in enumerate(self.edges):
            inc[u] |= 1 << i
            inc[v] |= 1 << i
        self.inc = tuple(inc)
        # other endpoint of edge i seen from x is xor_ends[i] ^ x
        self.xor_ends = tuple(u ^ v for u, v in self.edges)
        self.full = (1 << len(self.edges)) - 1


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> g.delete_edge((0, 1)).edges()
    [(1, 2)]
    >>> g.num_edges
    2
    """

    __slots__ = ("_u", "mask")

    def __init__(self, n: int, edges: Iterable[EdgeId] = ()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        self._u = _Universe(n, edges)
        self.mask = self._u.full

    @classmethod
    def _derived(cls, universe: _Universe, mask: int) -> "Graph":
        g = cls.__new__(cls)
        g._u = universe
        g.mask = mask
        return g

    def with_mask(self, mask: int) -> "Graph":
        """Graph over the same universe with the given surviving-edge mask."""
        if mask & ~self._u.full:
            raise GraphError("mask has bits outside the edge universe")
        return Graph._derived(self._u, mask)

    # -- basic queries -----------------------------------------------------

    @property
    def n(self) -> int:
        return self._u.n

    vertex_count = n

    @property
    def edge_capacity(self) -> int:
        return len(self._u.edges)

    @property
    def universe(self) -> tuple[EdgeId, ...]:
        return self._u.edges

    @property
    def num_edges(self) -> int:
        return self.mask.bit_count()

    def edges(self) -> list[EdgeId]:
        return [self._u.edges[i] for i in iter_bits(self.mask)]

    def edge_index(self, e: EdgeId) -> int:
        try:
            return self._u.index[canonical_edge(*e)]
        except KeyError:
            raise GraphError(f"edge {e} not in the edge universe") from None

    def has_edge(self, u: int, v: int) -> bool:
        i = self._u.index.get(canonical_edge(u, v)) if u != v else None
        return i is not None and bool(self.mask >> i & 1)

    def incident_mask(self, v: int) -> int:
        return self._u.inc[v] & self.mask

    def degree(self, v: int) -> int:
        return (self._u.inc[v] & self.mask).bit_count()

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def neighbors(self, v: int) -> list[int]:
        xe = self._u.xor_ends
        return sorted(xe[i] ^ v for i in iter_bits(self._u.inc[v] & self.mask))

    def incident_edges(self, v: int) -> list[EdgeId]:
        return [self._u.edges[i] for i in iter_bits(self._u.inc[v] & self.mask)]

    def adjacency(self) -> dict[int, list[int]]:
        return {v: self.neighbors(v) for v in range(self.n)}

    # -- mutation by value -------------------------------------------------

    def delete_edge(self, e: EdgeId) -> "Graph":
        i = self.edge_index(e)
        if not self.mask >> i & 1:
            raise GraphError(f"edge {canonical_edge(*e)} is not present")
        return Graph._derived(self._u, self.mask & ~(1 << i))

    def delete_edges(self, es: Iterable[EdgeId]) -> "Graph":
        g = self
        for e in es:
            g = g.delete_edge(e)
        return g

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Same vertex set, keeping only edges with both ends in ``vertices``."""
        keep = 0
        vs = set(vertices)
        for v in vs:
            keep |= self._u.inc[v]
        mask = 0
        for i in iter_bits(self.mask & keep):
            a, b = self._u.edges[i]
            if a in vs and b in vs:
                mask |= 1 << i
        return Graph._derived(self._u, mask)

    # -- connectivity ------------------------------------------------------

    def component_masks(self, v: int, mask: int | None = None) -> tuple[int, int]:
        """(vertex bitmask, edge bitmask) of the component of ``v``."""
        return component_masks(self._u.inc, self._u.xor_ends, self.mask if mask is None else mask, v)

    def component_of(self, v: int) -> frozenset[int]:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range")
        vs, _ = self.component_masks(v)
        return frozenset(iter_bits(vs))

    def components(self) -> "ComponentDecomposition":
        index = [-1] * self.n
        sets = []
        for v in range(self.n):
            if index[v] < 0:
                comp = self.component_of(v)
                for x in comp:
                    index[x] = len(sets)
                sets.append(comp)
        return ComponentDecomposition(tuple(sets), tuple(index))

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_of(0)) == self.n

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and set(self.edges()) == set(other.edges())

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.edges())))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def component_masks(inc, xor_ends, mask: int, v: int) -> tuple[int, int]:
    seen = 1 << v
    emask = 0
    stack = [v]
    while stack:
        x = stack.pop()
        m = inc[x] & mask
        emask |= m
        while m:
            low = m & -m
            m ^= low
            y = xor_ends[low.bit_length() - 1] ^ x
            if not seen >> y & 1:
                seen |= 1 << y
                stack.append(y)
    return seen, emask


@dataclass(frozen=True)
class ComponentDecomposition:
    sets: tuple[frozenset[int], ...]
    index: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.sets)


@dataclass(frozen=True)
class TwoEdgeConnectedDecomposition:
    """Maximal 2-edge-connected vertex sets plus the bridges joining them."""

    sets: tuple[frozenset[int], ...]
    bridges: tuple[EdgeId, ...]
    index: tuple[int, ...]

    @property
    def sizes(self) -> list[int]:
        return sorted((len(s) for s in self.sets), reverse=True)


def delete_edge(g: Graph, e: EdgeId) -> Graph:
    return g.delete_edge(e)


def component_of(g: Graph, v: int) -> frozenset[int]:
    return g.component_of(v)


def bridges(g: Graph) -> list[EdgeId]:
    """Bridges by the lowpoint method (iterative DFS)."""
    u = g._u
    n = g.n
    order = [-1] * n
    low = [0] * n
    out: list[EdgeId] = []
    counter = 0
    for root in range(n):
        if order[root] >= 0:
            continue
        order[root] = low[root] = counter
        counter += 1
        # frames: (vertex, edge index used to enter it, remaining incident mask)
        stack = [(root, -1, u.inc[root] & g.mask)]
        while stack:
            x, via, rest = stack[-1]
            if rest:
                lowbit = rest & -rest
                stack[-1] = (x, via, rest ^ lowbit)
                i = lowbit.bit_length() - 1
                if i == via:
                    continue
                y = u.xor_ends[i] ^ x
                if order[y] < 0:
                    order[y] = low[y] = counter
                    counter += 1
                    stack.append((y, i, u.inc[y] & g.mask))
                else:
                    low[x] = min(low[x], order[y])
            else:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[x])
                    if low[x] > order[parent]:
                        out.append(u.edges[via])
    return sorted(out)


def two_edge_connected_components(g: Graph) -> TwoEdgeConnectedDecomposition:
    br = bridges(g)
    without = g
    for e in br:
        without = without.delete_edge(e)
    comps = without.components()
    return TwoEdgeConnectedDecomposition(comps.sets, tuple(br), comps.index)


def is_two_edge_connected(g: Graph) -> bool:
    """True when the graph is connected and bridgeless (K_1 counts)."""
    return g.is_connected() and not bridges(g)


def k_core_number(g: Graph) -> int:
    """Degeneracy: the largest k such that a nonempty k-core exists."""
    deg = g.degrees()
    alive = set(range(g.n))
    best = 0
    nbrs = g.adjacency()
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        best = max(best, deg[v])
        alive.remove(v)
        for w in nbrs[v]:
            if w in alive:
                deg[w] -= 1
    return best


def state_key(g: Graph, cat: int) -> tuple[int, int]:
    """Hashable key: surviving-edge bitmask plus cat vertex."""
    if not 0 <= cat < g.n:
        raise GraphError(f"cat vertex {cat} out of range")
    return (g.mask, cat)


# -- text formats -------------------------------------------------------------


def read_edge_list(stream: TextIO) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` with ``u < v``."""
    rows = [line.split() for line in stream if line.strip() and not line.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with a header line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(pairs) != m:
        raise GraphError(f"header announces {m} edges, found {len(pairs)}")
    for a, b in pairs:
        if not a < b:
            raise GraphError(f"edge line '{a} {b}' must satisfy u < v")
    return Graph(n, pairs)


def write_edge_list(g: Graph, stream: TextIO) -> None:
    stream.write(f"{g.n} {g.num_edges}\n")
    for a, b in g.edges():
        stream.write(f"{a} {b}\n")


def to_dot(g: Graph, cat: int | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        attr = ' [style=filled, fillcolor="orange"]' if v == cat else ""
        lines.append(f"  {v}{attr};")
    for a, b in g.edges():
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
