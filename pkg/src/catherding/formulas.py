"""Exact cat numbers of the analysed families and the bound functions.

All integer formulas use integer arithmetic only; floors of binary logarithms
of rationals are found by shifting, never through floating point.
"""

from __future__ import annotations

import math
import threading

import numpy as np

from .graph import Graph

BOUND_SLACK = 1e-9


def ceil_log2(n: int) -> int:
    if n < 1:
        raise ValueError("ceil_log2 needs n >= 1")
    return (n - 1).bit_length()


def floor_log2_ratio(a: int, b: int) -> int:
    """Largest t with 2**t * b <= a, for a >= b >= 1."""
    if not (a >= b >= 1):
        raise ValueError("need a >= b >= 1")
    t = a.bit_length() - b.bit_length()
    if (b << t) > a:
        t -= 1
    return t


# -- the complete-graph sequence ----------------------------------------------------


class SequenceTable:
    """Thread-safe memo of c_n (c_1 = 0, c_2 = 1, c_3 = 2)."""

    def __init__(self):
        self._memo = {1: 0, 2: 1, 3: 2}
        self._lock = threading.Lock()

    def __call__(self, n: int) -> int:
        if not isinstance(n, (int, np.integer)) or n < 1:
            raise ValueError(f"c_n needs an integer n >= 1, got {n!r}")
        n = int(n)
        chain = []
        with self._lock:
            m = n
            while m not in self._memo:
                chain.append(m)
                m = (m + 1) // 2
            for m in reversed(chain):
                self._memo[m] = (m // 2) * ((m + 1) // 2) + self._memo[(m + 1) // 2]
            return self._memo[n]

    def __len__(self):
        return len(self._memo)


c_recurrence = SequenceTable()


def _tri_from_two(x):
    """2 + 3 + ... + x (0 when x < 2)."""
    return x * (x + 1) // 2 - 1 if x >= 2 else 0


def c_closed(n: int) -> int:
    """Closed form for c_n.

    The inner sum  sum_{j=2}^{(n-2)//2} j * (1 + floor(log2((n-1)/(2j+1))))
    is regrouped by t: the terms with floor(...) >= t are exactly the j with
    2j + 1 <= (n-1) >> t, so it equals sum_t T(((n-1) >> t) - 1) // 2) with
    T(x) = 2 + ... + x.  That needs O(log n) work.
    """
    if n < 2:
        raise ValueError("c_closed needs n >= 2")
    total = 0
    q = n - 1
    while q >= 1:
        total += _tri_from_two((q - 1) // 2)
        q >>= 1
    return (n * n - n) // 2 - ((n - 1).bit_length() - 1) - total


def c_recurrence_array(N: int) -> np.ndarray:
    """c_0..c_N by the recurrence (c_0 is unused and left 0)."""
    c = np.zeros(max(N + 1, 4), dtype=np.int64)
    c[2], c[3] = 1, 2
    lo = 4
    while lo <= N:
        # every m in [lo, 2lo-2] has ceil(m/2) < lo, already filled
        hi = min(N, 2 * lo - 2)
        m = np.arange(lo, hi + 1, dtype=np.int64)
        c[lo:hi + 1] = (m // 2) * ((m + 1) // 2) + c[(m + 1) // 2]
        lo = hi + 1
    return c[:N + 1]


def c_closed_array(N: int) -> np.ndarray:
    """The closed form evaluated for n = 0..N at once (entries below 2 are 0)."""
    n = np.arange(N + 1, dtype=np.int64)
    out = np.zeros(N + 1, dtype=np.int64)
    if N < 2:
        return out
    nn = n[2:]
    q = nn - 1
    total = np.zeros_like(nn)
    floor_log = np.full_like(nn, -1)
    while True:
        live = q >= 1
        if not live.any():
            break
        x = (q - 1) // 2
        total += np.where(live & (x >= 2), x * (x + 1) // 2 - 1, 0)
        floor_log += live
        q = q >> 1
    out[2:] = (nn * nn - nn) // 2 - floor_log - total
    return out


def delta_recurrence(n: int) -> int:
    if n < 2:
        raise ValueError("delta needs n >= 2")
    acc = 0
    while True:
        if n == 2:
            return acc + 1
        if n == 3:
            return acc + 3
        if n % 2:
            return acc + (n + 1) // 2
        acc += n // 2
        n //= 2


def delta_closed(n: int) -> int:
    if n < 2:
        raise ValueError("delta needs n >= 2")
    m = n >> ((n & -n).bit_length() - 1)  # odd part
    if m == 1:
        return n - 1
    if m == 3:
        return n
    return n - (m - 1) // 2


def delta_closed_array(N: int) -> np.ndarray:
    n = np.arange(N + 1, dtype=np.int64)
    m = n.copy()
    m[0] = 1
    while True:
        even = (m % 2 == 0)
        if not even.any():
            break
        m = np.where(even, m // 2, m)
    out = np.where(m == 1, n - 1, np.where(m == 3, n, n - (m - 1) // 2))
    out[:2] = 0
    return out


def delta_recurrence_array(N: int) -> np.ndarray:
    d = np.zeros(max(N + 1, 4), dtype=np.int64)
    d[2], d[3] = 1, 3
    lo = 4
    while lo <= N:
        hi = min(N, 2 * lo - 1)
        m = np.arange(lo, hi + 1, dtype=np.int64)
        d[lo:hi + 1] = np.where(m % 2 == 1, (m + 1) // 2, m // 2 + d[m // 2])
        lo = hi + 1
    return d[:N + 1]


# -- families -----------------------------------------------------------------------


def path_value(n: int) -> int:
    if n < 2:
        raise ValueError("path_value needs n >= 2")
    return ceil_log2(n)


def cycle_value(n: int) -> int:
    if n < 3:
        raise ValueError("cycle_value needs n >= 3")
    if n == 3:
        return 2
    return ceil_log2(2 * (n // 2)) + 1


def star_value(leaves: int) -> int:
    if leaves < 0:
        raise ValueError("a star has a non-negative number of leaves")
    return min(leaves, 2)


def wheel_value(n: int) -> int:
    if n < 4:
        raise ValueError("wheel_value needs n >= 4")
    return n + 1


def complete_value(n: int) -> int:
    return c_recurrence(n)


# -- bounds -------------------------------------------------------------------------


def c_bounds_hold(n: int) -> bool:
    """n^2/3 - 1 <= c_n <= (n^2 + n)/3, in exact integers."""
    c = c_recurrence(n)
    return 3 * c >= n * n - 3 and 3 * c <= n * n + n


def delta_bounds_hold(n: int) -> bool:
    d = delta_recurrence(n)
    return n <= 2 * d and d <= n


PLANAR_CONSTANT = 2 * math.sqrt(2) * (3 + math.sqrt(6))
GRID_CONSTANT = math.sqrt(3) / 6


def planar_upper(n: int, max_degree: int) -> float:
    if n < 1 or max_degree < 0:
        raise ValueError("planar_upper needs n >= 1 and a non-negative degree")
    return PLANAR_CONSTANT * math.sqrt(max_degree * n)


def grid_size(p: int, k: int) -> tuple[int, int]:
    """(vertex count, maximum degree) of the subdivided multi-grid."""
    if p < 3 or k < 1:
        raise ValueError("grid gadget needs p >= 3 and k >= 1")
    return p * p + 2 * k * p * (p - 1), 4 * k


def gr_lower(p: int, k: int) -> int:
    """The cat's guarantee kp on the grid gadget, checked against sqrt(3)/6 sqrt(Delta n)."""
    n, delta = grid_size(p, k)
    value = k * p
    if value + BOUND_SLACK < GRID_CONSTANT * math.sqrt(delta * n):
        raise AssertionError(f"kp = {value} below the sqrt bound for p={p}, k={k}")
    return value


def cutwidth_bound(cw: int, n: int) -> int:
    if cw < 0 or n < 1:
        raise ValueError("cutwidth_bound needs cw >= 0 and n >= 1")
    return cw * ceil_log2(n)


# -- cutwidth -----------------------------------------------------------------------


def width(g: Graph, ordering) -> int:
    """wd(G, ordering): the largest prefix separator along the ordering."""
    ordering = list(ordering)
    if sorted(ordering) != list(range(g.n)):
        raise ValueError("ordering must be a permutation of the vertices")
    pos = {v: i for i, v in enumerate(ordering)}
    spans = [(min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in g.edges()]
    return max((sum(1 for a, b in spans if a <= i < b) for i in range(g.n - 1)), default=0)


def cutwidth(g: Graph) -> tuple[int, list[int]]:
    """Exact cutwidth and a witness ordering, by dynamic programming over prefixes."""
    n = g.n
    if n > 20:
        raise ValueError("exact cutwidth is limited to 20 vertices")
    adj = [0] * n
    for u, v in g.edges():
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    full = (1 << n) - 1
    best = [math.inf] * (1 << n)
    choice = [-1] * (1 << n)
    best[0] = 0
    for s in range(1, 1 << n):
        sep = sum((adj[v] & ~s & full).bit_count() for v in range(n) if s >> v & 1)
        for v in range(n):
            if s >> v & 1:
                w = max(best[s ^ (1 << v)], sep)
                if w < best[s]:
                    best[s], choice[s] = w, v
    order = []
    s = full
    while s:
        v = choice[s]
        order.append(v)
        s ^= 1 << v
    return int(best[full]), order[::-1]


def formula_rows(ns) -> list[tuple]:
    """(n, c_n, Delta_n, lower, upper) with the bounds n^2/3 - 1 and (n^2+n)/3."""
    rows = []
    for n in ns:
        rows.append((n, c_recurrence(n), delta_recurrence(n),
                     n * n / 3 - 1, (n * n + n) / 3))
    return rows
