"""Retrograde table solver: an independent route to exact cat numbers.

Every subset of the edge universe is a position.  Tables are filled by
increasing edge count, vectorised over all subsets of one size:

* ``H[mask, v]`` cuts still to come with the herder to move and the cat on v;
* ``C[mask, v]`` the same right after a cut, with the cat to move.

The herder may cut any surviving edge, and no search tricks are used, so the
result shares no logic with :mod:`catherding.solver`.  Memory is about
``2 * 2**m * n`` bytes; 21 edges (K_7) fit comfortably.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph

MAX_EDGES = 24


def _labels(masks: np.ndarray, n: int, edges) -> np.ndarray:
    """Component label (least vertex id) of each vertex, per mask."""
    lab = np.tile(np.arange(n, dtype=np.int8), (len(masks), 1))
    alive = [((masks >> i) & 1).astype(bool) for i in range(len(edges))]
    for _ in range(max(n - 1, 0)):
        changed = False
        for (u, v), on in zip(edges, alive):
            m = np.minimum(lab[:, u], lab[:, v])
            nu = np.where(on, m, lab[:, u])
            nv = np.where(on, m, lab[:, v])
            if not changed:
                changed = bool((nu != lab[:, u]).any() or (nv != lab[:, v]).any())
            lab[:, u] = nu
            lab[:, v] = nv
        if not changed:
            break
    return lab


def solve_table(g: Graph) -> np.ndarray:
    """``H`` for the full edge universe of ``g``: shape (2**m, n), dtype uint8."""
    edges = list(g.universe)
    m, n = len(edges), g.n
    if m > MAX_EDGES:
        raise ValueError(f"{m} edges exceed the table limit of {MAX_EDGES}")
    size = 1 << m
    H = np.zeros((size, n), dtype=np.uint8)
    C = np.zeros((size, n), dtype=np.uint8)
    all_masks = np.arange(size, dtype=np.int64)
    pop = np.zeros(size, dtype=np.int8)
    for i in range(m):
        pop += ((all_masks >> i) & 1).astype(np.int8)
    inc = np.zeros(n, dtype=np.int64)
    for i, (u, v) in enumerate(edges):
        inc[u] |= 1 << i
        inc[v] |= 1 << i
    for k in range(m + 1):
        layer = all_masks[pop == k]
        deg_pos = (layer[:, None] & inc[None, :]) != 0  # cat not yet isolated
        if k > 0:
            best = np.full((len(layer), n), 255, dtype=np.int32)
            for i in range(m):
                has = ((layer >> i) & 1).astype(bool)
                child = layer[has] ^ (1 << i)
                cand = 1 + C[child].astype(np.int32)
                best[has] = np.minimum(best[has], cand)
            H[layer] = np.where(deg_pos, best, 0).astype(np.uint8)
        # cat to move: best H among other vertices of the same component
        lab = _labels(layer, n, edges)
        h = H[layer].astype(np.int32)
        c = np.zeros((len(layer), n), dtype=np.int32)
        for v in range(n):
            same = lab == lab[:, v:v + 1]
            same[:, v] = False
            c[:, v] = np.where(same, h, 0).max(axis=1)
        C[layer] = np.where(deg_pos, c, 0).astype(np.uint8)
    return H


def table_values(g: Graph) -> list[int]:
    """Per-vertex cat numbers of ``g`` from the retrograde table."""
    if g.n == 0:
        return []
    H = solve_table(g)
    return [int(x) for x in H[g.mask]]


def table_cut_value(g: Graph) -> int:
    vals = table_values(g)
    return max(vals) if vals else 0
