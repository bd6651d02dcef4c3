"""Slow, obviously-correct reference implementations used only by the tests."""

import itertools
from functools import lru_cache
from math import comb


def naive_value(n, edges, cat):
    """Plain minimax over (edge set, cat) with no pruning and no bounds."""
    edges = frozenset(edges)

    def comp(es, v):
        seen, todo = {v}, [v]
        while todo:
            x = todo.pop()
            for a, b in es:
                for p, q in ((a, b), (b, a)):
                    if p == x and q not in seen:
                        seen.add(q)
                        todo.append(q)
        return seen

    @lru_cache(maxsize=None)
    def herder(es, v):
        if not any(v in e for e in es):
            return 0
        return min(1 + catmove(es - {e}, v) for e in es)

    @lru_cache(maxsize=None)
    def catmove(es, v):
        if not any(v in e for e in es):
            return 0
        return max(herder(es, u) for u in comp(es, v) if u != v)

    return herder(edges, cat)


def brute_bridges(n, edges):
    def connected_pairs(es):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in es:
            parent[find(a)] = find(b)
        return [find(x) for x in range(n)]

    base = connected_pairs(edges)
    out = []
    for e in edges:
        after = connected_pairs([f for f in edges if f != e])
        if after[e[0]] != after[e[1]] or len(set(after)) > len(set(base)):
            out.append(tuple(sorted(e)))
    return sorted(out)


def brute_k_core(n, edges):
    """Largest k with a vertex subset inducing minimum degree >= k."""
    best = 0
    es = [tuple(e) for e in edges]
    for r in range(1, n + 1):
        for sub in itertools.combinations(range(n), r):
            s = set(sub)
            deg = {v: 0 for v in sub}
            for a, b in es:
                if a in s and b in s:
                    deg[a] += 1
                    deg[b] += 1
            best = max(best, min(deg.values()))
    return best


def brute_cutwidth(n, edges):
    best = None
    for order in itertools.permutations(range(n)):
        pos = {v: i for i, v in enumerate(order)}
        w = max((sum(1 for a, b in edges if min(pos[a], pos[b]) <= i < max(pos[a], pos[b]))
                 for i in range(n - 1)), default=0)
        best = w if best is None else min(best, w)
    return best or 0


def literal_closed_form(n):
    """The closed form term by term: one summand per j, exact integer logs."""
    def floor_log2_frac(p, q):
        t = 0
        while q << (t + 1) <= p:
            t += 1
        return t

    total = comb(n, 2) - floor_log2_frac(n - 1, 1)
    for j in range(2, (n - 2) // 2 + 1):
        total -= j * (1 + floor_log2_frac(n - 1, 2 * j + 1))
    return total


def c_slow(n):
    c = {1: 0, 2: 1, 3: 2}
    for m in range(4, n + 1):
        c[m] = (m // 2) * ((m + 1) // 2) + c[(m + 1) // 2]
    return c[n]


def casewise_score(parts):
    """Third evaluator of the partition lower bound, using products and a rule table."""
    p = sorted(parts, reverse=True)
    n = sum(p)
    cross = sum(a * b for a, b in itertools.combinations(p, 2))
    score = cross - (len(p) - 1) + (p[0] - 1 if p[0] <= 3 else c_slow(p[0]))
    lg = next(t for t in range(64) if 2 ** t >= n)
    chain = [
        (p[0] == 1, lg if n % 2 == 0 else lg - 1),
        (tuple(p) == (3, 3, 1), 2),
        (p[0] == 3, 1),
        (tuple(p) in {(6, 1), (12, 1), (24, 1)}, 1),
        (len(p) > 1 and p[0] - p[1] <= 1, 1),
    ]
    return score + next((bonus for cond, bonus in chain if cond), 0)
