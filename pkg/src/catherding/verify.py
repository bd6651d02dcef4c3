"""Verification suites behind ``catherding verify``.

Each suite returns a :class:`SuiteReport` whose text lists every check as
PASS/FAIL with a short detail.  Reports never contain timings, so repeated
runs can be compared byte for byte.
"""

from __future__ import annotations

import itertools
import multiprocessing as mp
import random
from dataclasses import dataclass, field

import numpy as np

from . import formulas as F
from . import generators as gen
from .graph import Graph, k_core_number
from .partitions import generate_corpus, generate_small_case_partitions, test_partition, verify_corpus
from .retrograde import solve_table
from .solver import Side, Solver, best_response_score, cut_value, optimal_trace
from .strategies import (BinaryHerder, CatStrategyC, CutwidthHerder, PathCat, PathHerder,
                         WheelCat, WheelHerder)

RANDOM_SEED = 20240229
RANDOM_GRAPHS_AT_7 = 12
RANDOM_MAX_EDGES = 15


@dataclass
class SuiteReport:
    name: str
    checks: list[tuple[str, bool | None, str]] = field(default_factory=list)

    def add(self, label: str, ok: bool | None, detail: str = "") -> None:
        self.checks.append((label, ok, detail))

    @property
    def ok(self) -> bool:
        return all(ok is not False for _, ok, _ in self.checks)

    def text(self) -> str:
        word = {True: "PASS", False: "FAIL", None: "SKIP"}
        lines = [f"suite {self.name}"]
        lines += [f"  {word[ok]} {label}" + (f": {d}" if d else "") for label, ok, d in self.checks]
        passed = sum(1 for _, ok, _ in self.checks if ok)
        lines.append(f"{self.name}: {'PASS' if self.ok else 'FAIL'} ({passed}/{len(self.checks)} checks)")
        return "\n".join(lines) + "\n"


def _first_mismatch(a: np.ndarray, b: np.ndarray, lo: int) -> str:
    bad = np.nonzero(a[lo:] != b[lo:])[0]
    return "none" if len(bad) == 0 else f"first mismatch at n={int(bad[0]) + lo}"


# -- 1 ----------------------------------------------------------------------------


def formula_suite(n_max: int = 10**6, d_max: int = 10**5) -> SuiteReport:
    r = SuiteReport("formulas")
    rec, closed = F.c_recurrence_array(n_max), F.c_closed_array(n_max)
    r.add(f"closed form = recurrence, 2..{n_max}", bool((rec[2:] == closed[2:]).all()),
          _first_mismatch(rec, closed, 2))
    spot = [2, 3, 7, 100, 12345, n_max]
    r.add("scalar closed form at spot values",
          all(F.c_closed(n) == int(rec[n]) == F.c_recurrence(n) for n in spot),
          ",".join(str(int(rec[n])) for n in spot[:4]))
    n = np.arange(n_max + 1, dtype=np.int64)
    lo_ok = (3 * rec[2:] >= n[2:] ** 2 - 3).all()
    hi_ok = (3 * rec[2:] <= n[2:] ** 2 + n[2:]).all()
    r.add(f"n^2/3 - 1 <= c_n <= (n^2+n)/3, 2..{n_max}", bool(lo_ok and hi_ok))
    dr, dc = F.delta_recurrence_array(d_max), F.delta_closed_array(d_max)
    diff = np.zeros(d_max + 1, dtype=np.int64)
    diff[2:] = rec[3:d_max + 2] - rec[2:d_max + 1]
    r.add(f"delta closed = delta recurrence, 2..{d_max}", bool((dr[2:] == dc[2:]).all()),
          _first_mismatch(dr, dc, 2))
    r.add(f"delta recurrence = first difference of c, 2..{d_max}", bool((dr[2:] == diff[2:]).all()),
          _first_mismatch(dr, diff, 2))
    m = n[2:d_max + 1]
    r.add(f"n/2 <= delta_n <= n, 2..{d_max}", bool(((m <= 2 * dr[2:]) & (dr[2:] <= m)).all()))
    return r


# -- 2 ----------------------------------------------------------------------------


def _deep_k7(conn):
    conn.send(cut_value(gen.complete(7)))


def _with_budget(target, seconds: float):
    """Run ``target(conn)`` in a child process; None when the budget runs out."""
    ctx = mp.get_context("fork")
    parent, child = ctx.Pipe(duplex=False)
    p = ctx.Process(target=target, args=(child,))
    p.start()
    ready = parent.poll(seconds)
    out = parent.recv() if ready else None
    p.terminate()
    p.join()
    return out


def solver_suite(deep: bool = False, budget: float = 1800.0, jobs: int = 1) -> SuiteReport:
    r = SuiteReport("solver")
    families = [
        ("path", range(2, 15), gen.path, F.path_value),
        ("cycle", range(3, 11), gen.cycle, F.cycle_value),
        ("star", range(2, 9), gen.star, F.star_value),
        ("wheel", range(4, 8), gen.wheel, F.wheel_value),
        ("complete", range(2, 7), gen.complete, F.complete_value),
    ]
    for name, ns, build, expect in families:
        got = [cut_value(build(n), jobs=jobs) for n in ns]
        want = [expect(n) for n in ns]
        r.add(f"{name} n={ns.start}..{ns.stop - 1}", got == want, " ".join(map(str, got)))
    if deep:
        v = _with_budget(_deep_k7, budget)
        r.add("complete n=7 (deep)", None if v is None else v == 17,
              "budget exceeded" if v is None else str(v))
    return r


# -- 3 ----------------------------------------------------------------------------


def figure_suite() -> SuiteReport:
    r = SuiteReport("figures")
    p9 = Solver(gen.path(9)).values()
    r.add("P_9 per-vertex values", p9 == [1, 2, 3, 3, 4, 3, 3, 2, 1], " ".join(map(str, p9)))
    r.add("P_9 from the seventh vertex = 3", p9[6] == 3)
    r.add("P_9 from the fifth vertex = 4", p9[4] == 4)
    tr = optimal_trace(gen.path(9))
    r.add("P_9 optimal trace length", tr.score == 4, str(tr.score))
    sp = Solver(gen.spider()).values()
    r.add("spider per-vertex values", sp == [1, 2, 3, 4, 3, 2, 1, 1], " ".join(map(str, sp)))
    return r


# -- 4 ----------------------------------------------------------------------------


def _casewise_score(parts) -> int:
    """Second evaluator of the partition score: explicit double loop over the
    parts, its own c(n) and ceiling log, no shared helpers."""

    def c(n):
        if n <= 3:
            return n - 1
        return (n // 2) * (n - n // 2) + c(n - n // 2)

    def clog2(n):
        t = 0
        while (1 << t) < n:
            t += 1
        return t

    p = list(parts)
    n = sum(p)
    score = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            score += p[i] * p[j]
    score = score - (len(p) - 1) + c(p[0])
    if p[0] == 1:
        score += clog2(n) if n % 2 == 0 else clog2(n) - 1
    elif p == [3, 3, 1]:
        score += 2
    elif p[0] == 3:
        score += 1
    elif p in ([6, 1], [12, 1], [24, 1]):
        score += 1
    elif p[0] - p[1] <= 1:
        score += 1
    return score


def _family_rederivation() -> list[tuple[int, int]]:
    """(n, k) pairs of the seven case families, counted without building partitions."""
    pairs = []
    # 1: partitions of n <= 8 with k >= 2 parts, none equal to 2, by a counting recursion
    def count(n, k, largest):
        if n == 0:
            return 1 if k == 0 else 0
        if k == 0:
            return 0
        return sum(count(n - x, k - 1, x) for x in range(1, min(n, largest) + 1) if x != 2)
    for n in range(2, 9):
        for k in range(2, n + 1):
            pairs += [(n, k)] * count(n, k, n)
    caps = [56, 14, 9, 6, 5, 4, 3, 1, 1, 1]
    for k, cap in zip(range(3, 13), caps):
        pairs += [(x + k - 1, k) for x in range(1, cap + 1) if x != 2]
    pairs += [(x + 2, 3) for x in range(1, 57) if x != 2]
    pairs += [(2 * x + 2, 4) for x in range(1, 35) if x != 2]
    pairs += [(n, 2) for n in range(9, 28) for a in range(1, n // 2 + 1) if a != 2]
    for a, cap in ((3, 8), (4, 6), (5, 6), (6, 6)):
        pairs += [(2 * b + a, 3) for b in range(a, cap + 1) if b != 2]
    for b in (1, 3, 4):
        pairs += [(3 * b + a, 4) for a in range(1, b + 1) if a != 2]
    pairs.append((13, 5))
    return sorted(pairs)


def partition_suite() -> SuiteReport:
    r = SuiteReport("partitions")
    corpus = generate_small_case_partitions()
    r.add("corpus size", len(corpus) == 376, str(len(corpus)))
    r.add("no part equals 2", all(2 not in p.parts for p in corpus))
    r.add("(3,3,3,3,1) present", any(p.parts == (3, 3, 3, 3, 1) for p in corpus))
    nk = sorted((p.n, p.k) for p in corpus)
    r.add("(n, k) multiset matches family re-derivation", nk == _family_rederivation())
    rep = verify_corpus()
    r.add("lower bound >= c_n on every partition", rep.ok, rep.summary())
    fam = " ".join(f"{f}:{c}" for f, c in sorted(rep.family_counts.items()))
    r.add("family counts", True, f"{fam}; distinct {rep.distinct}")
    mism = [p for p in corpus if test_partition(p) != _casewise_score(list(p.parts))]
    r.add("agreement with the second evaluator", not mism,
          f"{len(corpus) - len(mism)}/{len(corpus)} agree")
    return r


# -- 5 ----------------------------------------------------------------------------


def connected_graphs(max_n: int = 6) -> list[Graph]:
    """Every connected graph on 1..max_n vertices, one per isomorphism class."""
    import networkx as nx

    if max_n > 6:
        raise ValueError("the exhaustive list is limited to 6 vertices")
    out = []
    for h in nx.graph_atlas_g():
        if 1 <= h.number_of_nodes() <= max_n and nx.is_connected(h):
            out.append(Graph(h.number_of_nodes(), sorted(tuple(sorted(e)) for e in h.edges())))
    return out


def random_connected_graphs(n: int, count: int, seed: int = RANDOM_SEED,
                            max_edges: int = RANDOM_MAX_EDGES) -> list[Graph]:
    """Seeded uniform G(n, m) samples, rejected until connected."""
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(n), 2))
    out = []
    while len(out) < count:
        m = rng.randint(n - 1, min(max_edges, len(pairs)))
        g = Graph(n, rng.sample(pairs, m))
        if g.is_connected():
            out.append(g)
    return out


def strategy_suite(deep: bool = False, budget: float = 1800.0) -> SuiteReport:
    r = SuiteReport("strategies")
    ns = range(2, 13)
    got = [best_response_score(gen.path(n), PathCat(), Side.CAT) for n in ns]
    r.add("path_cat guarantees ceil(log2 n), n=2..12",
          all(x >= F.path_value(n) for x, n in zip(got, ns)), " ".join(map(str, got)))
    got = [best_response_score(gen.path(n), PathHerder(), Side.HERDER) for n in ns]
    r.add("path_herder holds ceil(log2 n), n=2..12",
          all(x <= F.path_value(n) for x, n in zip(got, ns)), " ".join(map(str, got)))
    ws = range(4, 7)
    got_c = [best_response_score(gen.wheel(n), WheelCat(), Side.CAT) for n in ws]
    got_h = [best_response_score(gen.wheel(n), WheelHerder(), Side.HERDER) for n in ws]
    r.add("wheel pair tight at n+1, n=4..6",
          got_c == got_h == [n + 1 for n in ws], f"cat {got_c} herder {got_h}")
    ks = range(2, 7)
    got = [best_response_score(gen.complete(n), BinaryHerder(), Side.HERDER) for n in ks]
    r.add("binary_herder holds c_n, n=2..6",
          all(x <= F.c_recurrence(n) for x, n in zip(got, ks)), " ".join(map(str, got)))
    got = [best_response_score(gen.complete(n), CatStrategyC(), Side.CAT) for n in ks]
    r.add("cat_strategy_C guarantees c_n, n=2..6",
          all(x >= F.c_recurrence(n) for x, n in zip(got, ks)), " ".join(map(str, got)))
    rng = random.Random(RANDOM_SEED)
    tried = bad = 0
    for g in connected_graphs(6):
        if g.n < 2:
            continue
        orders = [F.cutwidth(g)[1]] + [rng.sample(range(g.n), g.n) for _ in range(2)]
        for order in orders:
            tried += 1
            score = best_response_score(g, CutwidthHerder(order), Side.HERDER)
            if score > F.cutwidth_bound(F.width(g, order), g.n):
                bad += 1
    r.add("cutwidth_herder within wd * ceil(log2 n), connected n<=6",
          bad == 0, f"{tried} orderings, {bad} over the bound")
    if deep:
        v = _with_budget(_deep_cat_c7, budget)
        r.add("cat_strategy_C on K_7 (deep)", None if v is None else v >= 17,
              "budget exceeded" if v is None else str(v))
    return r


def _deep_cat_c7(conn):
    conn.send(best_response_score(gen.complete(7), CatStrategyC(), Side.CAT))


# -- 6 ----------------------------------------------------------------------------


def star_endgame_ok(g: Graph, s: Solver | None = None) -> bool:
    """After the second-to-last cut of the optimal trace the cat sits on the
    centre of a star: every other vertex of its component is a leaf."""
    tr = optimal_trace(g, s)
    if tr.score < 2:
        return True
    after = g.delete_edges(tr.cuts[:tr.score - 1])
    cat = tr.positions()[tr.score - 2]
    comp = after.component_of(cat)
    inside = sum(1 for u, v in after.edges() if u in comp)
    return len(comp) >= 2 and after.degree(cat) == len(comp) - 1 == inside


def property_counterexamples(g: Graph) -> dict[str, int]:
    """Counterexample counts for the structural value properties on one connected graph."""
    s = Solver(g)
    vals = s.values()
    out = dict(passing=0, subgraph=0, peak=0, core=0, star=0)
    for i in range(g.num_edges):
        child = g.mask & ~(1 << i)
        hv = [s.herder_value(child, v) for v in range(g.n)]
        out["passing"] += sum(1 for a, b in zip(vals, hv) if a < b)
        out["subgraph"] += max(hv) > max(vals)
    if g.n >= 2:
        out["peak"] = sum(1 for v in range(g.n)
                          if max(vals[x] for x in range(g.n) if x != v) < vals[v] - 1)
    out["core"] = int(max(vals) < k_core_number(g))
    out["star"] = int(not star_endgame_ok(g, s))
    return out


def property_suite(random_count: int = RANDOM_GRAPHS_AT_7) -> SuiteReport:
    r = SuiteReport("lemmas")
    graphs = connected_graphs(6)
    samples = random_connected_graphs(7, random_count)
    names = [("passing", "passing-move monotonicity"),
             ("subgraph", "single-deletion subgraph monotonicity"),
             ("peak", "no single peak"), ("core", "k-core lower bound"),
             ("star", "star endgame of optimal traces")]
    for label, pool in [("connected n<=6", graphs), (f"{random_count} random connected n=7", samples)]:
        total = dict.fromkeys(dict(names), 0)
        for g in pool:
            for k, v in property_counterexamples(g).items():
                total[k] += v
        for k, text in names:
            r.add(f"{text}, {label}", total[k] == 0, f"{len(pool)} graphs, {total[k]} counterexamples")
    # every spanning subgraph at once, from the retrograde table
    bad = total = 0
    for g in graphs:
        if g.num_edges == 0:
            continue
        H = solve_table(g)
        masks = np.arange(len(H))
        for i in range(g.num_edges):
            has = (masks >> i) & 1 == 1
            total += int(has.sum())
            bad += int((H[masks[has]] < H[masks[has] ^ (1 << i)]).any(axis=1).sum())
    r.add("subgraph monotonicity over all spanning subgraphs, n<=6", bad == 0,
          f"{total} subgraph pairs, {bad} counterexamples")
    return r


# -- 7 ----------------------------------------------------------------------------


def planar_suite() -> SuiteReport:
    r = SuiteReport("planar")
    bad_size = bad_bound = bad_deg = 0
    for p in range(3, 7):
        for k in range(1, 4):
            g = gen.grid_gadget(p, k)
            n, delta = F.grid_size(p, k)
            degs = g.degrees()
            if g.n != n or max(degs) != delta:
                bad_size += 1
            if any(d != 2 for d in degs[p * p:]):
                bad_deg += 1
            try:
                F.gr_lower(p, k)
            except AssertionError:
                bad_bound += 1
    r.add("grid gadget size and max degree, p=3..6, k=1..3", bad_size == 0)
    r.add("subdivision vertices have degree 2", bad_deg == 0)
    r.add("kp >= sqrt(3)/6 sqrt(delta n)", bad_bound == 0)
    g = gen.grid_gadget(3, 1)
    r.add("planar upper bound exceeds kp on Gr(3,1)",
          F.planar_upper(g.n, max(g.degrees())) >= 3)
    return r


# -- 8 ----------------------------------------------------------------------------


DETERMINISM_SUITES = ("formulas", "solver", "figures", "partitions", "strategies", "lemmas")


def _suite_text(name: str) -> str:
    return SUITES[name]().text()


def determinism_suite(reference: dict[str, str] | None = None, jobs: int = 1) -> SuiteReport:
    """Compare two runs of suites 1..6 byte for byte.

    ``reference`` maps suite names to the text of an earlier run; missing
    entries are produced here, so without it every suite runs twice.
    """
    from concurrent.futures import ProcessPoolExecutor

    r = SuiteReport("determinism")
    reference = dict(reference or {})
    work = [n for n in DETERMINISM_SUITES if n not in reference] + list(DETERMINISM_SUITES)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs, mp_context=mp.get_context("fork")) as ex:
            texts = list(ex.map(_suite_text, work))
    else:
        texts = [_suite_text(n) for n in work]
    k = len(work) - len(DETERMINISM_SUITES)
    for n, t in zip(work[:k], texts[:k]):
        reference[n] = t
    for n, t in zip(DETERMINISM_SUITES, texts[k:]):
        same = reference[n] == t
        r.add(f"{n} twice", same, "identical" if same else "reports differ")
    return r


SUITES = {
    "formulas": formula_suite,
    "solver": solver_suite,
    "figures": figure_suite,
    "partitions": partition_suite,
    "strategies": strategy_suite,
    "lemmas": property_suite,
    "planar": planar_suite,
    "determinism": determinism_suite,
}


def run_suite(name: str, deep: bool = False, budget: float = 1800.0, jobs: int = 1) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite '{name}'; choose from {', '.join(SUITES)} or all")
    if name == "solver":
        return solver_suite(deep, budget, jobs)
    if name == "strategies":
        return strategy_suite(deep, budget)
    if name == "determinism":
        return determinism_suite(jobs=jobs)
    return SUITES[name]()
