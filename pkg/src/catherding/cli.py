"""Command line entry point: ``catherding <command> ...``.

Graphs are given as an edge-list file or a generator spec such as
``path:9``, ``complete:6`` or ``gr:3,1``.  Exit status is 0 on success,
1 when a verification or replay fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import formulas as F
from .arena import interactive_play, play, tournament
from .generators import FAMILIES, from_spec
from .graph import GraphError, read_edge_list, write_edge_list
from .partitions import PartitionError, verify_corpus
from .records import GameRecord, ReplayError, replay
from .solver import Solver, optimal_trace, parallel_values
from .strategies import registry
from .strategies.base import StrategyError
from .solver import IllegalMoveError

PARALLEL_MIN_EDGES = 16


class UsageError(Exception):
    pass


def load_graph(arg: str):
    if os.path.exists(arg):
        try:
            with open(arg) as fh:
                return read_edge_list(fh)
        except OSError as exc:
            raise UsageError(f"cannot read {arg}: {exc}") from None
    if ":" not in arg and arg not in FAMILIES:
        raise UsageError(f"'{arg}' is neither a readable file nor a generator spec")
    try:
        return from_spec(arg)
    except (GraphError, TypeError) as exc:
        raise UsageError(str(exc)) from None


def _values(g, jobs: int) -> list[int]:
    if jobs > 1 and g.num_edges >= PARALLEL_MIN_EDGES and g.n > 1:
        return parallel_values(g, min(jobs, g.n))
    return Solver(g).values()


def _write(text: str, path: str | None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands -----------------------------------------------------------------------


def cmd_value(a) -> int:
    g = load_graph(a.graph)
    if a.vertex is not None:
        if not 0 <= a.vertex < g.n:
            raise UsageError(f"vertex {a.vertex} out of range")
        print(Solver(g).value_at(a.vertex))
    else:
        print(max(_values(g, a.jobs), default=0))
    return 0


def cmd_solve(a) -> int:
    g = load_graph(a.graph)
    vals = _values(g, a.jobs)
    if a.format == "tsv":
        print("vertex\tvalue")
        for v, x in enumerate(vals):
            print(f"{v}\t{x}")
    else:
        best = max(vals, default=0)
        print(f"vertices {g.n} edges {g.num_edges}")
        print("values " + " ".join(map(str, vals)))
        if vals:
            print(f"best start {vals.index(best)}")
        print(f"cut value {best}")
    return 0


def cmd_trace(a) -> int:
    _write(optimal_trace(load_graph(a.graph)).to_text(), a.output)
    return 0


def _player(side: str, name: str, ordering):
    if name in registry.SPECIAL:
        return name
    kwargs = {"ordering": ordering} if name == "cutwidth_herder" else {}
    if name == "cutwidth_herder" and ordering is None:
        raise UsageError("cutwidth_herder needs --ordering")
    try:
        return registry.get(side, name, **kwargs)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def _ordering(text):
    if text is None:
        return None
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError("--ordering takes comma separated vertex ids") from None


def cmd_play(a) -> int:
    g = load_graph(a.graph)
    order = _ordering(a.ordering)
    if a.interactive:
        other = a.herder if a.interactive == "cat" else a.cat
        opp = _player("herder" if a.interactive == "cat" else "cat", other, order)
        if opp == "human":
            raise UsageError("the opponent of an interactive player cannot be human")
        rec = interactive_play(g, a.interactive, opp, start=a.start)
    else:
        if "human" in (a.cat, a.herder):
            raise UsageError("human players need --interactive")
        cat, herder = _player("cat", a.cat, order), _player("herder", a.herder, order)
        try:
            rec = play(g, cat, herder, start=a.start)
        except (StrategyError, IllegalMoveError) as exc:
            print(f"game aborted: {exc}", file=sys.stderr)
            return 1
    _write(rec.to_text(), a.output)
    return 0


def cmd_replay(a) -> int:
    try:
        with open(a.record) as fh:
            rec = GameRecord.from_text(fh.read())
        replay(rec)
    except OSError as exc:
        raise UsageError(f"cannot read {a.record}: {exc}") from None
    except ReplayError as exc:
        print(f"replay failed: {exc}")
        return 1
    if a.optimal and rec.complete:
        want = Solver(rec.graph).value_at(rec.start)
        if want != rec.score:
            print(f"replay failed: score {rec.score} but optimal play from {rec.start} gives {want}")
            return 1
    state = "complete" if rec.complete else "incomplete"
    print(f"ok {state} score {rec.score}")
    return 0


def cmd_verify(a) -> int:
    from .verify import SUITES, run_suite

    names = list(SUITES) if a.suite == "all" else [a.suite]
    if a.suite != "all" and a.suite not in SUITES:
        raise UsageError(f"unknown suite '{a.suite}'; choose from {', '.join(SUITES)}, all")
    ok = True
    for name in names:
        rep = run_suite(name, deep=a.deep, budget=a.budget, jobs=a.jobs)
        sys.stdout.write(rep.text())
        sys.stdout.flush()
        ok &= rep.ok
    return 0 if ok else 1


def cmd_partitions(a) -> int:
    rep = verify_corpus()
    sys.stdout.write(rep.to_tsv() if a.format == "tsv" else rep.summary() + "\n")
    return 0 if rep.ok else 1


def cmd_gen(a) -> int:
    spec = a.family if ":" in a.family or not a.params else f"{a.family}:{a.params}"
    try:
        g = from_spec(spec)
    except (GraphError, TypeError) as exc:
        raise UsageError(str(exc)) from None
    write_edge_list(g, sys.stdout)
    return 0


FORMULAS = {
    "c": F.c_recurrence,
    "c-closed": F.c_closed,
    "delta": F.delta_recurrence,
    "delta-closed": F.delta_closed,
    "path": F.path_value,
    "cycle": F.cycle_value,
    "star": F.star_value,
    "wheel": F.wheel_value,
    "complete": F.complete_value,
}


def cmd_formula(a) -> int:
    if a.name == "table":
        ns = a.args or [2, 10]
        if len(ns) != 2:
            raise UsageError("formula table takes a range: LO HI")
        rows = F.formula_rows(range(ns[0], ns[1] + 1))
        print("n\tc_n\tdelta_n\tlower\tupper")
        for n, c, d, lo, hi in rows:
            print(f"{n}\t{c}\t{d}\t{lo:.4f}\t{hi:.4f}")
        return 0
    if a.name not in FORMULAS:
        raise UsageError(f"unknown formula '{a.name}'; choose from {', '.join(FORMULAS)}, table")
    if len(a.args) != 1:
        raise UsageError(f"formula {a.name} takes one integer")
    try:
        print(FORMULAS[a.name](a.args[0]))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return 0


def cmd_tournament(a) -> int:
    graphs = [(s, load_graph(s)) for s in a.graphs]
    cats = [_player("cat", c, None) for c in a.cats]
    herders = [_player("herder", h, None) for h in a.herders]
    sys.stdout.write(tournament(graphs, cats, herders, jobs=a.jobs).to_tsv())
    return 0


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="catherding", description="Exact Cat Herding toolkit")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                   help="worker processes (default: all cores)")
    # --jobs is accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("value", parents=[common], help="cat number of a graph")
    s.add_argument("graph")
    s.add_argument("--vertex", type=int, help="value for a fixed start vertex")
    s.set_defaults(fn=cmd_value)

    s = sub.add_parser("solve", parents=[common], help="per-vertex values and the best start")
    s.add_argument("graph")
    s.add_argument("--format", choices=("text", "tsv"), default="text")
    s.set_defaults(fn=cmd_solve)

    s = sub.add_parser("trace", parents=[common], help="an optimal game record")
    s.add_argument("graph")
    s.add_argument("-o", "--output")
    s.set_defaults(fn=cmd_trace)

    s = sub.add_parser("play", parents=[common], help="play a refereed game")
    s.add_argument("--graph", required=True)
    s.add_argument("--cat", default="optimal", help=", ".join(registry.names("cat")))
    s.add_argument("--herder", default="optimal", help=", ".join(registry.names("herder")))
    s.add_argument("--interactive", choices=("cat", "herder"), help="side played at the terminal")
    s.add_argument("--start", type=int, help="force the cat's opening vertex")
    s.add_argument("--ordering", help="vertex ordering for cutwidth_herder, e.g. 0,1,2")
    s.add_argument("-o", "--output")
    s.set_defaults(fn=cmd_play)

    s = sub.add_parser("replay", parents=[common], help="validate a game record")
    s.add_argument("record")
    s.add_argument("--optimal", action="store_true", help="also require an optimal score")
    s.set_defaults(fn=cmd_replay)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", help="formulas, solver, figures, partitions, strategies, "
                                 "lemmas, planar, determinism or all")
    s.add_argument("--deep", action="store_true", help="include the long n=7 checks")
    s.add_argument("--budget", type=float, default=1800.0, help="seconds allowed per deep check")
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("partitions", parents=[common], help="small-case partition corpus")
    s.add_argument("action", choices=("verify",))
    s.add_argument("--format", choices=("text", "tsv"), default="text")
    s.set_defaults(fn=cmd_partitions)

    s = sub.add_parser("gen", parents=[common], help="write a generated graph as an edge list")
    s.add_argument("family", help=", ".join(sorted(FAMILIES)))
    s.add_argument("params", nargs="?", default="", help="comma separated parameters")
    s.set_defaults(fn=cmd_gen)

    s = sub.add_parser("formula", parents=[common], help="evaluate a closed form or recurrence")
    s.add_argument("name", help=", ".join(FORMULAS) + ", table")
    s.add_argument("args", nargs="*", type=int)
    s.set_defaults(fn=cmd_formula)

    s = sub.add_parser("tournament", parents=[common], help="score matrix of strategies over graphs")
    s.add_argument("--graphs", nargs="+", required=True)
    s.add_argument("--cats", nargs="*", default=[])
    s.add_argument("--herders", nargs="*", default=[])
    s.set_defaults(fn=cmd_tournament)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    if a.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        return a.fn(a)
    except (UsageError, PartitionError) as exc:
        print(f"catherding: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
