"""Game records: the auditable trace of a played game.

Text format (one field per line, ``#`` starts a comment)::

    catherding-record 1
    graph 3 2
    edge 0 1
    edge 1 2
    start 1
    cut 0 1
    move 2
    cut 1 2
    score 2

A record is *complete* when its last cut isolates the cat.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TextIO

from .graph import EdgeId, Graph, GraphError, canonical_edge

MAGIC = "catherding-record"
VERSION = 1


class ReplayError(ValueError):
    """A record does not describe a legal, finished game."""


@dataclass
class GameRecord:
    graph: Graph
    start: int | None
    # (cut, destination); destination is None after the isolating cut
    turns: list[tuple[EdgeId, int | None]] = field(default_factory=list)
    complete: bool = True

    @property
    def score(self) -> int:
        return len(self.turns)

    @property
    def cuts(self) -> list[EdgeId]:
        return [e for e, _ in self.turns]

    def positions(self) -> list[int]:
        """Cat position before each cut (index i is the cat's spot at cut i)."""
        out = []
        pos = self.start
        for e, dest in self.turns:
            out.append(pos)
            if dest is not None:
                pos = dest
        return out

    def to_text(self) -> str:
        lines = [f"{MAGIC} {VERSION}", f"graph {self.graph.n} {self.graph.num_edges}"]
        lines += [f"edge {a} {b}" for a, b in self.graph.edges()]
        if self.start is not None:
            lines.append(f"start {self.start}")
        for (a, b), dest in self.turns:
            lines.append(f"cut {a} {b}")
            if dest is not None:
                lines.append(f"move {dest}")
        if not self.complete:
            lines.append("incomplete")
        lines.append(f"score {self.score}")
        return "\n".join(lines) + "\n"

    def write(self, stream: TextIO) -> None:
        stream.write(self.to_text())

    @classmethod
    def from_text(cls, text: str) -> "GameRecord":
        rows = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if line:
                rows.append(line.split())
        if not rows or rows[0][0] != MAGIC:
            raise ReplayError("missing record header")
        if len(rows[0]) != 2 or rows[0][1] != str(VERSION):
            raise ReplayError(f"unsupported record version {rows[0][1:]}")
        n = m = None
        edges: list[EdgeId] = []
        start = None
        turns: list[list] = []
        score = None
        complete = True
        try:
            for tag, *args in rows[1:]:
                if tag == "graph":
                    n, m = int(args[0]), int(args[1])
                elif tag == "edge":
                    edges.append((int(args[0]), int(args[1])))
                elif tag == "start":
                    start = int(args[0])
                elif tag == "cut":
                    turns.append([canonical_edge(int(args[0]), int(args[1])), None])
                elif tag == "move":
                    if not turns or turns[-1][1] is not None:
                        raise ReplayError("move without a preceding cut")
                    turns[-1][1] = int(args[0])
                elif tag == "score":
                    score = int(args[0])
                elif tag == "incomplete":
                    complete = False
                else:
                    raise ReplayError(f"unknown field '{tag}'")
        except (IndexError, ValueError, GraphError) as exc:
            if isinstance(exc, ReplayError):
                raise
            raise ReplayError(f"malformed record: {exc}") from None
        if n is None:
            raise ReplayError("record has no graph line")
        if len(edges) != m:
            raise ReplayError(f"graph announces {m} edges, found {len(edges)}")
        try:
            g = Graph(n, edges)
        except GraphError as exc:
            raise ReplayError(str(exc)) from None
        rec = cls(g, start, [(e, d) for e, d in turns], complete)
        if score is not None and score != rec.score:
            raise ReplayError(f"declared score {score} but record has {rec.score} cuts")
        return rec


def replay(record: GameRecord) -> Graph:
    """Check every step of ``record``; return the final graph.

    Raises :class:`ReplayError` naming the first illegal step.
    """
    g = record.graph
    if g.n == 0:
        if record.turns:
            raise ReplayError("empty graph admits no moves")
        return g
    cat = record.start
    if cat is None or not 0 <= cat < g.n:
        raise ReplayError(f"illegal start vertex {cat}")
    for step, (e, dest) in enumerate(record.turns, 1):
        if g.degree(cat) == 0:
            raise ReplayError(f"step {step}: cat already isolated before cut {e}")
        if not (0 <= e[0] < g.n and 0 <= e[1] < g.n) or not g.has_edge(*e):
            raise ReplayError(f"step {step}: cut {e} is not a surviving edge")
        g = g.delete_edge(e)
        isolated = g.degree(cat) == 0
        if dest is None:
            if step != len(record.turns):
                raise ReplayError(f"step {step}: missing cat move")
            if record.complete and not isolated:
                raise ReplayError(f"step {step}: final cut leaves the cat able to move")
            continue
        if isolated:
            raise ReplayError(f"step {step}: cat isolated but a move is recorded")
        if dest == cat or dest not in g.component_of(cat):
            raise ReplayError(f"step {step}: cat cannot move from {cat} to {dest}")
        cat = dest
    if record.complete and g.degree(cat) != 0:
        raise ReplayError("record ends before the cat is isolated")
    return g
