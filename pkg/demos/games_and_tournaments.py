"""Refereed games, replayable records and tournaments.

The arena checks every move, records the game in a plain text format and
plays every strategy pair across a list of graphs.
"""

import io

from catherding import generators as gen
from catherding.arena import interactive_play, play, tournament
from catherding.records import GameRecord, replay

rec = play(gen.complete(5), "cat_strategy_C", "binary_herder")
text = rec.to_text()
print(text)
again = GameRecord.from_text(text)
replay(again)
print("record replays cleanly, score", again.score)

# a scripted human herder on P_9, with one illegal cut that gets rejected
out = io.StringIO()
human = interactive_play(gen.path(9), "herder", start=6,
                         stdin=io.StringIO("5 6\n9 9\n6 7\n7 8\n"), stdout=out)
print(out.getvalue().splitlines()[-1], "complete" if human.complete else "incomplete")

graphs = [(f"complete:{n}", gen.complete(n)) for n in range(2, 6)] + [("path:8", gen.path(8))]
print(tournament(graphs, ["optimal", "cat_strategy_C"], ["binary_herder", "path_herder"]).to_tsv())
