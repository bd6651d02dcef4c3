import io
import re
import shlex
from pathlib import Path

import pytest

from catherding.cli import main

README = Path(__file__).resolve().parent.parent / "README.md"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def readme_examples():
    """(argv, expected stdout) for every ``$ catherding ...`` line in the README."""
    text = README.read_text()
    examples = []
    for block in re.findall(r"```console\n(.*?)```", text, re.S):
        lines = block.splitlines()
        i = 0
        while i < len(lines):
            if lines[i].startswith("$ catherding "):
                argv = shlex.split(lines[i][len("$ catherding "):])
                j = i + 1
                while j < len(lines) and not lines[j].startswith("$ "):
                    j += 1
                examples.append((argv, "".join(l + "\n" for l in lines[i + 1:j])))
                i = j
            else:
                i += 1
    return examples


EXAMPLES = readme_examples()


def test_readme_has_examples():
    assert len(EXAMPLES) >= 10


@pytest.mark.parametrize("argv, expected", EXAMPLES, ids=[" ".join(a) for a, _ in EXAMPLES])
def test_readme_example_output(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out == expected


def test_jobs_before_and_after_the_command(capsys):
    assert run(capsys, "--jobs", "1", "value", "cycle:6")[1] == "4\n"
    assert run(capsys, "value", "wheel:6", "--jobs", "2")[1] == "7\n"


def test_usage_errors_exit_2(capsys):
    code, _, err = run(capsys, "value", "nope")
    assert code == 2 and "neither a readable file" in err
    assert run(capsys, "formula", "path", "1")[0] == 2
    assert run(capsys, "formula", "bogus", "3")[0] == 2
    assert run(capsys, "formula", "table", "3")[0] == 2
    assert run(capsys, "value", "path:5", "--vertex", "9")[0] == 2
    assert run(capsys, "verify", "nothing")[0] == 2
    assert run(capsys, "gen", "path", "x")[0] == 2
    assert run(capsys, "play", "--graph", "path:4", "--herder", "human")[0] == 2
    assert run(capsys, "play", "--graph", "path:4", "--herder", "cutwidth_herder")[0] == 2
    assert run(capsys, "play", "--graph", "path:4", "--cat", "nobody")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_edge_list_files_and_replay(capsys, tmp_path):
    code, text, _ = run(capsys, "gen", "cycle:5")
    assert code == 0
    g = tmp_path / "c5.txt"
    g.write_text(text)
    assert run(capsys, "value", str(g))[1] == "3\n"
    rec = tmp_path / "game.txt"
    assert run(capsys, "play", "--graph", str(g), "-o", str(rec))[0] == 0
    assert run(capsys, "replay", str(rec), "--optimal")[1] == "ok complete score 3\n"
    rec.write_text(rec.read_text().replace("score 3", "score 2"))
    code, out, _ = run(capsys, "replay", str(rec))
    assert code == 1 and out.startswith("replay failed:")
    assert run(capsys, "replay", str(tmp_path / "missing.txt"))[0] == 2


def test_replay_optimal_rejects_suboptimal_games(capsys, tmp_path):
    rec = tmp_path / "g.txt"
    assert run(capsys, "play", "--graph", "path:9", "--start", "0", "-o", str(rec))[0] == 0
    assert run(capsys, "replay", str(rec), "--optimal")[1] == "ok complete score 1\n"
    assert run(capsys, "play", "--graph", "path:8", "--cat", "path_cat", "--herder", "cutwidth_herder",
               "--ordering", "0,2,4,6,1,3,5,7", "-o", str(rec))[0] == 0
    assert run(capsys, "replay", str(rec))[0] == 0
    code, out, _ = run(capsys, "replay", str(rec), "--optimal")
    assert code == 1 and out == "replay failed: score 7 but optimal play from 3 gives 3\n"


def test_play_with_ordering(capsys):
    code, out, _ = run(capsys, "play", "--graph", "path:4", "--herder", "cutwidth_herder",
                       "--ordering", "0,1,2,3")
    assert code == 0 and out.splitlines()[-1] == "score 2"
    assert run(capsys, "play", "--graph", "path:4", "--herder", "cutwidth_herder",
               "--ordering", "a,b")[0] == 2


def test_play_reports_strategy_failures(capsys):
    code, _, err = run(capsys, "play", "--graph", "path:4", "--herder", "binary_herder")
    assert code == 1 and "game aborted" in err


def test_interactive_play(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("5 6\n6 7\n7 8\n"))
    code, out, _ = run(capsys, "play", "--graph", "path:9", "--interactive", "herder", "--start", "6")
    assert code == 0 and "score 3\n" in out


def test_solve_tsv_and_trace_file(capsys, tmp_path):
    code, out, _ = run(capsys, "solve", "star:3", "--format", "tsv")
    assert out.splitlines() == ["vertex\tvalue", "0\t2", "1\t1", "2\t1", "3\t1"]
    path = tmp_path / "t.txt"
    assert run(capsys, "trace", "wheel:5", "-o", str(path))[0] == 0
    assert path.read_text().splitlines()[-1] == "score 6"


def test_partitions_tsv(capsys):
    code, out, _ = run(capsys, "partitions", "verify", "--format", "tsv")
    assert code == 0 and out.splitlines()[-1] == "376 tested, 0 violations"
    assert "distinct\t302" in out


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "planar")
    assert code == 0 and out.splitlines()[-1].startswith("planar: PASS")
