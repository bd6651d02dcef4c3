"""Acceptance criteria, one PASS/FAIL line each.

Suites 1 to 7 run once per session. The determinism criterion reuses their
reports as the first run, reruns suites 1 to 6, and compares the texts.
"""

import time

import pytest

from catherding import verify

# criterion -> (suite, time limit in seconds or None)
CRITERIA = {
    1: ("formulas", 30),
    2: ("solver", 300),
    3: ("figures", None),
    4: ("partitions", 5),
    5: ("strategies", 600),
    6: ("lemmas", None),
    7: ("planar", None),
}


@pytest.fixture(scope="module")
def reports():
    return {}


def _run(reports, name):
    if name not in reports:
        t0 = time.perf_counter()
        rep = verify.run_suite(name)
        reports[name] = (rep, time.perf_counter() - t0)
    return reports[name]


def _announce(capsys, n, ok, detail):
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, reports, capsys):
    name, limit = CRITERIA[n]
    rep, secs = _run(reports, name)
    in_time = limit is None or secs < limit
    ok = rep.ok and in_time
    summary = rep.text().splitlines()[-1]
    timing = f"{secs:.1f}s" + ("" if limit is None else f" (limit {limit}s)")
    _announce(capsys, n, ok, f"{summary}; {timing}")
    assert rep.ok, rep.text()
    assert in_time, f"{name} took {secs:.1f}s, limit {limit}s"


def test_criterion_8_determinism(reports, capsys):
    first = {name: _run(reports, name)[0].text() for name in verify.DETERMINISM_SUITES}
    rep = verify.determinism_suite(reference=first)
    _announce(capsys, 8, rep.ok, rep.text().splitlines()[-1])
    assert rep.ok, rep.text()
