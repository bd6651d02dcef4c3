import numpy as np
import pytest
from hypothesis import given, strategies as st

from catherding import formulas as F
from catherding import generators as gen
from catherding.graph import Graph

from conftest import graphs
from oracles import brute_cutwidth, c_slow, literal_closed_form

C_SMALL = [1, 2, 5, 8, 11, 17, 21, 28, 33, 41, 47, 59, 66, 77]  # c_2..c_15
DELTA_SMALL = [1, 3, 3, 3, 6, 4, 7, 5, 8, 6, 12, 7]  # Delta_2..Delta_13


def test_c_small_values():
    assert [F.c_recurrence(n) for n in range(2, 16)] == C_SMALL
    assert F.c_recurrence(1) == 0


def test_c_closed_small_values():
    assert [F.c_closed(n) for n in range(2, 16)] == C_SMALL


@given(st.integers(2, 400))
def test_closed_form_matches_literal_sum(n):
    assert F.c_closed(n) == literal_closed_form(n) == c_slow(n)


@given(st.integers(2, 10**12))
def test_closed_form_matches_recurrence_large(n):
    assert F.c_closed(n) == F.c_recurrence(n)


def test_arrays_agree():
    N = 5000
    rec, closed = F.c_recurrence_array(N), F.c_closed_array(N)
    assert np.array_equal(rec[2:], closed[2:])
    assert rec[2:16].tolist() == C_SMALL
    assert [F.c_recurrence(n) for n in (17, 1000, 4999)] == [int(rec[n]) for n in (17, 1000, 4999)]


def test_delta_values():
    assert [F.delta_recurrence(n) for n in range(2, 14)] == DELTA_SMALL
    assert [F.delta_closed(n) for n in range(2, 14)] == DELTA_SMALL


@given(st.integers(2, 10**15))
def test_delta_closed_matches_recurrence(n):
    assert F.delta_closed(n) == F.delta_recurrence(n)


def test_delta_arrays_agree():
    N = 4096
    assert np.array_equal(F.delta_closed_array(N)[2:], F.delta_recurrence_array(N)[2:])
    assert F.delta_recurrence_array(13)[2:].tolist() == DELTA_SMALL


def test_delta_is_first_difference_of_c():
    c = F.c_recurrence_array(3001)
    assert F.delta_recurrence_array(3000)[2:].tolist() == np.diff(c)[2:].tolist()
    assert (F.delta_closed(10), F.delta_closed(12), F.delta_closed(8)) == (8, 12, 7)


@given(st.integers(2, 10**9))
def test_bounds(n):
    assert F.c_bounds_hold(n)
    assert F.delta_bounds_hold(n)


def test_family_values():
    assert [F.path_value(n) for n in (2, 3, 4, 5, 9, 17)] == [1, 2, 2, 3, 4, 5]
    assert [F.cycle_value(n) for n in (3, 4, 5, 6, 8, 9)] == [2, 3, 3, 4, 4, 4]
    assert [F.star_value(k) for k in (0, 1, 2, 9)] == [0, 1, 2, 2]
    assert F.wheel_value(7) == 8
    assert F.complete_value(6) == 11


@pytest.mark.parametrize("fn, bad", [(F.path_value, 1), (F.cycle_value, 2), (F.star_value, -1),
                                     (F.wheel_value, 3), (F.c_closed, 1), (F.delta_closed, 1),
                                     (F.delta_recurrence, 0), (F.ceil_log2, 0)])
def test_domain_errors(fn, bad):
    with pytest.raises(ValueError):
        fn(bad)


def test_c_rejects_non_integers():
    with pytest.raises(ValueError):
        F.c_recurrence(2.5)
    with pytest.raises(ValueError):
        F.c_recurrence(0)
    assert F.c_recurrence(np.int64(7)) == 17


@given(st.integers(1, 2**80), st.integers(1, 2**40))
def test_floor_log2_ratio(a, b):
    if a < b:
        a, b = b, a
    t = F.floor_log2_ratio(a, b)
    assert (b << t) <= a < (b << (t + 1))


def test_ceil_log2():
    assert [F.ceil_log2(n) for n in (1, 2, 3, 4, 5, 1024, 1025)] == [0, 1, 2, 2, 3, 10, 11]


def test_grid_gadget_size_and_bound():
    for p in range(3, 7):
        for k in range(1, 4):
            g = gen.grid_gadget(p, k)
            assert F.grid_size(p, k) == (g.n, max(g.degree(v) for v in range(g.n)))
            assert F.gr_lower(p, k) == k * p
    with pytest.raises(ValueError):
        F.grid_size(2, 1)


def test_planar_and_cutwidth_bounds():
    assert F.planar_upper(1, 0) == 0
    assert F.planar_upper(100, 4) == pytest.approx(F.PLANAR_CONSTANT * 20)
    assert F.cutwidth_bound(3, 9) == 12
    with pytest.raises(ValueError):
        F.cutwidth_bound(-1, 4)


@given(graphs(max_n=7))
def test_cutwidth_matches_brute_force(g):
    cw, order = F.cutwidth(g)
    assert cw == brute_cutwidth(g.n, g.edges())
    assert F.width(g, order) == cw


def test_cutwidth_examples():
    assert F.cutwidth(gen.path(6))[0] == 1
    assert F.cutwidth(gen.cycle(6))[0] == 2
    assert F.cutwidth(gen.complete(4))[0] == 4
    assert F.cutwidth(Graph(1))[0] == 0


def test_width_rejects_bad_orderings():
    with pytest.raises(ValueError):
        F.width(gen.path(3), [0, 1, 1])


def test_formula_rows():
    rows = F.formula_rows(range(2, 5))
    assert [r[:3] for r in rows] == [(2, 1, 1), (3, 2, 3), (4, 5, 3)]
    assert all(lo <= c <= hi for _, c, _, lo, hi in rows)
