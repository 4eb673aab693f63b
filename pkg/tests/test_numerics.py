import math

import pytest
from hypothesis import given, settings, strategies as st

from amgm_tails import numerics
from amgm_tails.errors import InvalidInterval, MaxIterations, NoSignChange, NoSignChangeWithinCap
from amgm_tails.numerics import (
    Bracket,
    expand_bracket_upward,
    find_root_bracketed,
    make_bracket,
    minimize_scalar,
)


def F24(z):
    return 2 * math.log(z) + (2 - z) * math.log(4)


# bisection on F_{2,4} in mpmath at 50 digits
Z24 = 0.30990693238069053545


def test_linear_root():
    r = find_root_bracketed(lambda x: x - 2, make_bracket(lambda x: x - 2, 0, 5), tol_x=1e-12)
    assert r.root == pytest.approx(2, abs=1e-12)


def test_log_root():
    r = find_root_bracketed(math.log, make_bracket(math.log, 0.5, 2))
    assert r.root == pytest.approx(1, abs=1e-12)


def test_F24_root():
    r = find_root_bracketed(F24, make_bracket(F24, 0.01, 0.99), tol_x=0, tol_f=0)
    assert r.root == pytest.approx(Z24, rel=1e-14)
    assert abs(r.residual) <= 1e-14
    assert r.iterations <= 200


def test_invalid_brackets():
    with pytest.raises(NoSignChange):
        make_bracket(lambda x: x * x + 1, -1, 1)
    with pytest.raises(NoSignChange):
        Bracket(1.0, 0.0, -1.0, 1.0)


def test_jump_discontinuity_converges():
    f = lambda x: -1.0 if x < math.pi else 1.0
    r = find_root_bracketed(f, make_bracket(f, 0.0, 10.0), tol_x=0, tol_f=0)
    assert r.root == pytest.approx(math.pi, rel=1e-15)


def test_max_iterations(monkeypatch):
    monkeypatch.setattr(numerics, "MAX_ITER", 3)
    with pytest.raises(MaxIterations):
        find_root_bracketed(F24, make_bracket(F24, 0.01, 0.99), tol_x=0, tol_f=0)


def test_expand_upward():
    br = expand_bracket_upward(lambda x: x - 10, 1.0, 2.0)
    assert (br.lo, br.hi) == (1.0, 16.0)


def test_expand_upward_left_tail_F():
    mu, v = 1.1, 0.5
    f = lambda z: (v - mu) * math.log(z) + (mu - z) * math.log(v)
    br = expand_bracket_upward(f, mu, 2.0)
    assert br.lo == mu and br.f_lo < 0 < br.f_hi
    # the first sign change: hi/2 still negative
    assert br.hi == mu or f(br.hi / 2) < 0


def test_expand_upward_cap():
    with pytest.raises(NoSignChangeWithinCap):
        expand_bracket_upward(lambda x: -1.0, 1.0, 2.0)
    with pytest.raises(InvalidInterval):
        expand_bracket_upward(lambda x: x - 3, 1.0, 1.0)


def test_minimize_quadratic():
    x, fx = minimize_scalar(lambda x: (x - 3) ** 2, 0, 10)
    assert x == pytest.approx(3, abs=1e-9)
    assert fx == pytest.approx(0, abs=1e-18)


def test_minimize_x_minus_log():
    x, fx = minimize_scalar(lambda x: x - math.log(x), 0.1, 5)
    # f is flat to machine precision within sqrt(eps) of the minimizer
    assert x == pytest.approx(1, abs=1e-7)
    assert fx == pytest.approx(1, abs=1e-15)


def test_minimize_invalid():
    with pytest.raises(InvalidInterval):
        minimize_scalar(lambda x: x, 1.0, 1.0)


def test_minimize_monotone_picks_end():
    x, fx = minimize_scalar(lambda x: x, 2.0, 7.0)
    assert x == 2.0 and fx == 2.0


@settings(max_examples=200, deadline=None)
@given(st.floats(-50, 50), st.floats(0.1, 20), st.floats(0.1, 20))
def test_root_stays_in_bracket_and_refines(root, left, right):
    f = lambda x: math.atan(x - root)
    lo, hi = root - left, root + right
    br = make_bracket(f, lo, hi)
    coarse = find_root_bracketed(f, br, tol_x=1e-6, tol_f=0)
    fine = find_root_bracketed(f, br, tol_x=1e-7, tol_f=0)
    assert lo <= coarse.root <= hi and lo <= fine.root <= hi
    assert abs(fine.root - coarse.root) <= 1e-6 * max(abs(coarse.root), 1e-300) + 1e-12


@settings(max_examples=100, deadline=None)
@given(st.floats(-5, 5), st.floats(0.5, 3))
def test_minimizer_beats_uniform_grid(c, k):
    f = lambda x: abs(x - c) ** k + math.cos(x - c) * 0.01
    lo, hi = -10.0, 10.0
    _, fmin = minimize_scalar(f, lo, hi)
    grid = [lo + i * (hi - lo) / 99 for i in range(100)]
    assert fmin <= min(f(x) for x in grid) + 1e-9
