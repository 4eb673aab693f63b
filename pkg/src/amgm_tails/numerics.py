"""Bracketed scalar root finding and golden-section minimization.

Both routines are deterministic pure functions, written out here rather than
pulled from scipy so that termination rules and error types stay under our
control.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import InvalidInterval, MaxIterations, NoSignChange, NoSignChangeWithinCap

__all__ = [
    "Bracket",
    "RootResult",
    "make_bracket",
    "find_root_bracketed",
    "expand_bracket_upward",
    "minimize_scalar",
    "MAX_ITER",
    "MAX_DOUBLINGS",
]

MAX_ITER = 200
MAX_DOUBLINGS = 200
TOL_X = 1e-13
TOL_F = 1e-12
_EPS = 2.220446049250313e-16
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise NoSignChange(f"bracket requires lo < hi, got [{self.lo}, {self.hi}]")
        if not (self.f_lo < 0 < self.f_hi or self.f_hi < 0 < self.f_lo):
            raise NoSignChange(
                f"no sign change on [{self.lo}, {self.hi}]: f = ({self.f_lo}, {self.f_hi})"
            )


@dataclass(frozen=True)
class RootResult:
    root: float
    residual: float
    iterations: int


def make_bracket(f: Callable[[float], float], lo: float, hi: float) -> Bracket:
    """Evaluate ``f`` at both ends and build a validated :class:`Bracket`."""
    return Bracket(lo, hi, f(lo), f(hi))


def find_root_bracketed(
    f: Callable[[float], float],
    bracket: Bracket,
    tol_x: float = TOL_X,
    tol_f: float = TOL_F,
) -> RootResult:
    """Brent's method on a sign-changing bracket.

    Terminates when ``|f(root)| <= tol_f`` or when the bracket half-width drops
    below ``2*eps*|root| + tol_x*max(|root|, tiny)/2``; pass ``tol_f=0`` to
    iterate down to adjacent floating point numbers. The returned root always
    lies inside the original bracket.
    """
    a, b = bracket.lo, bracket.hi
    fa, fb = bracket.f_lo, bracket.f_hi
    c, fc = a, fa
    d = e = b - a

    for it in range(1, MAX_ITER + 1):
        if (fb > 0) == (fc > 0):
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb

        tol = 2.0 * _EPS * abs(b) + 0.5 * tol_x * max(abs(b), 1e-300)
        m = 0.5 * (c - b)
        if fb == 0.0 or abs(fb) <= tol_f or abs(m) <= tol:
            return RootResult(b, fb, it)

        if abs(e) >= tol and abs(fa) > abs(fb):
            # secant or inverse quadratic interpolation
            s = fb / fa
            if a == c:
                p = 2.0 * m * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0:
                q = -q
            else:
                p = -p
            if 2.0 * p < min(3.0 * m * q - abs(tol * q), abs(e * q)):
                e, d = d, p / q
            else:
                d = e = m
        else:
            d = e = m

        a, fa = b, fb
        if abs(d) > tol:
            b += d
        else:
            b += math.copysign(tol, m)
        fb = f(b)

    raise MaxIterations(f"root not found within {MAX_ITER} iterations")


def expand_bracket_upward(
    f: Callable[[float], float], start: float, factor: float = 2.0
) -> Bracket:
    """Grow ``[start, start*factor**k]`` until ``f`` changes sign."""
    if not factor > 1.0:
        raise InvalidInterval(f"factor must exceed 1, got {factor}")
    f0 = f(start)
    if f0 == 0 or math.isnan(f0):
        raise NoSignChange(f"f(start) has no definite sign: {f0}")
    hi = start
    for _ in range(MAX_DOUBLINGS):
        hi *= factor
        fh = f(hi)
        if (fh > 0) != (f0 > 0) and fh != 0:
            return Bracket(start, hi, f0, fh)
        if fh == 0:
            # exact root on a grid point; widen by one step so the bracket is strict
            return Bracket(start, hi * factor, f0, f(hi * factor))
    raise NoSignChangeWithinCap(f"no sign change within {MAX_DOUBLINGS} expansions from {start}")


def minimize_scalar(
    f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-10
) -> tuple[float, float]:
    """Golden-section search for a minimizer of ``f`` on ``[lo, hi]``.

    ``f`` is assumed unimodal on the interval; otherwise a local minimizer is
    returned. The end points are also compared so a monotone ``f`` yields the
    better end.
    """
    if not lo < hi:
        raise InvalidInterval(f"need lo < hi, got [{lo}, {hi}]")
    a, b = lo, hi
    x1 = b - _INVPHI * (b - a)
    x2 = a + _INVPHI * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > max(tol, 4.0 * _EPS * max(abs(a), abs(b))):
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INVPHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INVPHI * (b - a)
            f2 = f(x2)

    best = min((f1, x1), (f2, x2), (f(lo), lo), (f(hi), hi))
    return best[1], best[0]
