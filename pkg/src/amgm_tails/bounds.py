"""Exact and simple tail bounds for ``X / G_X`` given the ratio ``mu = A_X / G_X``.

For ``v > mu`` (right tail) and ``0 < v < 1`` (left tail) the supremum of the
tail probability over all positive ``X`` with ``A_X / G_X = mu`` is

    p_v = (mu - z_v) / (v - z_v),

where ``z_v`` is the root of ``F(z) = (v - mu) ln z + (mu - z) ln v`` lying in
``(0, 1)`` (right) or ``(mu, inf)`` (left).  Between these regions the
supremum is 1 and is not attained.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

from .errors import DomainError, NearDegenerateError, NoSignChangeWithinCap, QNotBelowOne, RegionError
from .numerics import Bracket, expand_bracket_upward, find_root_bracketed
from .special import WBranch, lambert_w, v_minus_1_minus_ln_v

__all__ = [
    "MeanRatio",
    "TailSide",
    "BoundRegion",
    "ExactBoundResult",
    "RightTailLog",
    "big_f",
    "classify",
    "z_root",
    "hat_z",
    "lambert_branch",
    "z_lambert",
    "exact_tail_bound",
    "right_tail_log",
    "simple_tail_bound",
    "limit_gap",
]


@dataclass(frozen=True)
class MeanRatio:
    """Validated AM-GM ratio ``mu = A_X / G_X``; must be strictly above 1."""

    mu: float

    def __post_init__(self):
        mu = float(self.mu)
        if not (mu > 1.0 and math.isfinite(mu)):
            raise DomainError(f"mean ratio must be a finite number > 1, got {self.mu!r}")
        object.__setattr__(self, "mu", mu)

    def __float__(self):
        return self.mu


MuLike = Union[MeanRatio, float]


def _mu(mu: MuLike) -> float:
    return mu.mu if isinstance(mu, MeanRatio) else MeanRatio(mu).mu


class TailSide(enum.Enum):
    RIGHT = "right"  # P(X/G_X >= v)
    LEFT = "left"  # P(X/G_X <= v)


class BoundRegion(enum.Enum):
    NONTRIVIAL = "nontrivial"
    DEGENERATE_ONE = "degenerate_one"
    TRIVIAL_ZERO = "trivial_zero"


@dataclass(frozen=True)
class ExactBoundResult:
    region: BoundRegion
    z: Optional[float]
    p: float
    attained: bool
    near_degenerate: bool = False


def big_f(mu: MuLike, v: float, z: float) -> float:
    """``F(z) = (v - mu) ln z + (mu - z) ln v``."""
    mu = _mu(mu)
    if not (v > 0 and z > 0):
        raise DomainError(f"F needs v > 0 and z > 0, got v={v!r}, z={z!r}")
    return (v - mu) * math.log(z) + (mu - z) * math.log(v)


def classify(mu: MuLike, v: float, side: TailSide) -> BoundRegion:
    """Region of ``v`` for the given tail; comparisons are exact."""
    mu = _mu(mu)
    side = TailSide(side)
    if side is TailSide.RIGHT:
        return BoundRegion.NONTRIVIAL if v > mu else BoundRegion.DEGENERATE_ONE
    if v <= 0:
        return BoundRegion.TRIVIAL_ZERO
    return BoundRegion.NONTRIVIAL if v < 1 else BoundRegion.DEGENERATE_ONE


def _side_of(mu: float, v: float) -> TailSide:
    if v > mu:
        return TailSide.RIGHT
    if 0 < v < 1:
        return TailSide.LEFT
    raise RegionError(f"v={v!r} is outside (mu, inf) U (0, 1) for mu={mu!r}")


def _right_log_root(mu: float, v: float) -> float:
    """ln z_v for v > mu, solved in w = ln z so tiny z never underflows."""
    lv = math.log(v)
    dmu = mu - 1.0
    dv = v - mu

    def g(w):
        return dv * w + (dmu - math.expm1(w)) * lv

    # g(w) < dv*w + mu*lv, so the left end is strictly negative; g(0) = dmu*lv > 0
    w_lo = -mu * lv / dv - 1.0
    bracket = Bracket(w_lo, 0.0, g(w_lo), g(0.0))
    return find_root_bracketed(g, bracket, tol_x=0.0, tol_f=0.0).root


def _left_root(mu: float, v: float) -> float:
    lv = math.log(v)
    dv = v - mu

    def f(z):
        return dv * math.log(z) + (mu - z) * lv

    try:
        bracket = expand_bracket_upward(f, mu, 2.0)
    except NoSignChangeWithinCap as exc:
        raise NearDegenerateError(f"z_v diverges for v={v!r} near 1") from exc
    return find_root_bracketed(f, bracket, tol_x=0.0, tol_f=0.0).root


def z_root(mu: MuLike, v: float) -> float:
    """The root ``z_v`` of ``F``, found by bracketed root finding.

    In ``(0, 1)`` when ``v > mu``; in ``(mu, inf)`` when ``0 < v < 1``.
    For ``v`` just above a large ``mu`` the right root can lie below the
    smallest double and is returned as 0.0; use :func:`right_tail_log` there.
    """
    mu = _mu(mu)
    if _side_of(mu, v) is TailSide.RIGHT:
        return math.exp(_right_log_root(mu, v))
    return _left_root(mu, v)


def hat_z(mu: MuLike, v: float) -> float:
    """``(v - mu) / ln v``; always positive in either nontrivial region."""
    mu = _mu(mu)
    _side_of(mu, v)
    return (v - mu) / math.log(v)


def lambert_branch(mu: MuLike, v: float) -> WBranch:
    """Branch of W giving ``z_v``: principal on the right, -1 on the left."""
    mu = _mu(mu)
    return WBranch.PRINCIPAL if _side_of(mu, v) is TailSide.RIGHT else WBranch.MINUS_ONE


def z_lambert(mu: MuLike, v: float) -> float:
    """Closed form ``z_v = -zh * W(-exp(-mu/zh) / zh)`` with ``zh = hat_z``."""
    mu = _mu(mu)
    branch = lambert_branch(mu, v)
    zh = (v - mu) / math.log(v)
    u = -math.exp(-(mu / zh + math.log(zh)))
    return -zh * lambert_w(branch, u)


def exact_tail_bound(mu: MuLike, v: float, side: TailSide) -> ExactBoundResult:
    """Sharp upper bound on ``P(X/G_X >= v)`` (right) or ``P(X/G_X <= v)`` (left).

    Valid for every positive ``X`` with ``A_X / G_X <= mu``.  In the
    nontrivial region the bound is attained by a two-point law on
    ``{v, z_v}``; elsewhere it is 1 (not attained), or 0 for ``v <= 0`` on the
    left.
    """
    mu = _mu(mu)
    side = TailSide(side)
    region = classify(mu, v, side)
    if region is BoundRegion.TRIVIAL_ZERO:
        return ExactBoundResult(region, None, 0.0, True)
    if region is BoundRegion.DEGENERATE_ONE:
        return ExactBoundResult(region, None, 1.0, False)
    try:
        z = z_root(mu, v)
    except NearDegenerateError:
        return ExactBoundResult(BoundRegion.DEGENERATE_ONE, None, 1.0, False, near_degenerate=True)
    return ExactBoundResult(region, z, (mu - z) / (v - z), True)


class RightTailLog(NamedTuple):
    log_z: float
    log_p: float
    markov_gap: float  # 1 - p / (mu/v), computed without cancellation
    log_markov_gap: float  # finite even where markov_gap underflows

    @property
    def p(self) -> float:
        return math.exp(self.log_p)


def right_tail_log(log_mu: float, log_v: float) -> RightTailLog:
    """Right-tail exact bound from ``ln mu`` and ``ln v``.

    Used where ``mu`` or ``v`` themselves overflow (e.g. ``mu = exp(t**2/2)``
    for large ``t``).  Requires ``0 < log_mu < log_v``.
    """
    a, b = float(log_mu), float(log_v)
    if not 0.0 < a < b:
        raise RegionError(f"need 0 < ln mu < ln v, got ({a!r}, {b!r})")
    d = b - a
    # c = 1 / (v/mu - 1)
    c = math.exp(-d) / -math.expm1(-d) if d > 1.0 else 1.0 / math.expm1(d)

    def h(w):
        # F(e^w) / (mu * (v/mu - 1))
        return w - b * math.expm1(w - a) * c

    w_lo = -b * c - 1.0
    h_lo = h(w_lo)
    if h_lo == 0.0:
        w = w_lo
    else:
        w = find_root_bracketed(h, Bracket(w_lo, 0.0, h_lo, h(0.0)), tol_x=0.0, tol_f=0.0).root
    one_minus_z_over_v = -math.expm1(w - b)
    log_p = -d + math.log(-math.expm1(w - a)) - math.log(one_minus_z_over_v)
    log_gap = (w - a) + math.log(-math.expm1(-d)) - math.log(one_minus_z_over_v)
    return RightTailLog(w, log_p, math.exp(log_gap), log_gap)


def simple_tail_bound(mu: MuLike, v: float, side: TailSide) -> float:
    """Closed-form bound ``q_v = min(1, (mu - 1) / (v - 1 - ln v))``, ``q_1 = 1``.

    Right tail for ``v >= 1``; left tail for ``0 < v <= mu``.
    """
    mu = _mu(mu)
    side = TailSide(side)
    if side is TailSide.RIGHT and not v >= 1:
        raise RegionError(f"right simple bound needs v >= 1, got {v!r}")
    if side is TailSide.LEFT and not 0 < v <= mu:
        raise RegionError(f"left simple bound needs 0 < v <= mu, got {v!r}")
    if v == 1:
        return 1.0
    return min(1.0, (mu - 1.0) / v_minus_1_minus_ln_v(v))


def limit_gap(mu: MuLike, v: float, side: TailSide) -> float:
    """``p_v - q_v / (1 + q_v)``, which tends to 0 as ``mu, v -> 1`` with ``q_v < 1``."""
    mu = _mu(mu)
    side = TailSide(side)
    if classify(mu, v, side) is not BoundRegion.NONTRIVIAL:
        raise RegionError(f"v={v!r} is not in the nontrivial {side.value} region for mu={mu!r}")
    q = simple_tail_bound(mu, v, side)
    if q >= 1.0:
        raise QNotBelowOne(f"q_v = 1 at mu={mu!r}, v={v!r}")
    return exact_tail_bound(mu, v, side).p - q / (1.0 + q)
