"""Real branches of Lambert's W and cancellation-free elementary helpers."""
from __future__ import annotations

import enum
import math

from .errors import DomainError

__all__ = [
    "WBranch",
    "lambert_w",
    "v_minus_1_minus_ln_v",
    "h_convex",
    "h_log1p",
    "expm1_minus_x",
    "NEG_INV_E",
]

NEG_INV_E = -math.exp(-1.0)
_BRANCH_GRACE = math.nextafter(NEG_INV_E, -math.inf)
_SERIES_CUT = 1e-3

# W(-1/e + p^2/(2e)) = sum c_k p^k, p = +-sqrt(2(e*u + 1))
_BRANCH_SERIES = (-1.0, 1.0, -1.0 / 3.0, 11.0 / 72.0, -43.0 / 540.0,
                  769.0 / 17280.0, -221.0 / 8505.0)


class WBranch(enum.Enum):
    PRINCIPAL = 0
    MINUS_ONE = -1


def _two_product(a: float, b: float) -> tuple[float, float]:
    # Dekker: a*b == hi + lo exactly
    hi = a * b
    c = 134217729.0 * a
    a_hi = c - (c - a)
    a_lo = a - a_hi
    c = 134217729.0 * b
    b_hi = c - (c - b)
    b_lo = b - b_hi
    lo = ((a_hi * b_hi - hi) + a_hi * b_lo + a_lo * b_hi) + a_lo * b_lo
    return hi, lo


_E_HI = math.e
_E_LO = 1.4456468917292502e-16


def _branch_distance(u: float) -> float:
    """``e*u + 1`` with the product carried in double-double."""
    hi, lo = _two_product(_E_HI, u)
    return (hi + 1.0) + (lo + _E_LO * u)


def _branch_point_series(p: float) -> float:
    return math.fsum(c * p**k for k, c in enumerate(_BRANCH_SERIES))


def _halley(t: float, u: float) -> float:
    for _ in range(50):
        et = math.exp(t)
        f = t * et - u
        if f == 0.0:
            return t
        wp1 = t + 1.0
        step = f / (et * wp1 - (t + 2.0) * f / (2.0 * wp1))
        t -= step
        if abs(step) <= 4e-16 * (1.0 + abs(t)):
            return t
    return t


def _newton_log(t: float, log_u: float, sign: float) -> float:
    # solves t + ln(sign*t) = log_u; well conditioned away from t = -1
    for _ in range(50):
        g = t + math.log(sign * t) - log_u
        step = g / (1.0 + 1.0 / t)
        t -= step
        if abs(step) <= 4e-16 * abs(t):
            return t
    return t


def lambert_w(branch: WBranch, u: float) -> float:
    """Real Lambert W: the ``t`` on the given branch with ``t*exp(t) == u``.

    ``PRINCIPAL`` is defined for ``u >= -1/e`` and returns ``t >= -1``;
    ``MINUS_ONE`` is defined for ``-1/e <= u < 0`` and returns ``t <= -1``.
    Inputs up to one ulp below the float ``-1/e`` are treated as the branch
    point itself.
    """
    branch = WBranch(branch)
    u = float(u)
    if math.isnan(u) or u < _BRANCH_GRACE:
        raise DomainError(f"lambert_w undefined for u={u!r} (< -1/e)")
    if branch is WBranch.MINUS_ONE and not u < 0.0:
        raise DomainError(f"W_-1 requires -1/e <= u < 0, got {u!r}")
    if math.isinf(u):
        raise DomainError("lambert_w requires a finite argument")

    if u <= NEG_INV_E:
        return -1.0

    dist = 2.0 * _branch_distance(u)
    if dist < 0.5:
        p = math.sqrt(max(dist, 0.0))
        if branch is WBranch.MINUS_ONE:
            p = -p
        t = _branch_point_series(p)
        if abs(p) < 1e-4:
            return t
        return _halley(t, u)

    if branch is WBranch.PRINCIPAL:
        if u == 0.0:
            return 0.0
        if u > math.e:
            lu = math.log(u)
            return _newton_log(lu - math.log(lu), lu, 1.0)
        return _halley(math.log1p(u) if u > 0 else u, u)

    l1 = math.log(-u)
    l2 = math.log(-l1)
    return _newton_log(l1 - l2 + l2 / l1, l1, -1.0)


def v_minus_1_minus_ln_v(v: float) -> float:
    """``v - 1 - ln v`` without cancellation near ``v = 1``."""
    if not v > 0:
        raise DomainError(f"v must be positive, got {v!r}")
    x = v - 1.0
    if abs(x) < _SERIES_CUT:
        # sum_{k>=2} (-1)^k x^k / k
        return math.fsum((-1) ** k * x**k / k for k in range(2, 12))
    return x - math.log(v)


def h_log1p(x: float) -> float:
    """``(1+x) ln(1+x) - x`` for ``x > -1``, accurate for tiny ``x``."""
    if not x > -1.0:
        raise DomainError(f"need x > -1, got {x!r}")
    if abs(x) < _SERIES_CUT:
        # sum_{k>=2} (-1)^k x^k / (k(k-1))
        return math.fsum((-1) ** k * x**k / (k * (k - 1)) for k in range(2, 12))
    return (1.0 + x) * math.log1p(x) - x


def h_convex(r: float) -> float:
    """``h(r) = 1 - r + r ln r``; convex, zero only at ``r = 1``."""
    if not r > 0:
        raise DomainError(f"r must be positive, got {r!r}")
    if abs(r - 1.0) < _SERIES_CUT:
        return h_log1p(r - 1.0)
    return 1.0 - r + r * math.log(r)


def expm1_minus_x(x: float) -> float:
    """``e^x - 1 - x``; equals ``v - 1 - ln v`` at ``v = e^x``."""
    if abs(x) < _SERIES_CUT:
        return math.fsum(x**k / math.factorial(k) for k in range(2, 10))
    return math.expm1(x) - x
