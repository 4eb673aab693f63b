"""Classical baselines and the improved sub-Gaussian and Bennett-Hoeffding bounds.

Every improved bound here is an instance of the exact (or simple) tail bound
for ``X = exp(lambda*Y)``, whose geometric mean is 1 when ``E Y = 0``.  Large
exponents are handled in log coordinates throughout, so ``mu`` and ``v`` are
never formed when they would overflow.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .bounds import MuLike, _mu, right_tail_log
from .errors import DomainError
from .numerics import minimize_scalar
from .special import WBranch, expm1_minus_x, h_log1p, lambert_w

__all__ = [
    "SubGaussianInput",
    "BHInput",
    "markov_bound",
    "cantelli_bound",
    "chebyshev_bound",
    "p1",
    "p2",
    "p2_gap",
    "p3",
    "p3_gap",
    "t_star",
    "p_opt",
    "bh_lambda",
    "bh_bound",
    "bh_improved",
    "ratio_bound",
]

_LOG_DOMAIN_T2 = 500.0
_OPT_GRID = 512
_OPT_REACH = 12.0


def _positive(**kw):
    for name, val in kw.items():
        if not (val > 0 and math.isfinite(val)):
            raise DomainError(f"{name} must be a finite positive number, got {val!r}")


@dataclass(frozen=True)
class SubGaussianInput:
    sigma: float
    y: float

    def __post_init__(self):
        _positive(sigma=self.sigma, y=self.y)

    @property
    def t(self) -> float:
        return self.y / self.sigma


@dataclass(frozen=True)
class BHInput:
    y: float
    sigma: float
    b: float

    def __post_init__(self):
        _positive(y=self.y, sigma=self.sigma, b=self.b)

    @property
    def c(self) -> float:
        return self.y / self.b

    @property
    def C_proxy(self) -> float:
        return self.y / self.b * math.log1p(self.b * self.y / self.sigma**2)


def markov_bound(mu: MuLike, v: float) -> float:
    """``min(1, mu/v)``, the Markov bound on ``P(X/G_X >= v)``."""
    mu = _mu(mu)
    _positive(v=v)
    return min(1.0, mu / v)


def cantelli_bound(sigma2: float, eps: float) -> float:
    _positive(sigma2=sigma2, eps=eps)
    return sigma2 / (sigma2 + eps * eps)


def chebyshev_bound(sigma2: float, eps: float) -> float:
    _positive(sigma2=sigma2, eps=eps)
    return min(1.0, sigma2 / (eps * eps))


# -- sub-Gaussian family ------------------------------------------------------

def p1(t: float) -> float:
    """Optimized Chernoff bound ``exp(-t^2/2)`` for a sub-Gaussian sum."""
    return math.exp(-0.5 * t * t)


def p2(t: float) -> float:
    """Exact bound at the Chernoff-optimal ``lambda``: ``p`` with ``mu = e^{t^2/2}``, ``v = e^{t^2}``."""
    _positive(t=t)
    # p1 * (1 - gap): mu/v == p1 here, and this form can never round above p1
    return p1(t) * (1.0 - p2_gap(t))


def p2_gap(t: float) -> float:
    """Relative improvement ``1 - p2(t)/p1(t)``, accurate even where both round equal."""
    _positive(t=t)
    s = t * t
    return right_tail_log(0.5 * s, s).markov_gap


def p3(t: float) -> float:
    """Simple-bound version: ``min(1, (e^{t^2/2} - 1) / (e^{t^2} - 1 - t^2))``."""
    # via the gap, so p3 never rounds above p1 once t > t_star
    return min(1.0, p1(t) * (1.0 - p3_gap(t)))


def p3_gap(t: float) -> float:
    """Unclamped ``1 - p3/p1 = (e^{t^2/2} - 1 - t^2) / (e^{t^2} - 1 - t^2)``; positive iff ``t > t_star``."""
    _positive(t=t)
    s = t * t
    if s > _LOG_DOMAIN_T2:
        return math.exp(-0.5 * s + math.log1p(-(1.0 + s) * math.exp(-0.5 * s))
                        - math.log1p(-(1.0 + s) * math.exp(-s)))
    return (math.expm1(0.5 * s) - s) / expm1_minus_x(s)


@functools.lru_cache(maxsize=None)
def t_star() -> float:
    """Crossover where ``p3 == p1``: ``sqrt(-2 W_{-1}(-1/(2 sqrt e)) - 1)``."""
    w = lambert_w(WBranch.MINUS_ONE, -0.5 / math.sqrt(math.e))
    return math.sqrt(-2.0 * w - 1.0)


def _opt_objective(sigma: float, y: float):
    s2 = sigma * sigma

    def objective(log_lam: float) -> float:
        lam = math.exp(log_lam)
        a = 0.5 * lam * lam * s2
        b = lam * y
        if not a < b:
            return 1.0
        return right_tail_log(a, b).p

    return objective


def p_opt(sigma: float, y: float) -> float:
    """``inf`` over ``lambda > 0`` of the exact bound with ``mu = e^{lambda^2 sigma^2/2}``, ``v = e^{lambda y}``.

    Searched over ``ln lambda`` around the Chernoff point ``y/sigma^2``.  The
    objective is not known to be unimodal, so a golden-section run is checked
    against a grid scan; the result never exceeds ``p2(y/sigma)``.

    As ``lambda -> 0`` the objective tends to the Cantelli value
    ``sigma^2/(sigma^2 + y^2)`` (from above when ``y < sigma``), which is then
    the infimum without being attained.  The window stops at
    ``lambda = e^{-12} y/sigma^2``, below which the root equation cancels
    badly, and the limit is included as a candidate instead.
    """
    _positive(sigma=sigma, y=y)
    obj = _opt_objective(sigma, y)
    centre = math.log(y / sigma**2)
    lo = centre - _OPT_REACH
    hi = min(math.log(2.0 * y / sigma**2) - 1e-9, centre + 6.0)

    _, best = minimize_scalar(obj, lo, hi, tol=1e-10)
    grid = np.linspace(lo, hi, _OPT_GRID)
    vals = [obj(s) for s in grid]
    i = int(np.argmin(vals))
    if vals[i] < best:
        _, best = minimize_scalar(obj, grid[max(i - 1, 0)], grid[min(i + 1, _OPT_GRID - 1)], tol=1e-10)
        best = min(best, vals[i])
    return min(best, p2(y / sigma), cantelli_bound(sigma * sigma, y))


# -- Bennett-Hoeffding family -------------------------------------------------

def bh_lambda(y: float, sigma: float, b: float) -> float:
    """Minimizing ``lambda`` of the Bennett exponent: ``ln(1 + b y / sigma^2) / b``."""
    _positive(y=y, sigma=sigma, b=b)
    return math.log1p(b * y / sigma**2) / b


def _one_minus_log1p_over(x: float) -> float:
    """``1 - ln(1+x)/x``, series for small ``x``."""
    if x < 1e-3:
        return math.fsum((-1) ** k * x ** (k - 1) / k for k in range(2, 12))
    return 1.0 - math.log1p(x) / x


def bh_bound(y: float, sigma: float, b: float) -> float:
    """Bennett-Hoeffding bound ``exp(-(sigma^2/b^2) h(by/sigma^2))``, ``h(x) = (1+x)ln(1+x) - x``."""
    _positive(y=y, sigma=sigma, b=b)
    x = b * y / sigma**2
    return math.exp(-(y / b) * h_log1p(x) / x)


def _log_expm1(m: float) -> float:
    return m + math.log(-math.expm1(-m)) if m > 1.0 else math.log(math.expm1(m))


def _log_expm1_minus_x(L: float) -> float:
    if L > 1.0:
        return L + math.log1p(-(1.0 + L) * math.exp(-L))
    return math.log(expm1_minus_x(L))


def bh_improved(y: float, sigma: float, b: float) -> float:
    """``min(1, (mu* - 1) / (v* - 1 - ln v*))`` at the Bennett ``lambda``."""
    _positive(y=y, sigma=sigma, b=b)
    c = y / b
    x = b * y / sigma**2
    log_mu = c * _one_minus_log1p_over(x)
    log_v = c * math.log1p(x)
    if not (log_mu > 0 and log_v > 0):
        # both underflowed: ratio ~ 1/(c x) is huge
        return 1.0
    return math.exp(min(_log_expm1(log_mu) - _log_expm1_minus_x(log_v), 0.0))


def ratio_bound(c: float, C: float) -> float:
    """``(e^c - 1)/e^c * e^C / (e^C - 1 - C)``, bounding ``bh_improved / bh_bound``."""
    _positive(c=c, C=C)
    return -math.expm1(-c) / -math.expm1(math.log1p(C) - C)
