"""Independent evidence for the exact bounds.

Three checks, each sharing as little code with :mod:`amgm_tails.bounds` as
possible:

* the two-point witness on ``{v, z_v}`` reproduces ``mu`` and attains ``p_v``;
* the convex certificate ``g(x) = a x - b ln x + c`` dominates the tail
  indicator, and ``E g(X) = a mu + c`` is the bound;
* brute force over random feasible laws (soundness) and over all two-point
  laws (tightness).

Random draws use numpy's PCG64 generator seeded through ``SeedSequence``;
trial ``i`` of a run with seed ``s`` uses the entropy ``(s, i)``, so any single
trial can be replayed on its own.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from typing import NamedTuple, Sequence, Union

import numpy as np

from .bounds import BoundRegion, MuLike, TailSide, _mu, classify, exact_tail_bound
from .errors import DomainError, GenerationFailure, RegionError
from .numerics import Bracket, find_root_bracketed
from .special import h_convex

__all__ = [
    "DiscreteDistribution",
    "CertificateCoefficients",
    "OracleReport",
    "TwoPointOptimum",
    "arithmetic_mean",
    "geometric_mean",
    "tail_prob",
    "extremal_distribution",
    "dual_certificate",
    "random_feasible_distribution",
    "oracle_check",
    "two_point_search",
    "two_point_sup",
]

TAIL_RTOL = 1e-12
VIOLATION_TOL = 1e-12
GENERATION_CAP = 10_000
_SHRINK = 0.9

Seed = Union[int, Sequence[int]]


@dataclass(frozen=True)
class DiscreteDistribution:
    atoms: np.ndarray
    probs: np.ndarray

    def __post_init__(self):
        atoms = np.asarray(self.atoms, dtype=float).ravel()
        probs = np.asarray(self.probs, dtype=float).ravel()
        if atoms.shape != probs.shape or atoms.size == 0:
            raise DomainError("atoms and probs must be non-empty and of equal length")
        if not np.all(atoms > 0) or not np.all(np.isfinite(atoms)):
            raise DomainError("atoms must be finite and positive")
        if not np.all(probs >= 0):
            raise DomainError("probabilities must be nonnegative")
        if abs(math.fsum(probs) - 1.0) > 1e-12:
            raise DomainError(f"probabilities sum to {math.fsum(probs)!r}, not 1")
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "probs", probs)

    @classmethod
    def uniform(cls, atoms) -> "DiscreteDistribution":
        atoms = np.asarray(atoms, dtype=float)
        return cls(atoms, np.full(atoms.size, 1.0 / atoms.size))


def arithmetic_mean(d: DiscreteDistribution) -> float:
    return math.fsum(d.probs * d.atoms)


def _log_geometric_mean(d: DiscreteDistribution) -> float:
    return math.fsum(d.probs * np.log(d.atoms))


def geometric_mean(d: DiscreteDistribution) -> float:
    return math.exp(_log_geometric_mean(d))


def tail_prob(d: DiscreteDistribution, v: float, side: TailSide, rtol: float = TAIL_RTOL) -> float:
    """``P(X/G_X >= v)`` or ``P(X/G_X <= v)``, events inclusive.

    Atoms within relative distance ``rtol`` of the threshold count as hitting
    it, so a witness with an atom at ``v`` is not lost to rounding in ``G_X``.
    """
    side = TailSide(side)
    if v <= 0:
        return 1.0 if side is TailSide.RIGHT else 0.0
    ln_ratio = np.log(d.atoms) - _log_geometric_mean(d)
    lv = math.log(v)
    if side is TailSide.RIGHT:
        hit = ln_ratio >= lv - rtol
    else:
        hit = ln_ratio <= lv + rtol
    return min(1.0, math.fsum(d.probs[hit]))


def _require_nontrivial(mu: float, v: float, side: TailSide):
    if classify(mu, v, side) is not BoundRegion.NONTRIVIAL:
        raise RegionError(f"v={v!r} is not in the nontrivial {side.value} region for mu={mu!r}")


def extremal_distribution(mu: MuLike, v: float, side: TailSide) -> DiscreteDistribution:
    """Two-point law ``P(X = v) = p_v = 1 - P(X = z_v)`` attaining the bound."""
    mu = _mu(mu)
    side = TailSide(side)
    _require_nontrivial(mu, v, side)
    res = exact_tail_bound(mu, v, side)
    return DiscreteDistribution([v, res.z], [res.p, 1.0 - res.p])


@dataclass(frozen=True)
class CertificateCoefficients:
    """``g(x) = a x - b_coef ln x + c_coef``, tangent to 0 at ``z`` and equal to 1 at ``v``."""

    a: float
    b_coef: float
    c_coef: float
    z: float
    v: float

    def g(self, x):
        return self.a * x - self.b_coef * np.log(x) + self.c_coef

    def dg(self, x):
        return self.a - self.b_coef / x

    def indicator(self, x):
        # the event g majorizes: {x >= v} when z < v, {x <= v} when z > v
        x = np.asarray(x, dtype=float)
        return (x >= self.v if self.z < self.v else x <= self.v).astype(float)

    def expectation_bound(self, mu: float) -> float:
        """``E g(X)`` for ``E X = mu``, ``E ln X = 0``."""
        return self.a * mu + self.c_coef


def dual_certificate(v: float, z: float) -> CertificateCoefficients:
    if not (v > 0 and z > 0):
        raise DomainError(f"need v > 0 and z > 0, got v={v!r}, z={z!r}")
    if z == v:
        raise DomainError("certificate undefined for z == v")
    a = (1.0 / v) / h_convex(z / v)
    b = a * z
    return CertificateCoefficients(a, b, b * (math.log(z) - 1.0), z, v)


def random_feasible_distribution(seed: Seed, mu: MuLike, n: int) -> DiscreteDistribution:
    """Random law with ``G = 1`` and ``A <= mu``, deterministic in ``seed``.

    Weights are Dirichlet with a concentration drawn log-uniformly from
    ``[0.05, 2]`` (small values give lopsided laws).  Log-atoms are uniform on
    ``[-s, s]`` and then shifted to weighted mean zero; ``s`` starts at a random
    fraction of ``1 + 3 arccosh(mu)`` and shrinks by 10% after each rejection.
    """
    mu = _mu(mu)
    if n < 2:
        raise DomainError(f"need n >= 2 atoms, got {n}")
    rng = np.random.default_rng(seed)
    alpha = 10.0 ** rng.uniform(math.log10(0.05), math.log10(2.0))
    s = (1.0 + 3.0 * math.acosh(mu)) * (1.0 - rng.random())
    for _ in range(GENERATION_CAP):
        probs = rng.dirichlet(np.full(n, alpha))
        if not np.all(np.isfinite(probs)):
            continue
        probs /= probs.sum()
        logs = rng.uniform(-s, s, n)
        logs -= math.fsum(probs * logs)
        atoms = np.exp(logs)
        if math.fsum(probs * atoms) <= mu and np.all(atoms > 0):
            return DiscreteDistribution(atoms, probs)
        s *= _SHRINK
    raise GenerationFailure(f"no feasible draw in {GENERATION_CAP} tries for mu={mu!r}")


@dataclass
class OracleReport:
    mu: float
    v: float
    side: str
    trials: int
    seed: int
    violations: int
    max_tail: float
    bound: float
    extras: dict = field(default_factory=dict, repr=False)

    def to_dict(self) -> dict:
        d = asdict(self)
        d.update(d.pop("extras"))
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def oracle_check(
    mu: MuLike,
    v: float,
    side: TailSide,
    trials: int,
    seed: int,
    include_witness: bool = False,
    bound: float | None = None,
) -> OracleReport:
    """Sample feasible laws and count those whose tail exceeds the bound.

    Trial ``i`` uses ``2 + i % 7`` atoms.  ``bound`` overrides the computed
    exact bound (used to check that the oracle can fail).
    """
    mu = _mu(mu)
    side = TailSide(side)
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials}")
    _require_nontrivial(mu, v, side)
    if bound is None:
        bound = exact_tail_bound(mu, v, side).p

    violations = 0
    max_tail = 0.0
    samples = (random_feasible_distribution((seed, i), mu, 2 + i % 7) for i in range(trials))
    if include_witness:
        samples = _chain([extremal_distribution(mu, v, side)], samples)
    for d in samples:
        tp = tail_prob(d, v, side)
        max_tail = max(max_tail, tp)
        if tp > bound + VIOLATION_TOL:
            violations += 1
    return OracleReport(mu, v, side.value, trials, seed, violations, max_tail, bound)


def _chain(first, rest):
    yield from first
    yield from rest


class TwoPointOptimum(NamedTuple):
    sup: float
    x1: float
    x2: float
    p: float


def _two_point_mean(p, ln_x1, x1):
    # A(p) for atoms {x1, x2} with probs {p, 1-p} and G = 1
    with np.errstate(over="ignore", invalid="ignore"):
        ln_x2 = -p * ln_x1 / (1.0 - p)
        return p * x1 + (1.0 - p) * np.exp(ln_x2)


def two_point_search(mu: MuLike, v: float, side: TailSide, grid_size: int = 2000) -> TwoPointOptimum:
    """Brute-force sup of the tail over two-point laws with ``G = 1`` and ``A = mu``.

    Each law is indexed by its first atom ``x1`` (on a log grid that always
    contains the threshold ``v``, where the tail jumps) and its weight ``p``;
    the second atom is fixed by ``G = 1`` and ``p`` is then solved from
    ``A(p) = mu`` by scanning for sign changes and refining each bracket.
    """
    mu = _mu(mu)
    side = TailSide(side)
    _require_nontrivial(mu, v, side)
    span = 2.0 * max(abs(math.log(v)), math.log(mu), 1.0)
    x1s = np.unique(np.append(np.geomspace(math.exp(-span), math.exp(span), grid_size), v))
    x1s = x1s[np.abs(np.log(x1s)) > 1e-12]
    ps = 1.0 / (1.0 + np.exp(-np.linspace(-30.0, 30.0, 601)))

    ln_x1s = np.log(x1s)
    excess = _two_point_mean(ps[None, :], ln_x1s[:, None], x1s[:, None]) - mu
    sign = np.sign(excess)
    best = TwoPointOptimum(0.0, math.nan, math.nan, math.nan)
    for i, j in zip(*np.nonzero(sign[:, :-1] * sign[:, 1:] < 0)):
        x1, ln_x1 = float(x1s[i]), float(ln_x1s[i])

        def f(p, x1=x1, ln_x1=ln_x1):
            return float(_two_point_mean(p, ln_x1, x1)) - mu

        br = Bracket(float(ps[j]), float(ps[j + 1]), float(excess[i, j]), float(excess[i, j + 1]))
        p = find_root_bracketed(f, br, tol_x=0.0, tol_f=0.0).root
        ln_x2 = -p * ln_x1 / (1.0 - p)
        if not -745.0 < ln_x2 < 709.0:
            continue  # a valid law, but its second atom is not a positive double
        x2 = math.exp(ln_x2)
        tp = tail_prob(DiscreteDistribution([x1, x2], [p, 1.0 - p]), v, side)
        if tp > best.sup:
            best = TwoPointOptimum(tp, x1, x2, p)
    return best


def two_point_sup(mu: MuLike, v: float, side: TailSide, grid_size: int = 2000) -> float:
    return two_point_search(mu, v, side, grid_size).sup
