"""The ten acceptance criteria, each at its stated tolerance.

Every test records one PASS/FAIL line (shown in the pytest terminal summary,
or printed directly when this file is run as a script).
"""
import math
import time

import numpy as np
import pytest

from amgm_tails.applications import (
    bh_bound, bh_improved, p1, p2, p2_gap, p3, p3_gap, p_opt, ratio_bound, t_star,
)
from amgm_tails.bounds import big_f, exact_tail_bound, limit_gap, right_tail_log, simple_tail_bound, z_lambert, z_root
from amgm_tails.cli import figure1_rows, figure2_rows
from amgm_tails.verification import (
    arithmetic_mean, dual_certificate, extremal_distribution, geometric_mean,
    oracle_check, tail_prob, two_point_sup,
)

from conftest import ACCEPTANCE_LINES, grid_cases


def report(n, ok, detail, seconds=None, limit=None):
    timing = "" if seconds is None else f" [{seconds:.2f}s]"
    if limit is not None and seconds is not None and seconds >= limit:
        ok = False
        detail += f"; runtime limit {limit}s exceeded"
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}{timing}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_c01_t_star():
    ts = t_star()
    ok = abs(ts - 1.585) <= 1e-3 and abs(p1(ts) - 0.284) <= 1e-3 and abs(p3(ts) - 0.284) <= 1e-3
    report(1, ok, f"t*={ts:.6f} p1(t*)={p1(ts):.6f} p3(t*)={p3(ts):.6f}")


def test_c02_root_correctness():
    t0 = time.perf_counter()
    max_f = max_w = 0.0
    cases = grid_cases()
    for mu, v, _ in cases:
        z = z_root(mu, v)
        max_f = max(max_f, abs(big_f(mu, v, z)))
        max_w = max(max_w, abs(z_lambert(mu, v) - z) / max(1.0, z))
    ok = len(cases) == 400 and max_f <= 1e-12 and max_w <= 1e-9
    report(2, ok, f"{len(cases)} cases, max|F|={max_f:.1e}, max|zW-z|/max(1,z)={max_w:.1e}",
           time.perf_counter() - t0, 1.0)


def test_c03_attainment():
    t0 = time.perf_counter()
    worst_a = worst_g = 0.0
    exact = True
    for mu, v, side in grid_cases():
        d = extremal_distribution(mu, v, side)
        worst_a = max(worst_a, abs(arithmetic_mean(d) - mu))
        worst_g = max(worst_g, abs(math.log(geometric_mean(d))))
        exact &= tail_prob(d, v, side) == exact_tail_bound(mu, v, side).p
    ok = worst_a <= 1e-10 and worst_g <= 1e-10 and exact
    report(3, ok, f"max|A-mu|={worst_a:.1e}, max|ln G|={worst_g:.1e}, tail == p_v exactly: {exact}",
           time.perf_counter() - t0, 1.0)


TIGHTNESS_CASES = [
    (1.01, 1.05, "right"), (1.01, 2.0, "right"), (1.01, 0.9, "left"), (1.01, 0.3, "left"),
    (1.1, 1.2, "right"), (1.1, 3.0, "right"), (1.1, 0.5, "left"), (1.1, 0.05, "left"),
    (2.0, 2.5, "right"), (2.0, 4.0, "right"), (2.0, 20.0, "right"), (2.0, 0.8, "left"), (2.0, 0.1, "left"),
    (5.0, 6.0, "right"), (5.0, 50.0, "right"), (5.0, 0.5, "left"),
    (10.0, 15.0, "right"), (10.0, 200.0, "right"), (10.0, 0.9, "left"), (10.0, 0.01, "left"),
]


def test_c04_oracle_tightness():
    t0 = time.perf_counter()
    errs = [abs(two_point_sup(mu, v, side, 2000) - exact_tail_bound(mu, v, side).p)
            for mu, v, side in TIGHTNESS_CASES]
    ok = len(errs) == 20 and max(errs) <= 1e-6
    report(4, ok, f"{len(errs)} cases, max|sup - p_v|={max(errs):.1e}", time.perf_counter() - t0, 30.0)


SOUNDNESS_CASES = [
    (2.0, 4.0, "right", 42), (1.1, 0.5, "left", 7), (1.01, 1.2, "right", 2024),
    (10.0, 0.2, "left", 99), (1.5, 30.0, "right", 12345),
]


def test_c05_oracle_soundness():
    t0 = time.perf_counter()
    reports = [oracle_check(mu, v, side, 10_000, seed) for mu, v, side, seed in SOUNDNESS_CASES]
    violations = sum(r.violations for r in reports)
    worst = max(r.max_tail / r.bound for r in reports)
    ok = violations == 0 and all(r.trials == 10_000 for r in reports)
    report(5, ok, f"5 cases x 10^4 draws, violations={violations}, max tail/bound={worst:.3f}",
           time.perf_counter() - t0, 30.0)


def test_c06_dual_certificate():
    t0 = time.perf_counter()
    xs = np.geomspace(1e-6, 1e6, 1000)
    worst = 0.0
    dominated = True
    for mu, v, _ in grid_cases():
        cert = dual_certificate(v, z_root(mu, v))
        worst = max(worst, abs(cert.g(cert.z)), abs(cert.dg(cert.z)), abs(cert.g(v) - 1))
        dominated &= bool(np.all(cert.g(xs) >= cert.indicator(xs) - 1e-10))
    ok = worst <= 1e-10 and dominated
    report(6, ok, f"max residual {worst:.1e}, g >= indicator on 1000-point grid: {dominated}",
           time.perf_counter() - t0, 5.0)


def test_c07_strict_improvement():
    # strictness is read from the cancellation-free gaps where values round equal
    t0 = time.perf_counter()
    ts = [0.01 * i for i in range(1, 400)] + [float(t) for t in np.linspace(4.0, 37.0, 200)]
    chain = all(p_opt(1.0, t) <= p2(t) <= p1(t) and p2_gap(t) > 0 for t in ts)
    chain &= all(p2(t) < p1(t) for t in ts if t < 4)
    p_ok = True
    for mu, v, side in grid_cases():
        if side == "right":
            p = exact_tail_bound(mu, v, side).p
            p_ok &= p <= mu / v and right_tail_log(math.log(mu), math.log(v)).markov_gap > 0
    ts_ = t_star()
    away = [t for t in ts if abs(t - ts_) > 1e-6]
    cross = all((p3_gap(t) > 0) == (t > ts_) for t in away)
    cross &= all((p3(t) < p1(t)) == (t > ts_) for t in away if t < 4)
    cross &= all(p3(t) <= p1(t) for t in away if t > ts_)
    ok = chain and p_ok and cross
    report(7, ok, f"p_opt<=p2<p1 on {len(ts)} t: {chain}; p_v<mu/v: {p_ok}; p3<p1 iff t>t*: {cross}",
           time.perf_counter() - t0, 10.0)


def test_c08_bh_ratio_regime():
    # true margins are ~e^{-C/c}; 1e-13 relative slack absorbs rounding
    lines, ok = [], True
    for C in (1.0, 3.0, 10.0):
        prev = math.inf
        for c in (0.1, 0.05, 0.02):
            y, b = c, 1.0
            sigma = math.sqrt(b * y * math.exp(-C / c))
            r = bh_improved(y, sigma, b) / bh_bound(y, sigma, b)
            ok &= r <= ratio_bound(c, C) * (1 + 1e-13) and r < prev
            prev = r
            if c == 0.1:
                lines.append(f"C={C:g}: {r:.4f}<={ratio_bound(c, C):.4f}")
    report(8, ok, "c=0.1 " + ", ".join(lines) + "; decreasing in c")


def test_c09_asymptotic_gap():
    gaps = [abs(limit_gap(1 + 10.0**-k, 1 + 3 * 10 ** (-k / 2), "right")) for k in range(4, 13)]
    ok = gaps[0] / gaps[-1] >= 10 and gaps[-1] <= 1e-3
    report(9, ok, f"gap k=4: {gaps[0]:.2e}, k=12: {gaps[-1]:.2e}")


def test_c10_figure_data():
    t0 = time.perf_counter()
    ok = True
    for mu in (1.1, 1.01):
        for r in figure1_rows(mu):
            if 1 <= r["v"] <= mu:
                ok &= r["p"] == 1.0
            if r["nontrivial"]:
                ok &= r["p"] <= r["q"]
    rows = figure2_rows(6.0)
    ok &= all(r["p2_ratio"] < 1 and r["p_opt_ratio"] <= r["p2_ratio"] for r in rows)
    # first downward crossing of p3/p1 through 1, linearly interpolated
    cross = None
    for a, b in zip(rows, rows[1:]):
        if a["p3_ratio"] >= 1 > b["p3_ratio"]:
            cross = a["t"] + (a["p3_ratio"] - 1) / (a["p3_ratio"] - b["p3_ratio"]) * (b["t"] - a["t"])
            break
    ok &= cross is not None and abs(cross - t_star()) <= 0.005
    report(10, ok, f"figure1 mu=1.1,1.01 and figure2 sigma=6 checks hold; p3/p1 crosses 1 at t={cross:.4f}",
           time.perf_counter() - t0, 30.0)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
