"""Command-line front end.

Usage:
    amgm-tails bound --mu 2 --v 4 --side right
    amgm-tails subgaussian --t 2
    amgm-tails bh --y 1 --sigma 1 --b 1
    amgm-tails figure1 --mu 1.1 --format csv
    amgm-tails figure2 --sigma 6
    amgm-tails verify --mu 2 --v 4 --side right --trials 10000 --seed 42
    amgm-tails compare --mu 2 --v 4

Exit status: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import csv
import io
import json
import math
import sys

import click

from . import applications as app
from .bounds import BoundRegion, MeanRatio, TailSide, exact_tail_bound, simple_tail_bound
from .errors import BoundsError
from .verification import oracle_check, two_point_sup

__all__ = [
    "main",
    "bound_record",
    "subgaussian_record",
    "bh_record",
    "figure1_rows",
    "figure2_rows",
    "verify_record",
    "compare_rows",
]

SUP_TOL = 1e-6
P3_PLOT_CUTOFF = 1.08


# -- record builders (pure; the commands only format these) -------------------

def bound_record(mu: float, v: float, side: str) -> dict:
    side = TailSide(side)
    res = exact_tail_bound(mu, v, side)
    rec = {
        "mu": mu,
        "v": v,
        "side": side.value,
        "region": res.region.value,
        "z": res.z,
        "p": res.p,
    }
    if res.near_degenerate:
        rec["near_degenerate"] = True
    if (side is TailSide.RIGHT and v >= 1) or (side is TailSide.LEFT and 0 < v <= mu):
        rec["q"] = simple_tail_bound(mu, v, side)
    if side is TailSide.RIGHT and v > 0:
        rec["markov"] = app.markov_bound(mu, v)
    return rec


def subgaussian_record(t: float | None = None, sigma: float | None = None, y: float | None = None) -> dict:
    if t is None:
        t = y / sigma
    rec = {"t": t, "p1": app.p1(t), "p2": app.p2(t), "p3": app.p3(t)}
    if sigma is not None and y is not None:
        rec = {"sigma": sigma, "y": y, **rec, "p_opt": app.p_opt(sigma, y)}
    return rec


def bh_record(y: float, sigma: float, b: float) -> dict:
    p_bh = app.bh_bound(y, sigma, b)
    p_bh1 = app.bh_improved(y, sigma, b)
    return {
        "y": y,
        "sigma": sigma,
        "b": b,
        "lambda_star": app.bh_lambda(y, sigma, b),
        "p_bh": p_bh,
        "p_bh1": p_bh1,
        "ratio_to_bh": p_bh1 / p_bh if p_bh > 0 else None,
    }


def _grid(lo: float, hi: float, step: float) -> list[float]:
    # half-open [lo, hi), points lo + i*step
    n = math.ceil((hi - lo) / step)
    pts = [lo + i * step for i in range(n)]
    return [x for x in pts if x < hi]


def figure1_rows(mu: float, vmin: float = 0.01, vmax: float = 3.0, step: float = 0.01) -> list[dict]:
    """``(v, p_v, q_v)`` over the grid, with ``p_v := 1`` on ``[1, mu]``."""
    MeanRatio(mu)
    rows = []
    for v in _grid(vmin, vmax, step):
        if v < 1:
            res = exact_tail_bound(mu, v, TailSide.LEFT)
        elif v <= mu:
            res = None
        else:
            res = exact_tail_bound(mu, v, TailSide.RIGHT)
        p = 1.0 if res is None else res.p
        nontrivial = res is not None and res.region is BoundRegion.NONTRIVIAL
        q = simple_tail_bound(mu, v, TailSide.LEFT if v <= mu else TailSide.RIGHT)
        rows.append({"v": v, "p": p, "q": q, "nontrivial": nontrivial})
    return rows


def figure2_rows(sigma: float = 6.0, tmin: float = 0.01, tmax: float = 4.0, step: float = 0.01) -> list[dict]:
    """``(t, P2/P1, P3/P1, Popt(sigma, sigma t)/P1)`` over the grid."""
    rows = []
    for t in _grid(tmin, tmax, step):
        base = app.p1(t)
        r3 = app.p3(t) / base
        rows.append({
            "t": t,
            "p2_ratio": app.p2(t) / base,
            "p3_ratio": r3,
            "p3_plotted": r3 < P3_PLOT_CUTOFF,
            "p_opt_ratio": app.p_opt(sigma, sigma * t) / base,
        })
    return rows


def verify_record(mu: float, v: float, side: str, trials: int, seed: int,
                  bound_override: float | None = None, grid_size: int = 2000) -> dict:
    report = oracle_check(mu, v, side, trials, seed, include_witness=True, bound=bound_override)
    sup = two_point_sup(mu, v, side, grid_size)
    report.extras["two_point_sup"] = sup
    report.extras["sup_matches"] = abs(sup - report.bound) <= SUP_TOL
    report.extras["passed"] = report.violations == 0 and report.extras["sup_matches"]
    return report.to_dict()


def compare_rows(mu=None, v=None, side="right", t=None, sigma=None, y=None, b=None) -> list[dict]:
    """All bounds applicable to one query point, as ``(bound, value)`` rows."""
    rows = []
    if mu is not None and v is not None:
        rec = bound_record(mu, v, side)
        for key in ("p", "q", "markov"):
            if key in rec:
                rows.append({"bound": {"p": "exact", "q": "simple"}.get(key, key), "value": rec[key]})
    if b is not None and y is not None and sigma is not None:
        rec = bh_record(y, sigma, b)
        rows += [{"bound": k, "value": rec[k]} for k in ("p_bh", "p_bh1")]
    elif t is not None or (sigma is not None and y is not None):
        rec = subgaussian_record(t, sigma, y)
        rows += [{"bound": k, "value": rec[k]} for k in ("p1", "p2", "p3", "p_opt") if k in rec]
    return rows


# -- output -------------------------------------------------------------------

def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    return repr(x) if isinstance(x, float) else str(x)


def _emit(data, fmt: str):
    if fmt == "json":
        click.echo(json.dumps(data))
        return
    rows = data if isinstance(data, list) else [data]
    fields = []
    for r in rows:
        fields += [k for k in r if k not in fields]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(fields)
    for r in rows:
        w.writerow([_fmt(r.get(k)) for k in fields])
    click.echo(buf.getvalue(), nl=False)


def _positive(ctx, param, value):
    if value is not None and not (value > 0 and math.isfinite(value)):
        raise click.BadParameter(f"must be a finite positive number, got {value}")
    return value


def _mean_ratio(ctx, param, value):
    if value is not None and not (value > 1 and math.isfinite(value)):
        raise click.BadParameter(f"mean ratio must exceed 1, got {value}")
    return value


fmt_option = click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
side_option = click.option("--side", type=click.Choice(["right", "left"]), default="right", show_default=True)


def _usage(fn, *args, **kw):
    try:
        return fn(*args, **kw)
    except BoundsError as exc:
        raise click.UsageError(str(exc)) from exc


@click.group()
def main():
    """Exact tail bounds for X/G_X from the ratio of arithmetic to geometric mean."""


@main.command()
@click.option("--mu", type=float, required=True, callback=_mean_ratio)
@click.option("--v", type=float, required=True)
@side_option
@fmt_option
def bound(mu, v, side, fmt):
    """Exact bound p_v, simple bound q_v and Markov bound at one point."""
    _emit(_usage(bound_record, mu, v, side), fmt)


@main.command()
@click.option("--t", type=float, callback=_positive)
@click.option("--sigma", type=float, callback=_positive)
@click.option("--y", type=float, callback=_positive)
@fmt_option
def subgaussian(t, sigma, y, fmt):
    """Sub-Gaussian bounds P1, P2, P3 (and P_opt when --sigma/--y are given)."""
    if t is None and (sigma is None or y is None):
        raise click.UsageError("give --t, or both --sigma and --y")
    if t is not None and sigma is not None and y is not None and not math.isclose(t, y / sigma):
        raise click.UsageError("--t disagrees with --y/--sigma")
    _emit(_usage(subgaussian_record, t, sigma, y), fmt)


@main.command()
@click.option("--y", type=float, required=True, callback=_positive)
@click.option("--sigma", type=float, required=True, callback=_positive)
@click.option("--b", type=float, required=True, callback=_positive)
@fmt_option
def bh(y, sigma, b, fmt):
    """Bennett-Hoeffding bound and its improvement."""
    _emit(_usage(bh_record, y, sigma, b), fmt)


def _check_range(lo, hi, step):
    if not (0 < lo < hi):
        raise click.UsageError(f"need 0 < min < max, got [{lo}, {hi})")
    if not step > 0:
        raise click.UsageError(f"step must be positive, got {step}")


@main.command()
@click.option("--mu", type=float, required=True, callback=_mean_ratio)
@click.option("--vmin", type=float, default=0.01, show_default=True)
@click.option("--vmax", type=float, default=3.0, show_default=True)
@click.option("--step", type=float, default=0.01, show_default=True)
@fmt_option
def figure1(mu, vmin, vmax, step, fmt):
    """Table of (v, p_v, q_v)."""
    _check_range(vmin, vmax, step)
    _emit(_usage(figure1_rows, mu, vmin, vmax, step), fmt)


@main.command()
@click.option("--sigma", type=float, default=6.0, show_default=True, callback=_positive)
@click.option("--tmin", type=float, default=0.01, show_default=True)
@click.option("--tmax", type=float, default=4.0, show_default=True)
@click.option("--step", type=float, default=0.01, show_default=True)
@fmt_option
def figure2(sigma, tmin, tmax, step, fmt):
    """Table of sub-Gaussian bound ratios to P1."""
    _check_range(tmin, tmax, step)
    _emit(_usage(figure2_rows, sigma, tmin, tmax, step), fmt)


@main.command()
@click.option("--mu", type=float, required=True, callback=_mean_ratio)
@click.option("--v", type=float, required=True)
@side_option
@click.option("--trials", type=click.IntRange(min=1), default=10_000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--bound-override", type=float, default=None, hidden=True)
@fmt_option
@click.pass_context
def verify(ctx, mu, v, side, trials, seed, bound_override, fmt):
    """Oracle run: random feasible laws plus two-point brute force."""
    rec = _usage(verify_record, mu, v, side, trials, seed, bound_override)
    _emit(rec, fmt)
    if not rec["passed"]:
        ctx.exit(1)


@main.command()
@click.option("--mu", type=float, callback=_mean_ratio)
@click.option("--v", type=float)
@side_option
@click.option("--t", type=float, callback=_positive)
@click.option("--sigma", type=float, callback=_positive)
@click.option("--y", type=float, callback=_positive)
@click.option("--b", type=float, callback=_positive)
@fmt_option
def compare(mu, v, side, t, sigma, y, b, fmt):
    """All applicable bounds for one query point, side by side."""
    if (mu is None) != (v is None):
        raise click.UsageError("--mu and --v go together")
    rows = _usage(compare_rows, mu, v, side, t, sigma, y, b)
    if not rows:
        raise click.UsageError("nothing to compare: give --mu/--v, --t, --sigma/--y, or --y/--sigma/--b")
    _emit(rows, fmt)


if __name__ == "__main__":
    sys.exit(main())
