"""Exact tail bounds for a positive random variable normalized by its geometric mean.

Given only ``mu = A_X / G_X > 1``, :func:`exact_tail_bound` returns the sharp
bound on ``P(X/G_X >= v)`` or ``P(X/G_X <= v)``.  The :mod:`applications`
module turns it into improved Markov, sub-Gaussian and Bennett-Hoeffding
bounds, and :mod:`verification` checks it independently.
"""
from .applications import (
    BHInput,
    SubGaussianInput,
    bh_bound,
    bh_improved,
    bh_lambda,
    cantelli_bound,
    chebyshev_bound,
    markov_bound,
    p1,
    p2,
    p2_gap,
    p3,
    p3_gap,
    p_opt,
    ratio_bound,
    t_star,
)
from .bounds import (
    BoundRegion,
    ExactBoundResult,
    MeanRatio,
    TailSide,
    big_f,
    exact_tail_bound,
    hat_z,
    limit_gap,
    right_tail_log,
    simple_tail_bound,
    z_lambert,
    z_root,
)
from .errors import *  # noqa: F401,F403
from .special import WBranch, h_convex, lambert_w, v_minus_1_minus_ln_v

__version__ = "0.1.0"
