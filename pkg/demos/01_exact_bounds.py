"""
Exact tail bounds from the AM-GM ratio
======================================

Suppose all we know about a positive random variable X is how far its
arithmetic mean sits above its geometric mean, mu = A_X / G_X.  How likely
can it be that X exceeds v times its geometric mean?
"""
import math

import numpy as np

from amgm_tails import exact_tail_bound, markov_bound, simple_tail_bound, z_lambert, z_root

mu = 2.0

# The sharp answer comes from one root of a transcendental equation.
# Bracketed root finding and the Lambert W closed form agree:
print(f"z_4 by root finding: {z_root(mu, 4.0):.15f}")
print(f"z_4 by Lambert W:    {z_lambert(mu, 4.0):.15f}")

# %%
# Right tail: the exact bound p_v against the closed-form q_v and Markov.
print(f"\n{'v':>6} {'exact p_v':>11} {'simple q_v':>11} {'markov':>9}")
for v in (2.5, 3.0, 4.0, 8.0, 20.0, 100.0):
    p = exact_tail_bound(mu, v, "right").p
    print(f"{v:6.1f} {p:11.6f} {simple_tail_bound(mu, v, 'right'):11.6f} {markov_bound(mu, v):9.6f}")

# %%
# Between 1 and mu nothing useful can be said: the bound is 1 and no law
# attains it.  Below 1 the left tail is bounded again.
print("\nregion at v=1.5 (right):", exact_tail_bound(mu, 1.5, "right").region.value)
for v in (0.9, 0.5, 0.1, 0.01):
    r = exact_tail_bound(mu, v, "left")
    print(f"P(X/G <= {v:<4}) <= {r.p:.6f}   (witness atoms {v} and {r.z:.4f})")

# %%
# Shrinking mu toward 1 concentrates X/G_X around 1; the bound at a fixed
# v drops accordingly.
for m in (1.1, 1.01, 1.001):
    print(f"mu={m:<6} p at v=1.2: {exact_tail_bound(m, 1.2, 'right').p:.3e}")

# %%
# A quick table suitable for plotting (same data as `amgm-tails figure1`).
vs = np.round(np.arange(0.05, 3.0, 0.25), 2)
row = [exact_tail_bound(1.1, float(v), "left" if v < 1 else "right").p if not 1 <= v <= 1.1 else 1.0
       for v in vs]
print("\nmu=1.1:", ", ".join(f"{v}:{p:.3f}" for v, p in zip(vs, row)))
print("log10 p at v=3:", round(math.log10(row[-1]), 3))
