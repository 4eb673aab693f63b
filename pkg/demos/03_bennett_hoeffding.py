"""
Improving Bennett-Hoeffding when summands are truncated
=======================================================

Summands bounded above by b, variance sigma^2.  When sigma^2 is tiny compared
to b*y (heavy truncation) the improved bound can be many times smaller than
the classical one.
"""
import math

from amgm_tails import bh_bound, bh_improved, bh_lambda, ratio_bound

print("y=1, sigma=1, b=1:")
print("  lambda* =", bh_lambda(1, 1, 1))
print("  classical", bh_bound(1, 1, 1), " improved", bh_improved(1, 1, 1), "(no gain here)")

# Regime c = y/b small, sigma^2 = b*y*exp(-C/c): the ratio is pinned at
# (1 - e^{-c}) e^C / (e^C - 1 - C), roughly c for large C.
print(f"\n{'c':>6} {'C':>4} {'improved/classical':>20} {'ratio_bound':>12}")
for C in (1.0, 3.0, 10.0):
    for c in (0.1, 0.05, 0.02):
        y, b = c, 1.0
        sigma = math.sqrt(b * y * math.exp(-C / c))
        r = bh_improved(y, sigma, b) / bh_bound(y, sigma, b)
        print(f"{c:6.2f} {C:4.0f} {r:20.6f} {ratio_bound(c, C):12.6f}")
