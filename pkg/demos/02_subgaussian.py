"""
Sharpening the sub-Gaussian tail bound
======================================

For a sum Y with E exp(lambda Y) <= exp(lambda^2 sigma^2 / 2), the familiar
Chernoff bound gives P(Y >= y) <= exp(-t^2/2) with t = y/sigma.  Applying the
exact AM-GM bound to X = exp(lambda Y) does strictly better.
"""
from amgm_tails import p1, p2, p2_gap, p3, p_opt, t_star

print(f"{'t':>5} {'P1':>11} {'P2/P1':>8} {'P3/P1':>8} {'Popt/P1':>8}")
for t in (0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5):
    base = p1(t)
    print(f"{t:5.2f} {base:11.4e} {p2(t) / base:8.4f} {p3(t) / base:8.4f} {p_opt(1.0, t) / base:8.4f}")

# %%
# P3 is the closed-form variant.  It beats P1 only past a crossover point,
# which has a Lambert W expression.
ts = t_star()
print(f"\ncrossover t* = {ts:.6f}, where P1 = P3 = {p1(ts):.6f}")

# %%
# Far in the tail P2 and P1 agree to every printed digit; the relative gain
# 1 - P2/P1 is still computed exactly.
for t in (5.0, 10.0, 20.0, 30.0):
    print(f"t={t:4.1f}  P1={p1(t):.3e}  1-P2/P1={p2_gap(t):.3e}")

# %%
# Small t: optimizing over lambda drives lambda to 0, where the bound turns
# into the one-sided Chebyshev (Cantelli) value 1/(1+t^2).
for t in (0.3, 0.6, 0.9):
    print(f"t={t}: Popt={p_opt(1.0, t):.6f}  1/(1+t^2)={1 / (1 + t * t):.6f}")
