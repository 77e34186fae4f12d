"""Radius tables for the pointwise-plus-tail functionals.

Replacing the constant |f(0)| by the value |f(z)| costs radius: the bound
|f(z)| + tail <= 1 holds only up to r_a = 1/(sqrt((1+a)^2+a^2)+1+a), and
only once a = |f(0)| clears the threshold 2 sqrt(3) - 3 does r_a fit under
the classical 1/3 cap.  The harmonic generalization adds a dilatation
bound k, with threshold alpha_k and radius r_{a,k}.
"""

import numpy as np

from bohrlab import (
    ANALYTIC_THRESHOLD_A,
    UNIVERSAL_RADIUS,
    quadratic_residual,
    theorem5_radius,
    theorem6_radius,
    theorem6_threshold,
)

print(f"admissibility threshold: {ANALYTIC_THRESHOLD_A:.10f}")
print(f"universal fallback radius (any a < 1): {UNIVERSAL_RADIUS:.10f}")

print()
print("=== analytic radius table ===")
print(f"{'a':>6} {'r_a':>12} {'under 1/3?':>11} {'quadratic residual':>20}")
for a in (0.0, 0.3, ANALYTIC_THRESHOLD_A, 0.6, 0.8, 1.0):
    res = theorem5_radius(a)
    print(f"{a:6.3f} {res.value:12.8f} {str(res.cap_binds):>11} {res.residual:20.2e}")

print()
print("=== harmonic thresholds and radii ===")
print(f"{'k':>6} {'alpha_k':>12} {'r at alpha_k':>13} {'r at a=0.9':>12}")
for k in (0.0, 0.25, 0.5, 0.75, 1.0):
    alpha = theorem6_threshold(k)
    at_alpha = theorem6_radius(alpha, k).value
    at_nine = theorem6_radius(0.9, k).value
    print(f"{k:6.2f} {alpha:12.8f} {at_alpha:13.8f} {at_nine:12.8f}")
print("at a = alpha_k the radius lands exactly on 1/3; larger a pushes it lower.")

print()
print("=== consistency checks ===")
a_grid = np.linspace(0, 0.99, 12)
gap = max(abs(theorem6_radius(float(a), 0.0).value - theorem5_radius(float(a)).value) for a in a_grid)
print(f"k=0 column reduces to the analytic radius: max gap {gap:.2e}")
a, k = 0.6, 0.5
r = theorem6_radius(a, k).value
print(f"admissibility quadratic signs around r_ak = {r:.8f}:"
      f" at r-0.01 -> {quadratic_residual('eq10', a, k, r - 0.01):+.4f},"
      f" at r -> {quadratic_residual('eq10', a, k, r):+.1e},"
      f" at r+0.01 -> {quadratic_residual('eq10', a, k, r + 0.01):+.4f}")
