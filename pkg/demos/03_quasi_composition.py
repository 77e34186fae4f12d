"""Majorant domination for multiplier-composition pairs.

f = phi * g(omega) with |phi| <= 1 and omega an inner function never beats
the majorant of g for r <= 1/3.  Both degenerate regimes (phi = 1, i.e.
plain composition; omega = z, i.e. pointwise domination) inherit the same
radius.  Construction cross-checks the coefficient identity
a_k = sum_{m+j=k} phi_m B_j on every build.
"""

import numpy as np

from bohrlab import (
    bohr_sum,
    bounded_from_spec,
    build_quasi_triple,
    draw_blaschke_spec,
    draw_polynomial,
    make_series,
    schwarz_from_spec,
)

rng = np.random.default_rng(11)
order = 64

g = draw_polynomial(rng, order, max_degree=6)
phi = bounded_from_spec(draw_blaschke_spec(rng), order)
omega = schwarz_from_spec(draw_blaschke_spec(rng), order=order)
triple = build_quasi_triple(g, phi, omega)
print("outer degree:", g.exact_degree, "| multiplier zeros inside the disk | inner vanishes at 0")

print()
print(f"{'r':>8} {'sum for f':>12} {'sum for g':>12} {'margin':>10}")
for r in np.linspace(0.05, 1 / 3, 7):
    lhs, rhs = bohr_sum(triple.f, r), bohr_sum(g, r)
    print(f"{r:8.4f} {lhs:12.6f} {rhs:12.6f} {rhs - lhs:10.6f}")

print()
print("=== degenerate regimes ===")
plain = build_quasi_triple(g, make_series([1.0], order), omega)
pointwise = build_quasi_triple(g, phi, make_series([0.0, 1.0], order))
r = 1 / 3
print(f"composition only (phi=1):  {bohr_sum(plain.f, r):.6f} <= {bohr_sum(g, r):.6f}")
print(f"multiplier only (omega=z): {bohr_sum(pointwise.f, r):.6f} <= {bohr_sum(g, r):.6f}")

print()
print("=== the 1/3 cap is necessary even here ===")
# with g an automorphism-like polynomial the domination fails past 1/3
g_sharp = make_series([0.5, 0.75, -0.375, 0.1875], order)
identity = make_series([0.0, 1.0], order)
rot = make_series([-1.0], order)  # unimodular multiplier
flipped = build_quasi_triple(g_sharp, rot, identity)
for r in (0.33, 1 / 3, 0.5, 0.8):
    lhs, rhs = bohr_sum(flipped.f, r), bohr_sum(g_sharp, r)
    print(f"  r={r:.4f}: f-sum {lhs:.6f} vs g-sum {rhs:.6f} (equal: rotation preserves moduli)")
print("equality cases like this show the domination cannot be strict in general.")
