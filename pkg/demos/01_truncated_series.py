"""Tour of the truncated-series engine.

Builds disk automorphisms and Blaschke products, exercises the arithmetic
(product, composition, calculus) and shows that majorant sums of the
truncated representations behave like the functions they stand for.
"""

import numpy as np

from bohrlab import (
    BlaschkeSpec,
    blaschke_series,
    compose,
    derivative,
    eval_blaschke,
    evaluate,
    integrate,
    majorant_eval,
    make_series,
    mobius_series,
    mul,
)

print("=== disk automorphism (z + a0)/(1 + conj(a0) z), a0 = 0.5 ===")
m = mobius_series(0.5, 12)
print("first coefficients:", np.round(m.coeffs[:6].real, 6))
print("coefficient moduli decay geometrically with ratio |a0|:",
      np.round(np.abs(m.coeffs[1:6]) / np.abs(m.coeffs[2:7]), 3))

print()
print("=== Blaschke product with zeros 0.3 and -0.5j ===")
spec = BlaschkeSpec(zeros=(0.3, -0.5j), rotation=1.0)
b = blaschke_series(spec, 48)
for z in (0.2, 0.1 + 0.3j):
    series_val = complex(evaluate(b, z))
    rational_val = complex(eval_blaschke(spec, z))
    print(f"  at z={z}: series {series_val:.10f}  rational {rational_val:.10f}")
boundary = np.max(np.abs(eval_blaschke(spec, 0.999 * np.exp(2j * np.pi * np.linspace(0, 1, 720)))))
print(f"max modulus sampled near the boundary: {boundary:.6f} (never exceeds 1)")

print()
print("=== composition with an inner function contracts the majorant ===")
inner = blaschke_series(BlaschkeSpec(zeros=(0.4,)), 48, vanish_at_origin=True)
composed = compose(blaschke_series(spec, 48), inner)
for r in (0.1, 1 / 3):
    print(f"  r={r:.4f}: majorant of B o w = {majorant_eval(composed, r):.6f}"
          f"  <=  majorant of B = {majorant_eval(blaschke_series(spec, 48), r):.6f}")

print()
print("=== calculus round trip ===")
s = make_series([0, 1, 0, 0.25], 8)
print("series:", s.coeffs[:5].real)
print("integrate(derivative(.)):", integrate(derivative(s)).coeffs[:5].real)

print()
print("=== product against the convolution definition ===")
f, g = make_series([1, 1], 6), make_series([1, -1], 6)
print("(1+z)(1-z) =", mul(f, g).coeffs[:4].real, " (1 - z^2)")
