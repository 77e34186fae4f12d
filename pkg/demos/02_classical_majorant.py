"""The classical majorant bound at r = 1/3.

Random bounded witnesses never push |c_0| + sum |c_k| r^k above one at
r = 1/3, and the automorphism family shows the constant cannot be lowered:
its sums approach one as |a0| -> 1 while staying strictly below it.
"""

import numpy as np

from bohrlab import bohr_sum, bounded_from_spec, classical_radius, draw_blaschke_spec, mobius_series

radius = classical_radius().value
print(f"classical radius: {radius:.17g}")

print()
print("=== 200 random bounded witnesses at r = 1/3 ===")
rng = np.random.default_rng(7)
sums = []
for _ in range(200):
    witness = bounded_from_spec(draw_blaschke_spec(rng), 64)
    sums.append(bohr_sum(witness, radius))
print(f"largest majorant sum observed: {max(sums):.12f}  (bound is 1)")
print(f"mean majorant sum:             {np.mean(sums):.12f}")

print()
print("=== the automorphism family pins the constant ===")
print(f"{'a':>6} {'bohr_sum at 1/3':>18} {'1 - value':>12}")
for a in (0.0, 0.3, 0.6, 0.9, 0.99, 0.999):
    value = bohr_sum(mobius_series(a, 64), radius)
    print(f"{a:6.3f} {value:18.12f} {1 - value:12.3e}")
print("the gap 2(1-a)^2/(3-a) closes only in the limit a -> 1,")
print("so no radius larger than 1/3 works for the whole class.")

print()
print("=== beyond the radius the same family breaks the bound ===")
for r in (0.34, 0.4, 0.5):
    value = bohr_sum(mobius_series(0.9, 64), r)
    marker = "<= 1" if value <= 1 else "> 1   <-- violation"
    print(f"  r={r:.2f}: sum = {value:.6f}  {marker}")
