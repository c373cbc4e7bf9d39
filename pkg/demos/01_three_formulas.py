"""
Three ways to count Borel orbits on complete quadrics
=====================================================

b(X_n) is computed from compositions weighted by involution counts, from
standard tableaux on stacked skew shapes, from values of the modified
Hermite polynomials, and from a descent statistic over minimal coset
representatives. All four must give the same integer.
"""

import time

from quadric_orbits.orbits import METHODS, descent_contributions
from quadric_orbits.hermite import coeff_a, hermite_poly

# %%
# The n = 3 case by hand: H_3(y) = y^3 + 3y^2 and a_{3,r} = 2, -2, 1.
h3 = hermite_poly(3)
print("H_3 =", h3.format("y"))
terms = [(coeff_a(3, r), h3(r)) for r in (1, 2, 3)]
print(" + ".join(f"({a})*{h}" for a, h in terms), "=", sum(a * h for a, h in terms))

# %%
# Per-subset contributions to the descent formula at n = 3.
print(descent_contributions(3))

# %%
# All methods side by side.
for n in range(1, 10):
    row = []
    for name, fn in METHODS.items():
        start = time.perf_counter()
        value = fn(n)
        row.append(f"{name}={value} ({(time.perf_counter() - start) * 1e3:.1f} ms)")
    print(n, "  ".join(row))
