"""
Bounds and growth
=================

b(X_n) sits between F_n n! and 2^(n-1) n!, and below the equivariant count
n! b_n. The ratios against the closed-form asymptotics of the ordered Bell
and Fibonacci numbers approach 1 quickly.
"""

from quadric_orbits.orbits import asymptotic_ratios, check_bounds

for n in range(1, 16):
    rep = check_bounds(n)
    print(f"{n:2d}  {rep.lower:>16} < {rep.value:>16} < {rep.upper:>16} < {rep.equivariant:>18}",
          "ok" if rep.ok else "FAIL", rep.note)

# %%
for n in (1, 5, 10, 20, 30):
    bell, fib = asymptotic_ratios(n)
    print(f"n={n:2d}  ordered Bell ratio {bell:.12f}   Fibonacci ratio {fib:.12f}")
