"""
Unimodality of B_{n,J}(q)
=========================

Scan every subset J of [n-1] for n up to 7 and report any enumerator whose
coefficients are not unimodal. This is a search, not a proof.
"""

from quadric_orbits.audit import unimodality_scan

for n in range(1, 8):
    results = unimodality_scan(n)
    bad = [r for r in results if not r.unimodal]
    print(f"n={n}: {len(results)} polynomials, {len(bad)} not unimodal")
    for r in bad:
        print("   ", r.J, r.poly.format())

# %%
# Largest enumerator at n = 7: the Eulerian polynomial.
print(unimodality_scan(7)[0].poly.format())
