"""
The n = 5 enumerator table
==========================

Recompute B_{5,J}(q) for all sixteen subsets J of {1,2,3,4} and compare with
the printed table. Mismatching rows are diagnosed with the value-at-one
identity B(1) = n! / prod (m_i + 1)!.
"""

from quadric_orbits.audit import audit_published_table

rows = audit_published_table()
for r in rows:
    mark = "ok " if r.matches else "!! "
    print(mark, str(set(r.J) or "{}").ljust(14), r.text.ljust(24), "printed:", r.printed)

# %%
for r in rows:
    if not r.matches:
        print(f"J={r.J}: {r.note}")
