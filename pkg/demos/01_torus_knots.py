"""
Superpolynomials of torus knots from finite-field counts
=========================================================

Standard modules over the ring F_q[[z^2, z^(2p+1)]] are counted at a handful
of field sizes, and each (colength, rank) entry is interpolated in q.
The result is compared with the closed form and its knot specializations.
"""

from singzeta import corpus
from singzeta.enumerate import build_ring_model, count_standard_modules
from singzeta.formulas import homfly_specializations, torus2_superpoly
from singzeta.superzeta import motivic_bundle

# the raw counts for the trefoil: O itself (rank 2) and q invertible modules
for q in (2, 3, 4):
    rec = count_standard_modules(build_ring_model(corpus.trefoil(), q))
    print(f"q={q}: (colength, rank) -> count", dict(sorted(rec.counts.items())))

# interpolate and assemble, then compare with the closed form
for p in range(1, 5):
    b = motivic_bundle(corpus.torus2(p))
    same = b.H == torus2_superpoly(p)
    print(f"T({2 * p + 1},2): fields {b.fields}, agrees with closed form: {same}")
    print("   H =", b.H)

# HOMFLY, Jones and Alexander readings of the trefoil
for name, poly in homfly_specializations(torus2_superpoly(1)).items():
    print(f"{name:5s}", poly)
