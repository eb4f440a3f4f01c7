"""
Cells of the compactified Jacobian of C[[z^4, z^6 + z^7]]
===========================================================

The semigroup <4,6,13> has 25 standard Gamma-modules.  Each one labels a
cell, and counting points of the cells over F_q shows which are affine
spaces and which are empty.  In characteristic 2 an equisingular model
x = z^4 + z^5, y = z^6 is used, because the original one reduces badly.
"""

from singzeta import corpus
from singzeta.enumerate import build_ring_model, count_standard_modules
from singzeta.gamma_modules import enumerate_standard_deltas
from singzeta.semigroup import check_good_reduction, semigroup
from singzeta.superzeta import model_for_field, motivic_bundle

G = semigroup(4, 6, 13)
print("gaps", G.gaps, "delta", G.delta)
print(check_good_reduction(corpus.cable13(), 2))
print(check_good_reduction(corpus.cable13_char2(), 2))

records = {}
for q in (2, 3, 4, 5):
    spec = model_for_field(corpus.cable13(), q, (corpus.cable13_char2(),))
    records[q] = count_standard_modules(build_ring_model(spec, q))

print(f"{'D':28s}" + "".join(f"{'q=' + str(q):>10s}" for q in records))
for M in enumerate_standard_deltas(G):
    sizes = [sum(records[q].cells.get(M.D, {}).values()) for q in records]
    print(f"{str(list(M.D)):28s}" + "".join(f"{n:10d}" for n in sizes))

b = motivic_bundle(corpus.cable13(), alternates=(corpus.cable13_char2(),))
print("matches the printed polynomial:", b.H == corpus.printed("CABLE13_H"))
print("H(1,1,0) =", b.H.subs(q=1, t=1, a=0), "(number of nonempty cells)")
