"""
Links, L-functions and the functional equation
===============================================

For the Hopf link and the double trefoil T(6,4), the motivic counts and the
L-function built from ideals z^m M are compared with closed forms and with
the polynomials printed for T(6,4).  At a=0 the polynomial t^-delta L is
invariant under t -> 1/(qt), while the zeta series Z = L/(1-t)^tau is not.
"""

from singzeta import corpus
from singzeta.semigroup import hopf_spec
from singzeta.superzeta import (L_at_q, flagged_L, functional_equation_at_q,
                                functional_equation_check, motivic_at_q, motivic_bundle,
                                zeta_from_L)

for cols in ((1, 1), (2, 1), (3, 1)):
    b = motivic_bundle(hopf_spec(2, cols))
    print(f"Hopf {cols}: H = {b.H}")

L = flagged_L(hopf_spec(2, (2, 1)))
print("Hopf (2,1): L =", L, "| H(qt,t,a) =", motivic_bundle(hopf_spec(2, (2, 1))).Hbold)

Lt = flagged_L(corpus.trefoil())
print("trefoil L =", Lt, "functional equation:", functional_equation_check(Lt, 1)[0])
print("trefoil Z to t^6 satisfies it too?", functional_equation_check(zeta_from_L(Lt, 1, 6), 1)[0])

spec = corpus.double_trefoil()
for q in (3, 5):
    H, _ = motivic_at_q(spec, q)
    Lq = L_at_q(spec, q)
    print(f"T(6,4) q={q}: H matches print {H == corpus.printed('T64_HMOT').subs(q=q)}, "
          f"L matches print {Lq == corpus.printed('T64_L').subs(q=q)}, "
          f"functional equation {functional_equation_at_q(Lq, 8, q)[0]}")
