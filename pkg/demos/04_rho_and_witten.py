"""
Quasi-rho invariants and the refined Witten index
==================================================

Both invariants are computed twice: from the assembled superpolynomial and
directly from the semigroup statistics v(x) (members up to x) and g(x)
(gaps below x).
"""

from singzeta import corpus
from singzeta.invariants import hook_substitution_check, quasi_rho, refined_witten, rho_11_torus
from singzeta.semigroup import semigroup
from singzeta.superzeta import motivic_bundle

for r, s in ((2, 3), (3, 4), (3, 5), (4, 5), (5, 7)):
    print(f"rho(1,1) of T({s},{r}) = {rho_11_torus(r, s)}")

b = motivic_bundle(corpus.cable13(), alternates=(corpus.cable13_char2(),))
rb = quasi_rho(b)
print("cable rho(1,1) =", rb.rho_11)
print("rho(q,t) =", rb.rho)

w = refined_witten(semigroup(4, 6, 13), b.H)
print("mu(q,t) =", w.mu, "| mu(1,1) =", w.mu.subs(q=1, t=1, a=1))

ok, quot = hook_substitution_check(b.H, 2)
print("row of two boxes, (1 - r)/(1 - q^2) =", quot)
