"""
Riemann hypothesis scans for superpolynomials
==============================================

RH asks that all t-zeros of H(qt, t, a) lie on |t| = q^(-1/2).  Roots are
computed at 40 digits and every residual is certified.  The threshold scan
samples q on a grid and bisects the first failure.
"""

from singzeta import corpus
from singzeta.formulas import torus2_superpoly
from singzeta.invariants import quasi_rho, refined_witten
from singzeta.polyalg import parse
from singzeta.rh_scan import lee_yang_1d, rh_threshold, rh_verdict
from singzeta.semigroup import semigroup
from singzeta.superzeta import motivic_bundle

QT = parse("q*t")

H = torus2_superpoly(3).substitute({"q": QT})
for q in (0.1, 0.5, 0.9, 0.99):
    v = rh_verdict(H, q)
    print(f"T(7,2) q={q}: holds {v.holds}, max residual {v.max_residual:.1e}")

b = motivic_bundle(corpus.cable13(), alternates=(corpus.cable13_char2(),))
print("cable, a=0:", rh_threshold(b.Hbold, 0))
print("cable rho:", rh_threshold(quasi_rho(b).rho, 0))
mu = refined_witten(semigroup(4, 6, 13)).mu.substitute({"q": QT})
print("cable mu(qt,t):", rh_threshold(mu, 0, resolution=2e-5))

# Hopf link: kappa - 1 = 1 pair of exceptional zeros at small q
print("Hopf exceptional pairs:", rh_verdict(parse("1 + (q*t - 1)*t"), 0.1).exceptional_pairs)

zeros, on_circle, bound = lee_yang_1d(4, -0.1)
print(f"Lee-Yang N=4: zeros on the circle for u >= {bound:.4f}: {on_circle}")
