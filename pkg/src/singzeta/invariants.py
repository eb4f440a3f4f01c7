"""Quasi-rho invariants, the refined Witten index, and hook substitutions.

Every quantity has two routes: one through an assembled superpolynomial and
one directly through the semigroup statistics v(x) and g(x).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polyalg import ONE, TriPoly, check_superduality
from .semigroup import _tail_products, newton_a, vg_profiles

T = TriPoly.var("t")
Q = TriPoly.var("q")


class RouteDisagreement(ArithmeticError):
    """Two independent computations of the same invariant differ."""


@dataclass
class RhoBundle:
    R: TriPoly
    rho: TriPoly
    rho_11: int
    routes: tuple = ("H-derived", "semigroup")


@dataclass
class WittenBundle:
    delta_qt: TriPoly
    mu: TriPoly
    varrho: TriPoly


# semigroup statistics ----------------------------------------------------------

def _stats(G):
    """v(x), g(x) extended past 2 delta (only x < 2 delta is ever needed)."""
    return vg_profiles(G)


def varrho_from_gaps(G):
    """sum over gaps x and members y < x of q^g(x) t^(v(y)-1)."""
    v, g = _stats(G)
    gaps = set(G.gaps)
    out = TriPoly()
    for x in G.gaps:
        for y in range(x):
            if y not in gaps:
                out = out + TriPoly.mono(g[x], v[y] - 1, 0)
    return out


def rho_from_gaps(G):
    """rho(q, t) = varrho(qt, t)."""
    return varrho_from_gaps(G).substitute({"q": TriPoly.mono(1, 1, 0)})


def rho_11_from_gaps(G):
    """sum_i m_i (g'_i + 1 - m_i/2) - delta^2/2 over the gap segments [g_i, g'_i]."""
    total = Fraction(0)
    for first, last, m in G.segments:
        total += m * (last + 1 - Fraction(m, 2))
    total -= Fraction(G.delta ** 2, 2)
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral rho(1,1) = {total}")
    return int(total)


def rho_11_cable(pairs):
    """(1/24) sum upsilon_i^2 (a_i^2 - 1)(r_i^2 - 1) for Newton pairs (r_i, s_i)."""
    a = newton_a(pairs)
    ups = _tail_products(pairs)
    total = sum(ups[i] ** 2 * (a[i] ** 2 - 1) * (pairs[i][0] ** 2 - 1) for i in range(len(pairs)))
    if total % 24:
        raise ArithmeticError("cable rho(1,1) is not an integer")
    return total // 24


def rho_11_torus(r, s):
    return (r * r - 1) * (s * s - 1) // 24


# superpolynomial routes -----------------------------------------------------------

def R_from_Hbold(Hbold, delta):
    """(H(q,t,a) - t^delta H(q,1,a)) / ((1 - qt)(1 - t)), exactly."""
    num = Hbold - Hbold.subs(t=1).shift(0, delta, 0)
    return num.exact_div((1 - TriPoly.mono(1, 1, 0)) * (1 - T))


def quasi_rho(bundle=None, Hbold=None, G=None, delta=None):
    """RhoBundle from an assembled bundle (unibranch only), checked against the gap formula."""
    if bundle is not None:
        if bundle.kappa != 1:
            raise ValueError("quasi-rho is defined here for unibranch (knot) singularities only")
        Hbold = bundle.Hbold
        delta = bundle.delta
        G = G or _semigroup_of(bundle.spec)
    if Hbold.subs(t=1).substitute({"a": (-1, (-1, 0, 0))}) != TriPoly.mono(delta, 0, 0):
        raise ArithmeticError("H(q, 1, -1/q) is not q^delta")
    R = R_from_Hbold(Hbold, delta)
    rho = R.substitute({"a": (-1, (-1, 0, 0))})
    if G is not None:
        other = rho_from_gaps(G)
        if other != rho:
            raise RouteDisagreement(f"rho routes differ: {rho} vs {other}")
    r11 = rho.subs(q=1, t=1, a=1)
    return RhoBundle(R, rho, int(r11))


def _semigroup_of(spec):
    from .semigroup import ring_invariants
    return ring_invariants(spec).semigroups[0]


def embedding_holds(rho_small, delta_small, rho_big):
    """The monomials of rho_big with t-exponent < 2 delta - 1 are exactly rho_small's."""
    low = TriPoly({e: c for e, c in rho_big.terms() if e[1] < 2 * delta_small - 1})
    return low == rho_small


# refined Witten index ------------------------------------------------------------

def delta_qt_from_gaps(G):
    """(1 - t^g1)/(1 - t) + sum_{i<w} (t^(g'_i+1) - t^(g_(i+1)))/(1 - t) (q/t)^(m_1+...+m_i)."""
    segs = G.segments
    if not segs:
        return TriPoly()
    out = _geom(0, segs[0][0])
    acc = 0
    for i in range(len(segs) - 1):
        acc += segs[i][2]
        piece = _geom(segs[i][1] + 1, segs[i + 1][0])
        out = out + piece.shift(acc, -acc, 0)
    return out


def _geom(lo, hi):
    """(t^lo - t^hi)/(1 - t) = t^lo + ... + t^(hi-1)."""
    return TriPoly({(0, j, 0): 1 for j in range(lo, hi)})


def mu_from_gaps(G):
    """sum_{x < 2 delta} t^(v(x)-1) q^g(x)."""
    v, g = _stats(G)
    out = TriPoly()
    for x in range(2 * G.delta):
        out = out + TriPoly.mono(g[x], v[x] - 1, 0)
    return out


def mu_from_delta_qt(dqt, delta):
    """delta_{q,t} + (qt)^(delta-1) delta_{1/t, 1/q}."""
    flipped = dqt.substitute({"q": (1, (0, -1, 0)), "t": (1, (-1, 0, 0))})
    return dqt + flipped.shift(delta - 1, delta - 1, 0)


def delta_qt_from_H(H, delta):
    """(H(q, t, -t/q) - (qt)^delta) / (1 - t)."""
    r = H.substitute({"a": (-1, (-1, 1, 0))})
    return (r - TriPoly.mono(delta, delta, 0)).exact_div(1 - T)


def varrho_from_H(H, delta):
    """(H(q, t, -t/q) - q^delta) / ((1 - t)(1 - q))."""
    r = H.substitute({"a": (-1, (-1, 1, 0))})
    return (r - TriPoly.mono(delta, 0, 0)).exact_div((1 - T) * (1 - Q))


def refined_witten(G, H=None):
    """WittenBundle from the semigroup; with H given, its route is cross-checked too."""
    if not G.is_symmetric:
        raise ValueError("the refined Witten index needs a Gorenstein (symmetric) semigroup")
    dqt = delta_qt_from_gaps(G)
    mu = mu_from_gaps(G)
    mu2 = mu_from_delta_qt(dqt, G.delta)
    if mu != mu2:
        raise RouteDisagreement(f"mu routes differ: {mu} vs {mu2}")
    if dqt.subs(q=1, t=1, a=1) != G.delta:
        raise RouteDisagreement("delta_{1,1} differs from delta")
    vr = varrho_from_gaps(G)
    if H is not None:
        if delta_qt_from_H(H, G.delta) != dqt:
            raise RouteDisagreement("delta_{q,t} from H differs from the gap formula")
        if varrho_from_H(H, G.delta) != vr:
            raise RouteDisagreement("varrho from H differs from the gap formula")
    return WittenBundle(dqt, mu, vr)


def mu_superduality(mu, delta):
    """(qt)^(delta-1) mu(1/t, 1/q) == mu(q, t)."""
    return mu.substitute({"q": (1, (0, -1, 0)), "t": (1, (-1, 0, 0))}).shift(delta - 1, delta - 1, 0) == mu


def double_coefficients(G):
    """x in Gamma with x+1 a gap (x < 2 delta): the exponents carrying coefficient 2 in mu."""
    v, g = _stats(G)
    gaps = set(G.gaps)
    return [(g[x], v[x] - 1) for x in range(2 * G.delta) if x not in gaps and (x + 1) in gaps]


# hook substitution ------------------------------------------------------------------

def hook_substitution_check(H, m):
    """For the row of m boxes: r = H(q,t,-t/q), r^row = r(q^m, q^(m-1) t), quotient (1-r^row)/(1-q^m).

    Returns (divisible, quotient or None).
    """
    r = H.substitute({"a": (-1, (-1, 1, 0))})
    rl = r.substitute({"q": TriPoly.mono(m, 0, 0), "t": TriPoly.mono(m - 1, 1, 0)})
    num = ONE - rl
    den = ONE - TriPoly.mono(m, 0, 0)
    quot, rem = num.divmod_exact(den)
    if not rem.is_zero():
        return False, None
    return True, quot


def superduality_R(R, delta):
    return check_superduality(R, delta - 1, delta - 1, 2 * delta - 2)[0]
