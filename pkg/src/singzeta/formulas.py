"""Closed-form superpolynomials and topological specializations.

These are independent of any counting and serve as oracles for the
enumeration pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polyalg import ONE, TriPoly, normalize_circ, qpoch

Q = TriPoly.var("q")
T = TriPoly.var("t")
A = TriPoly.var("a")


@dataclass(frozen=True)
class QPochhammer:
    """(x; base)_n for monomials x and base."""

    x: TriPoly
    base: TriPoly
    n: int

    def expand(self):
        return qpoch(self.x, self.base, self.n)


def qbinom(m, k):
    """Gaussian binomial [m, k]_q as a polynomial in q."""
    if k < 0 or k > m:
        return TriPoly()
    return (qpoch(Q, Q, m).exact_div(qpoch(Q, Q, k) * qpoch(Q, Q, m - k)))


def torus2_superpoly(p):
    """1 + qt + ... + (qt)^p + aq(1 + qt + ... + (qt)^(p-1)) for T(2p+1, 2)."""
    if p < 0:
        raise ValueError("p must be nonnegative")
    qt = Q * T
    out = sum((qt ** i for i in range(p + 1)), TriPoly())
    out = out + A * Q * sum((qt ** i for i in range(p)), TriPoly())
    return out


def colored_torus2_superpoly(p, m):
    """Row-colored superpolynomial of T(2p+1, 2), colored by m boxes.

    The half-integer powers of the closed form combine to
    q^(-p(m-k)) t^((p+1)(m-k)); the sum is cleared of its denominators,
    divided exactly, and circ-normalized.
    """
    if p < 1 or m < 1:
        raise ValueError("need p >= 1 and m >= 1")
    total = TriPoly()
    for k in range(m + 1):
        e_q = ((m * (m + 1) - k * (k + 1)) * (2 * p + 1)) // 2 - p * (m - k)
        e_t = (p + 1) * (m - k)
        term = TriPoly.mono(e_q, e_t, 0, (-1) ** (m - k))
        term = term * qbinom(m, k) * qpoch(T, Q, k) * qpoch(-A, Q, m + k)
        term = term * qpoch(-A * TriPoly.mono(0, -1, 0), Q, m - k)
        term = term * (1 - TriPoly.mono(2 * k, 1, 0))
        term = term * qpoch(TriPoly.mono(m + k + 1, 1, 0), Q, m - k)
        total = total + term
    den = qpoch(-A, Q, m) * (1 - T) * qpoch(Q * T, Q, 2 * m)
    return normalize_circ(total.exact_div(den))


def trefoil_colored_sum(m):
    """sum_k q^(mk) t^k [m, k]_q (-a/t; q)_k, the trefoil-only colored formula."""
    out = TriPoly()
    for k in range(m + 1):
        out = out + TriPoly.mono(m * k, k, 0) * qbinom(m, k) * qpoch(-A * TriPoly.mono(0, -1, 0), Q, k)
    return normalize_circ(out)


def homfly_specializations(H, kappa=1):
    """HOM, Jones and Alexander readings of a circ-normalized superpolynomial.

    HOM(t, A) = H(q=t, t, a=-A); Jones = HOM at A = t^2; the Alexander
    polynomial is H(q=t, t, a=-1) / (1-t)^(2(kappa-1)).  The returned
    polynomials use the variable a for A.
    """
    H = TriPoly.coerce(H)
    hom = H.substitute({"q": T, "a": -A})
    hom = normalize_circ(hom)
    jones = normalize_circ(hom.substitute({"a": TriPoly.mono(0, 2, 0)}))
    al = H.substitute({"q": T, "a": TriPoly.const(-1)})
    if kappa > 1:
        al = al.exact_div((1 - T) ** (2 * (kappa - 1)))
    return {"HOM": hom, "Jones": jones, "Al": normalize_circ(al)}


def bh_closedform_torus2(p):
    """H(qt, t, 0) for T(2p+1, 2): the geometric sum 1 + qt^2 + ... + (qt^2)^p."""
    return torus2_superpoly(p).subs(a=0).substitute({"q": TriPoly.mono(1, 1, 0)})


def bh_printed_torus2(p):
    """The alternative reading (1 - (qt^2)^(p-1)) / (1 - qt^2), kept for the discrepancy report."""
    x = TriPoly.mono(1, 2, 0)
    return (ONE - x ** (p - 1)).exact_div(ONE - x) if p >= 1 else TriPoly()
