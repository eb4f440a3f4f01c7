"""Motivic superpolynomials, flagged zeta and L-functions.

Counts from the enumerate module are gathered at several field sizes,
interpolated in q, and assembled into TriPoly objects.  Both the
superpolynomial and the L-function are stored as integer tables keyed by
(t-exponent, rank); the rank decides the a-product attached to each entry.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .enumerate import (BadReduction, build_colored_model, build_ring_model,
                        colored_zeta_counts, count_standard_modules, L_terms)
from .exactfield import prime_power
from .polyalg import ONE, TriPoly, check_superduality, interpolate_q
from .semigroup import check_good_reduction, ring_invariants

FIELD_LIMIT = 256


# helpers ---------------------------------------------------------------------

def a_product(lo, hi):
    """(1 + a q^lo)(1 + a q^(lo+1)) ... (1 + a q^(hi-1))."""
    out = ONE
    for j in range(lo, hi):
        out = out * (1 + TriPoly.mono(j, 0, 1))
    return out


def assemble(table, rk_min, q=None):
    """Sum of P_(d,r) t^d prod_{j=rk_min}^{r-1}(1 + a q^j).

    table values are q-polynomials (TriPoly) or, when q is a number, integers;
    in the numeric case q is substituted into the a-products too.
    """
    out = TriPoly()
    for (d, r), val in sorted(table.items()):
        prod = a_product(rk_min, r)
        if q is not None:
            prod = prod.subs(q=q)
        out = out + TriPoly.coerce(val) * prod.shift(0, d, 0)
    return out


def colored_delta(spec, inv=None):
    """sum c_i^2 delta_i + sum_{i<j} c_i c_j l_ij (the q-degree bound of the counts)."""
    inv = inv or ring_invariants(spec)
    c = spec.colors
    k = spec.kappa
    total = sum(c[i] ** 2 * inv.deltas[i] for i in range(k))
    total += sum(c[i] * c[j] * inv.linking[i][j] for i in range(k) for j in range(i + 1, k))
    return total


def good_fields(spec, count, start=2, alternates=(), limit=FIELD_LIMIT):
    """The first `count` field sizes >= start at which spec (or an alternate model) reduces well."""
    out = []
    q = start
    while len(out) < count and q <= limit:
        pk = prime_power(q)
        if pk and model_for_field(spec, q, alternates) is not None:
            out.append(q)
        q += 1
    if len(out) < count:
        raise BadReduction(f"only {len(out)} good field sizes up to {limit}")
    return out


def model_for_field(spec, q, alternates=()):
    """spec if q's characteristic is a good prime, else the first good alternate (or None)."""
    p = prime_power(q)[0]
    for s in (spec,) + tuple(alternates):
        if check_good_reduction(s, p).good:
            return s
    return None


# the bundle --------------------------------------------------------------------

@dataclass
class InvariantBundle:
    """Assembled invariants of one (colored) singularity."""

    spec: object
    H: TriPoly
    delta: int
    kappa: int
    tau: int
    rk_min: int
    rk_max: int
    L: TriPoly = None
    fields: tuple = ()
    counts: dict = field(default_factory=dict)  # q -> {(d, r): n}
    provenance: list = field(default_factory=list)

    @property
    def Hbold(self):
        """H(qt, t, a)."""
        return self.H.substitute({"q": TriPoly.mono(1, 1, 0)})

    def to_json(self):
        return json.dumps({
            "spec": self.spec.to_json(),
            "delta": self.delta, "kappa": self.kappa, "tau": self.tau,
            "rk_min": self.rk_min, "rk_max": self.rk_max,
            "H": self.H.render(), "Hbold": self.Hbold.render(),
            "L": None if self.L is None else self.L.render(),
            "fields": list(self.fields),
            "provenance": self.provenance,
        }, sort_keys=True)


def _rank_bounds(spec, model):
    return max(spec.colors), model.rk_max


def count_tables(spec, fields, threads=None, checkpoint=None, alternates=(), counter=None):
    """{q: CountRecord} over the given field sizes (alternate models used where needed)."""
    out = {}
    notes = []
    for q in fields:
        s = model_for_field(spec, q, alternates)
        if s is None:
            raise BadReduction(f"no model with good reduction at q={q}")
        model = build_ring_model(s, q)
        ck = None if checkpoint is None else f"{checkpoint}"
        rec = count_standard_modules(model, threads=threads, checkpoint=ck, counter=counter)
        if s is not spec:
            rec.provenance.append(f"model {s.label or 'alternate'} at q={q}")
            notes.append(f"q={q}: alternate model {s.label or ''}".strip())
        out[q] = rec
    return out, notes


def motivic_bundle(spec, fields=None, degbound=None, threads=None, checkpoint=None,
                   alternates=(), holdout=True):
    """Count at every field size, interpolate each (d, r) entry in q, assemble H^mot."""
    inv = ring_invariants(spec)
    degbound = colored_delta(spec, inv) if degbound is None else degbound
    if fields is None:
        fields = good_fields(spec, degbound + 1 + (1 if holdout else 0), alternates=alternates)
    fields = tuple(sorted(fields))
    recs, notes = count_tables(spec, fields, threads, checkpoint, alternates)
    tables = {q: r.counts for q, r in recs.items()}
    polys = interpolate_q(tables, degbound, holdout=holdout)
    model = build_ring_model(model_for_field(spec, fields[0], alternates), fields[0],
                             check_reduction=False)
    rk_min, rk_max = _rank_bounds(spec, model)
    H = assemble(polys, rk_min)
    prov = ["exact counts"] + notes
    return InvariantBundle(spec, H, inv.delta, spec.kappa, spec.tau, rk_min, rk_max,
                           fields=fields, counts=tables, provenance=prov)


def motivic_superpolynomial(spec, fields=None, degbound=None, **kw):
    return motivic_bundle(spec, fields, degbound, **kw).H


def motivic_at_q(spec, q, alternates=()):
    """H^mot at one numeric field size, as a TriPoly in (t, a)."""
    s = model_for_field(spec, q, alternates)
    if s is None:
        raise BadReduction(f"no model with good reduction at q={q}")
    model = build_ring_model(s, q)
    rec = count_standard_modules(model)
    return assemble(rec.counts, max(spec.colors), q=q), rec


# L-functions -----------------------------------------------------------------

def L_degree_bound(spec, inv=None):
    inv = inv or ring_invariants(spec)
    return 2 * inv.delta + spec.tau


def L_table_at_q(spec, q, T=None):
    """{(t-exponent, rank): integer} for L at one field size.

    Uncolored rings use standard modules and their admissible shifts; colored
    specs use the truncated colored module sum Z and L = (1-t)^tau Z,
    with the coefficients between the degree bound and the truncation
    checked to vanish.
    """
    if spec.uncolored and T is None:
        model = build_ring_model(spec, q)
        return L_terms(model)
    inv = ring_invariants(spec)
    bound = L_degree_bound(spec, inv)
    T = bound + 1 if T is None else T
    cm = build_colored_model(spec, q, T)
    Z = colored_zeta_counts(cm)
    tau = spec.tau
    out = {}
    for (d, r), n in Z.items():
        for i in range(tau + 1):
            e = d + i
            if e > T:
                continue
            out[(e, r)] = out.get((e, r), 0) + (-1) ** i * comb(tau, i) * n
    out = {k: v for k, v in out.items() if v}
    stray = {k: v for k, v in out.items() if k[0] > bound}
    if stray:
        raise ArithmeticError(f"L has terms beyond the degree bound {bound}: {sorted(stray.items())}")
    return out


def L_at_q(spec, q, T=None):
    """L at a numeric field size, as a TriPoly in (t, a)."""
    return assemble(L_table_at_q(spec, q, T), max(spec.colors), q=q)


def flagged_L(spec, fields=None, degbound=None, holdout=True):
    """L(q, t, a) as an exact TriPoly, interpolated from per-field L tables."""
    inv = ring_invariants(spec)
    degbound = colored_delta(spec, inv) if degbound is None else degbound
    if fields is None:
        fields = good_fields(spec, degbound + 1 + (1 if holdout else 0))
    tables = {q: L_table_at_q(spec, q) for q in sorted(fields)}
    polys = interpolate_q(tables, degbound, holdout=holdout)
    return assemble(polys, max(spec.colors))


def zuniga_L(L):
    """L(q, t, a = -1/q): the zeta function of principal ideals."""
    return L.substitute({"a": (-1, (-1, 0, 0))})


def principal_L(G, terms=None):
    """(1 - t) sum_{nu in Gamma} N_nu t^nu with N_nu = q^(#Gamma in (nu, nu+2 delta) - delta + 1).

    Direct count of principal ideals f R for a unibranch Gorenstein ring with
    semigroup G: f is determined modulo z^(nu + 2 delta), and the units of R
    act freely on those truncations.
    """
    c = G.conductor
    delta = G.delta
    top = c + 1 if terms is None else terms
    Z = TriPoly()
    for nu in range(top):
        if nu in G:
            e = sum(1 for g in range(nu + 1, nu + c) if g in G) - delta + 1
            Z = Z + TriPoly.mono(e, nu, 0)
    # from the conductor on N_nu = q^delta, so the tail is q^delta t^top / (1 - t)
    out = Z * (1 - TriPoly.var("t")) + TriPoly.mono(delta, top, 0)
    return out


def functional_equation_check(L, delta, mode="a=0"):
    """t^-delta L invariant under t -> 1/(qt) (a=0), or the full superduality form."""
    P = L.subs(a=0) if mode == "a=0" else L
    return check_superduality(P, delta)


def functional_equation_at_q(Lq, delta, q):
    """L(t) == q^delta t^(2 delta) L(1/(qt)) at a=0, for L evaluated at a numeric q.

    Returns (holds, image) where image is the transformed polynomial.
    """
    P = TriPoly.coerce(Lq).subs(a=0)
    image = TriPoly()
    for (i, j, k), c in P.terms():
        if i:
            raise ValueError("L must already be evaluated at a numeric q")
        image = image + TriPoly.mono(0, 2 * delta - j, 0, c * Fraction(q) ** (delta - j))
    return image == P, image


def zeta_from_L(L, tau, order):
    """Z = L / (1 - t)^tau expanded to t^order (used for the negative control)."""
    out = TriPoly()
    for (i, j, k), c in L.terms():
        for n in range(order - j + 1):
            out = out + TriPoly.mono(i, j + n, k, c * comb(n + tau - 1, tau - 1))
    return out


@dataclass
class CoincidenceReport:
    equal: bool
    first_difference: tuple = None
    q: object = None

    def to_json(self):
        return json.dumps({"equal": self.equal, "q": self.q,
                           "first_difference": self.first_difference})


def coincidence_check(Hbold, L, q=None):
    """Compare H(qt, t, a) with L; Hbold and L may be exact or evaluated at one q."""
    diff = TriPoly.coerce(Hbold) - TriPoly.coerce(L)
    if diff.is_zero():
        return CoincidenceReport(True, None, q)
    e, c = diff.terms()[0]
    return CoincidenceReport(False, (e, str(c)), q)


def t_one_identity(L_q, H_q):
    """L(q, 1, a) == H^mot(q, 1, a), i.e. sum_l |J_l(F_q)| a^l, at one numeric q."""
    return L_q.subs(t=1) == H_q.subs(t=1)
