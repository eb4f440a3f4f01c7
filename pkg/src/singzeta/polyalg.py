"""Exact Laurent polynomials in (q, t, a).

A TriPoly is an immutable mapping from exponent triples (i, j, k) of
q^i t^j a^k to nonzero integer or Fraction coefficients.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import reduce

VARS = ("q", "t", "a")


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class TriPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                if c == 0:
                    continue
                e = (int(e[0]), int(e[1]), int(e[2]))
                c = clean.get(e, 0) + c
                if c == 0:
                    clean.pop(e, None)
                else:
                    clean[e] = c
        self._terms = {e: _norm(c) for e, c in clean.items()}
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, c):
        return cls({(0, 0, 0): c})

    @classmethod
    def mono(cls, i=0, j=0, k=0, c=1):
        return cls({(i, j, k): c})

    @classmethod
    def var(cls, name):
        e = [0, 0, 0]
        e[VARS.index(name)] = 1
        return cls({tuple(e): 1})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, TriPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to TriPoly")

    # container protocol
    def terms(self):
        """Terms in canonical order: by a-exponent, then t, then q."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0][2], kv[0][1], kv[0][0]))

    def coeff(self, i=0, j=0, k=0):
        return self._terms.get((i, j, k), 0)

    def __iter__(self):
        return iter(self.terms())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TriPoly.const(other)
        if not isinstance(other, TriPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # ring operations
    def __add__(self, other):
        other = TriPoly.coerce(other)
        d = dict(self._terms)
        for e, c in other._terms.items():
            d[e] = d.get(e, 0) + c
        return TriPoly(d)

    __radd__ = __add__

    def __neg__(self):
        return TriPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-TriPoly.coerce(other))

    def __rsub__(self, other):
        return TriPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TriPoly({e: c * other for e, c in self._terms.items()})
        other = TriPoly.coerce(other)
        d = {}
        for (i1, j1, k1), c1 in self._terms.items():
            for (i2, j2, k2), c2 in other._terms.items():
                e = (i1 + i2, j1 + j2, k1 + k2)
                d[e] = d.get(e, 0) + c1 * c2
        return TriPoly(d)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("negative power of a non-monomial")
            (e, c), = self._terms.items()
            return TriPoly({(e[0] * n, e[1] * n, e[2] * n): Fraction(c) ** n})
        out = TriPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # shape queries
    def degree(self, var):
        idx = VARS.index(var)
        return max(e[idx] for e in self._terms) if self._terms else None

    def mindegree(self, var):
        idx = VARS.index(var)
        return min(e[idx] for e in self._terms) if self._terms else None

    def is_monomial(self):
        return len(self._terms) == 1

    def is_integral(self):
        return all(isinstance(c, int) for c in self._terms.values())

    def coefficients_nonnegative(self):
        return all(c >= 0 for c in self._terms.values())

    def part(self, var, exp):
        """Coefficient of var^exp, as a TriPoly in the remaining variables."""
        idx = VARS.index(var)
        d = {}
        for e, c in self._terms.items():
            if e[idx] == exp:
                e2 = list(e)
                e2[idx] = 0
                d[tuple(e2)] = c
        return TriPoly(d)

    def shift(self, i=0, j=0, k=0):
        return TriPoly({(e[0] + i, e[1] + j, e[2] + k): c for e, c in self._terms.items()})

    # evaluation and substitution
    def subs(self, **values):
        """Substitute numbers (int, Fraction, float, complex, mpf...) for variables.

        Exact values keep a TriPoly; if every variable is replaced the
        result is a plain number.
        """
        exact = all(isinstance(v, (int, Fraction)) for v in values.values())
        idx = {VARS.index(k): v for k, v in values.items()}
        if not exact and len(idx) < 3:
            present = {n for e in self._terms for n in range(3) if e[n] != 0}
            if not present <= set(idx):
                raise ValueError("inexact substitution must eliminate every variable present")
        d = {}
        total = 0
        for e, c in self._terms.items():
            val = c
            e2 = list(e)
            for n, v in idx.items():
                if e[n]:
                    if exact:
                        val = val * Fraction(v) ** e[n]
                    else:
                        val = val * v ** e[n]
                e2[n] = 0
            if exact:
                d[tuple(e2)] = d.get(tuple(e2), 0) + val
            else:
                total = total + val
        if not exact:
            return total
        out = TriPoly(d)
        if len(idx) == 3 or all(e == (0, 0, 0) for e in out._terms):
            return out.coeff(0, 0, 0) if len(idx) == 3 else out
        return out

    def __call__(self, q=None, t=None, a=None):
        vals = {k: v for k, v in (("q", q), ("t", t), ("a", a)) if v is not None}
        return self.subs(**vals)

    def substitute(self, rules):
        """Monomial substitution.

        rules maps a variable name to a TriPoly monomial (or a pair
        (coeff, (i, j, k))); the image of q^i t^j a^k is the product of the
        images raised to integer powers, so Laurent exponents are allowed.
        """
        images = []
        for n, name in enumerate(VARS):
            r = rules.get(name)
            if r is None:
                images.append((1, tuple(1 if m == n else 0 for m in range(3))))
                continue
            if isinstance(r, tuple):
                images.append((Fraction(r[0]), tuple(r[1])))
                continue
            r = TriPoly.coerce(r)
            if not r.is_monomial():
                return self._substitute_general(rules)
            (e, c), = r._terms.items()
            images.append((Fraction(c), e))
        d = {}
        for e, c in self._terms.items():
            coef = Fraction(c)
            ne = [0, 0, 0]
            for n in range(3):
                ic, ie = images[n]
                if e[n]:
                    coef *= ic ** e[n]
                    for m in range(3):
                        ne[m] += ie[m] * e[n]
            d[tuple(ne)] = d.get(tuple(ne), 0) + coef
        return TriPoly(d)

    def _substitute_general(self, rules):
        # polynomial images; exponents must be nonnegative for non-monomials
        images = []
        for name in VARS:
            r = rules.get(name)
            images.append(TriPoly.var(name) if r is None else TriPoly.coerce(r))
        out = TriPoly()
        for e, c in self._terms.items():
            term = TriPoly.const(c)
            for n in range(3):
                if e[n] < 0 and not images[n].is_monomial():
                    raise ValueError("negative power of a non-monomial image")
                if e[n]:
                    term = term * images[n] ** e[n]
            out = out + term
        return out

    # division
    def divmod_exact(self, other):
        """Return (quotient, remainder) of lex long division after monomial shifts."""
        other = TriPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero TriPoly")
        if self.is_zero():
            return TriPoly(), TriPoly()
        s_shift = tuple(min(e[n] for e in self._terms) for n in range(3))
        o_shift = tuple(min(e[n] for e in other._terms) for n in range(3))
        num = self.shift(*(-x for x in s_shift))
        den = other.shift(*(-x for x in o_shift))
        order = lambda e: (e[2], e[1], e[0])
        lead_e = max(den._terms, key=order)
        lead_c = den._terms[lead_e]
        quot = {}
        rem = dict(num._terms)
        remainder = {}
        while rem:
            e = max(rem, key=order)
            c = rem.pop(e)
            if all(e[n] >= lead_e[n] for n in range(3)):
                qe = tuple(e[n] - lead_e[n] for n in range(3))
                qc = Fraction(c) / lead_c
                quot[qe] = quot.get(qe, 0) + qc
                for de, dc in den._terms.items():
                    if de == lead_e:
                        continue
                    te = tuple(qe[n] + de[n] for n in range(3))
                    rem[te] = rem.get(te, 0) - qc * dc
                    if rem[te] == 0:
                        del rem[te]
            else:
                remainder[e] = c
        back = tuple(s_shift[n] - o_shift[n] for n in range(3))
        q = TriPoly(quot).shift(*back)
        r = TriPoly(remainder).shift(*s_shift)
        return q, r

    def exact_div(self, other):
        q, r = self.divmod_exact(other)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    def divides(self, other):
        """True if self divides other exactly."""
        try:
            TriPoly.coerce(other).exact_div(self)
            return True
        except ArithmeticError:
            return False

    # rendering
    def render(self):
        if not self._terms:
            return "0"
        out = []
        for (i, j, k), c in self.terms():
            factors = []
            for name, e in (("a", k), ("q", i), ("t", j)):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            mag = abs(c)
            if body:
                text = body if mag == 1 else f"{mag}*{body}"
            else:
                text = str(mag)
            if not out:
                out.append(("-" if c < 0 else "") + text)
            else:
                out.append((" - " if c < 0 else " + ") + text)
        return "".join(out)

    __str__ = render

    def __repr__(self):
        return f"TriPoly({self.render()!r})"

    def to_json(self):
        return json.dumps([[str(i), str(j), str(k), str(c)] for (i, j, k), c in self.terms()])

    @classmethod
    def from_json(cls, text):
        rows = json.loads(text)
        return cls({(int(i), int(j), int(k)): Fraction(c) for i, j, k, c in rows})


_TOKEN = re.compile(r"\s*(\d+|[qta]|\^|\*|\+|-|\(|\)|/)")


def parse(text):
    """Parse a polynomial expression in q, t, a with +, -, *, ^, / and parentheses.

    Division is allowed only by integers. Implicit multiplication between
    adjacent factors is accepted, so "2q^3t" reads as 2*q^3*t.
    """
    text = text.replace("**", "^").replace("−", "-")
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"unexpected character {text[pos]!r} in {text!r}")
        toks.append(m.group(1))
        pos = m.end()
    toks.append(None)
    p = [0]

    def peek():
        return toks[p[0]]

    def take():
        tok = toks[p[0]]
        p[0] += 1
        return tok

    def expr():
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
        acc = term() * sign
        while peek() in ("+", "-"):
            op = take()
            rhs = term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term():
        acc = power()
        while True:
            tok = peek()
            if tok == "*":
                take()
                acc = acc * power()
            elif tok == "/":
                take()
                den = power()
                if not (den.is_monomial() and den.coeff(0, 0, 0)):
                    raise ValueError("only division by integers is supported")
                acc = acc * Fraction(1, den.coeff(0, 0, 0))
            elif tok is not None and (tok in VARS or tok == "(" or tok.isdigit()):
                acc = acc * power()
            else:
                return acc

    def power():
        base = atom()
        if peek() == "^":
            take()
            neg = False
            if peek() == "-":
                take()
                neg = True
            e = int(take())
            base = base ** (-e if neg else e)
        return base

    def atom():
        tok = take()
        if tok == "(":
            v = expr()
            if take() != ")":
                raise ValueError("unbalanced parentheses")
            return v
        if tok in VARS:
            return TriPoly.var(tok)
        if tok is not None and tok.isdigit():
            return TriPoly.const(int(tok))
        if tok == "-":
            return -power()
        raise ValueError(f"unexpected token {tok!r}")

    out = expr()
    if peek() is not None:
        raise ValueError(f"trailing input in {text!r}")
    return out


q = TriPoly.var("q")
t = TriPoly.var("t")
a = TriPoly.var("a")
ONE = TriPoly.const(1)


def qpoch(x, base, n):
    """(x; base)_n = (1 - x)(1 - x*base)...(1 - x*base^(n-1))."""
    x = TriPoly.coerce(x)
    base = TriPoly.coerce(base)
    out = ONE
    cur = x
    for _ in range(n):
        out = out * (1 - cur)
        cur = cur * base
    return out


def poly_sum(items):
    return reduce(lambda u, v: u + v, items, TriPoly())


# interpolation -------------------------------------------------------------

class PolynomialityViolation(ArithmeticError):
    """Counts at several field sizes do not come from one integer polynomial."""

    def __init__(self, message, key=None, detail=None):
        super().__init__(message)
        self.key = key
        self.detail = detail or {}


def lagrange(points):
    """Exact Lagrange interpolation; returns coefficient list (low to high) as Fractions."""
    xs = [Fraction(x) for x, _ in points]
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for m in range(len(basis) - 1):
                basis[m] -= xj * basis[m + 1]
            denom *= Fraction(xi) - xj
        for m in range(len(basis)):
            coeffs[m] += Fraction(yi) * basis[m] / denom
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def interpolate_series(values, degbound, holdout=True):
    """Fit one integer polynomial in q through {q: value}.

    Uses the smallest degbound+1 field sizes for the fit; every remaining
    field size is a held-out check. Raises PolynomialityViolation on
    non-integral coefficients or a held-out mismatch.
    """
    qs = sorted(values)
    if len(qs) < degbound + 1 + (1 if holdout else 0):
        need = degbound + 1 + (1 if holdout else 0)
        raise ValueError(f"need {need} field sizes, have {len(qs)}")
    fit = qs[: degbound + 1]
    coeffs = lagrange([(x, values[x]) for x in fit])
    if any(c.denominator != 1 for c in coeffs):
        raise PolynomialityViolation("non-integral interpolated coefficient",
                                     detail={"coeffs": [str(c) for c in coeffs]})
    for x in qs[degbound + 1:]:
        val = sum(c * x ** n for n, c in enumerate(coeffs))
        if val != values[x]:
            raise PolynomialityViolation("held-out field size disagrees",
                                         detail={"q": x, "expected": values[x], "fitted": val})
    return [int(c) for c in coeffs]


def interpolate_q(records, degbound, holdout=True):
    """Turn per-field tables {q: {key: count}} into {key: q-polynomial TriPoly}.

    Keys missing at some q count as zero there.
    """
    keys = set()
    for tab in records.values():
        keys.update(tab)
    out = {}
    for key in sorted(keys):
        vals = {qq: records[qq].get(key, 0) for qq in records}
        try:
            coeffs = interpolate_series(vals, degbound, holdout)
        except PolynomialityViolation as exc:
            exc.key = key
            raise
        out[key] = TriPoly({(n, 0, 0): c for n, c in enumerate(coeffs)})
    return out


# normalization and symmetry checks -----------------------------------------

def normalize_circ(p):
    """Divide by the monomial (with sign) that makes the lowest a-part start with 1."""
    p = TriPoly.coerce(p)
    if p.is_zero():
        raise ValueError("cannot normalize zero")
    k0 = p.mindegree("a")
    low = p.part("a", k0)
    i0 = low.mindegree("q")
    j0 = low.mindegree("t")
    c = low.coeff(i0, j0, 0)
    if c not in (1, -1):
        raise ValueError("polynomial has no unit corner term; not of circ shape")
    out = p.shift(-i0, -j0, -k0) * c
    return out


def superduality_image(p, delta, i_exp=None, j_exp=None):
    """q^i t^j p(q, 1/(qt), a) with (i, j) = (delta, 2*delta) by default."""
    i_exp = delta if i_exp is None else i_exp
    j_exp = 2 * delta if j_exp is None else j_exp
    img = TriPoly.coerce(p).substitute({"t": (1, (-1, -1, 0))})
    return img.shift(i_exp, j_exp, 0)


def check_superduality(p, delta, i_exp=None, j_exp=None):
    """Verdict for q^delta t^(2 delta) p(q, 1/(qt), a) == p.

    Returns (holds, witness) where witness is the first differing monomial
    in canonical order, or None.
    """
    p = TriPoly.coerce(p)
    diff = superduality_image(p, delta, i_exp, j_exp) - p
    if diff.is_zero():
        return True, None
    (e, c) = diff.terms()[0]
    return False, {"monomial": e, "difference": c}


def transpose_factor(p, p_transposed):
    """Find the monomial m with p(q,t,a) = m * p'(1/t, 1/q, a), or None."""
    p = TriPoly.coerce(p)
    img = TriPoly.coerce(p_transposed).substitute({"q": (1, (0, -1, 0)), "t": (1, (-1, 0, 0))})
    if img.is_zero() or p.is_zero():
        return None
    quot, rem = p.divmod_exact(img)
    if rem.is_zero() and quot.is_monomial():
        return quot
    return None
