"""Finite fields F_q (q = p^k <= 2^16) and truncated multi-slot power series.

Field elements are the integers 0..q-1; the integer sum d_0 + d_1 p + ...
encodes the residue class of d_0 + d_1 X + ... modulo the field modulus.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product

MAX_Q = 1 << 16
TABLE_Q = 256  # full addition/multiplication tables up to this size


def is_prime(n):
    """Deterministic trial division; inputs here are below 2^16."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q):
    """Return (p, k) with q = p^k, or None."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            n = q
            while n % p == 0:
                n //= p
                k += 1
            return (p, k) if n == 1 and is_prime(p) else None
    return None


# polynomials over F_p as coefficient lists, low degree first ---------------

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    a = list(a)
    inv_lead = pow(m[-1], p - 2, p)
    while len(_ptrim(a)) >= len(m):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
    return a


def _monic_polys(deg, p):
    """All monic polynomials of the given degree, low degree first."""
    for tail in product(range(p), repeat=deg):
        yield list(tail) + [1]


def is_irreducible(poly, p):
    poly = _ptrim([c % p for c in poly])
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(d, p):
            if not _ptrim(_pmod(poly, f, p)):
                return False
    return True


def smallest_irreducible(p, k):
    """Lexicographically smallest monic irreducible of degree k over F_p.

    Candidates are compared by their coefficient list read from degree k-1
    down to degree 0.
    """
    if k == 1:
        return (0, 1)
    for high_first in product(range(p), repeat=k):
        poly = list(reversed(high_first)) + [1]
        if is_irreducible(poly, p):
            return tuple(poly)
    raise ArithmeticError(f"no irreducible of degree {k} over F_{p}")


@dataclass(frozen=True)
class FieldSpec:
    """The finite field F_p[X]/(modulus)."""

    p: int
    k: int
    modulus: tuple
    _tabs: dict = dc_field(default=None, repr=False, compare=False, hash=False)

    @property
    def q(self):
        return self.p ** self.k

    def __post_init__(self):
        object.__setattr__(self, "_tabs", _build_tables(self.p, self.k, self.modulus))

    # element operations
    def add(self, x, y):
        t = self._tabs
        if "add" in t:
            return t["add"][x][y]
        if self.k == 1:
            return (x + y) % self.p
        return _digit_add(x, y, self.p, self.k, 1)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def neg(self, x):
        return self._tabs["neg"][x]

    def mul(self, x, y):
        t = self._tabs
        if "mul" in t:
            return t["mul"][x][y]
        if x == 0 or y == 0:
            return 0
        return t["exp"][(t["log"][x] + t["log"][y]) % (self.q - 1)]

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self._tabs["inv"][x]

    def pow(self, x, n):
        if x == 0:
            return 0 if n > 0 else 1
        t = self._tabs
        return t["exp"][(t["log"][x] * n) % (self.q - 1)]

    def frobenius(self, x):
        return self.pow(x, self.p)

    def elements(self):
        return range(self.q)

    def from_int(self, n):
        """Image of an integer under Z -> F_p -> F_q."""
        return n % self.p

    @property
    def add_table(self):
        return self._tabs.get("add")

    @property
    def mul_table(self):
        return self._tabs.get("mul")

    @property
    def neg_table(self):
        return self._tabs["neg"]

    @property
    def inv_table(self):
        return self._tabs["inv"]

    def __repr__(self):
        return f"FieldSpec(p={self.p}, k={self.k}, modulus={list(self.modulus)})"


def _digits(x, p, k):
    out = []
    for _ in range(k):
        out.append(x % p)
        x //= p
    return out


def _undigits(ds, p):
    n = 0
    for d in reversed(ds):
        n = n * p + d
    return n


def _digit_add(x, y, p, k, sign):
    dx = _digits(x, p, k)
    dy = _digits(y, p, k)
    return _undigits([(u + sign * v) % p for u, v in zip(dx, dy)], p)


def _poly_mulmod(x, y, p, k, modulus):
    dx = _digits(x, p, k)
    dy = _digits(y, p, k)
    prod = [0] * (2 * k - 1)
    for i, u in enumerate(dx):
        if u:
            for j, v in enumerate(dy):
                prod[i + j] = (prod[i + j] + u * v) % p
    red = _pmod(prod, list(modulus), p)
    red = red + [0] * (k - len(red))
    return _undigits(red[:k], p)


def _build_tables(p, k, modulus):
    q = p ** k
    tabs = {}
    if k == 1:
        neg = [(-x) % p for x in range(q)]
        mulf = lambda x, y: x * y % p
    else:
        neg = [_undigits([(-d) % p for d in _digits(x, p, k)], p) for x in range(q)]
        mulf = lambda x, y: _poly_mulmod(x, y, p, k, modulus)
    tabs["neg"] = neg
    # find a primitive element and build exp/log
    order = q - 1
    prime_factors = [f for f in range(2, order + 1) if order % f == 0 and is_prime(f)]
    gen = None
    for g in range(1, q):
        if q == 2:
            gen = 1
            break
        ok = True
        for f in prime_factors:
            acc = 1
            e = order // f
            base = g
            while e:
                if e & 1:
                    acc = mulf(acc, base)
                base = mulf(base, base)
                e >>= 1
            if acc == 1:
                ok = False
                break
        if ok:
            gen = g
            break
    exp = [0] * order
    log = [0] * q
    acc = 1
    for n in range(order):
        exp[n] = acc
        log[acc] = n
        acc = mulf(acc, gen)
    tabs["exp"] = exp
    tabs["log"] = log
    inv = [0] * q
    for x in range(1, q):
        inv[x] = exp[(-log[x]) % order]
    tabs["inv"] = inv
    if q <= TABLE_Q:
        if k == 1:
            tabs["add"] = [[(x + y) % p for y in range(q)] for x in range(q)]
        else:
            tabs["add"] = [[_digit_add(x, y, p, k, 1) for y in range(q)] for x in range(q)]
        mul = [[0] * q for _ in range(q)]
        for x in range(1, q):
            lx = log[x]
            row = mul[x]
            for y in range(1, q):
                row[y] = exp[(lx + log[y]) % order]
        tabs["mul"] = mul
    return tabs


_FIELD_CACHE = {}


def make_field(p, k=1):
    """Return the field with p^k elements, built from the smallest irreducible."""
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"characteristic {p!r} is not prime")
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"extension degree {k!r} must be a positive integer")
    if p ** k > MAX_Q:
        raise ValueError(f"field size {p}^{k} exceeds {MAX_Q}")
    key = (p, k)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = FieldSpec(p, k, smallest_irreducible(p, k))
    return _FIELD_CACHE[key]


def field_of_size(q):
    pk = prime_power(q)
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    return make_field(*pk)


# linear algebra over a FieldSpec -------------------------------------------

def rref(rows, F, ncols, order=None):
    """Reduced echelon form of a list of vectors.

    Pivots are the first nonzero coordinate in the given column order
    (default: increasing index). Returns (rows, pivots) with each pivot
    normalized to 1 and cleared from every other row.
    """
    order = list(range(ncols)) if order is None else list(order)
    mul = F.mul
    add = F.add
    neg = F.neg
    basis = []
    pivots = []
    for v in rows:
        v = list(v)
        for b, pc in zip(basis, pivots):
            c = v[pc]
            if c:
                nc = neg(c)
                for j in range(ncols):
                    if b[j]:
                        v[j] = add(v[j], mul(nc, b[j]))
        pc = next((c for c in order if v[c]), None)
        if pc is None:
            continue
        inv = F.inv(v[pc])
        v = [mul(inv, x) for x in v]
        for b in basis:
            c = b[pc]
            if c:
                nc = neg(c)
                for j in range(ncols):
                    if v[j]:
                        b[j] = add(b[j], mul(nc, v[j]))
        basis.append(v)
        pivots.append(pc)
    pos = {c: n for n, c in enumerate(order)}
    idx = sorted(range(len(basis)), key=lambda n: pos[pivots[n]])
    return [basis[n] for n in idx], [pivots[n] for n in idx]


def rank(rows, F, ncols):
    return len(rref(rows, F, ncols)[0])


def reduce_vector(v, basis, pivots, F):
    """Subtract multiples of reduced-echelon rows to clear their pivot columns."""
    v = list(v)
    mul = F.mul
    add = F.add
    neg = F.neg
    for b, pc in zip(basis, pivots):
        c = v[pc]
        if c:
            nc = neg(c)
            for j, bj in enumerate(b):
                if bj:
                    v[j] = add(v[j], mul(nc, bj))
    return v


def solve_affine(equations, nvars, F):
    """Solve sum_j A[j] x_j = b for rows (A, b).

    Returns None if inconsistent, else (particular, kernel_basis) over F.
    """
    rows = [list(A) + [b] for A, b in equations]
    red, piv = rref(rows, F, nvars + 1)
    if any(pc == nvars for pc in piv):
        return None
    part = [0] * nvars
    for r, pc in zip(red, piv):
        part[pc] = r[nvars]
    free = [j for j in range(nvars) if j not in set(piv)]
    kernel = []
    for fj in free:
        v = [0] * nvars
        v[fj] = 1
        for r, pc in zip(red, piv):
            if r[fj]:
                v[pc] = F.neg(r[fj])
        kernel.append(v)
    return part, kernel


# truncated series ----------------------------------------------------------

@dataclass(frozen=True)
class BranchSeries:
    """sum c[j] z^j modulo z^N on one slot."""

    slot: int
    coeffs: tuple
    N: int

    def valuation(self):
        for j, c in enumerate(self.coeffs):
            if c:
                return j
        return None


ABOVE_TRUNCATION = "≥N"


@dataclass(frozen=True)
class MultiSeries:
    """Element of the product of tau slot rings F[[zeta_s]] / zeta_s^N.

    slot_branch[s] names the branch that slot s belongs to.
    """

    field: FieldSpec
    slots: tuple  # tuple of coefficient tuples, one per slot
    slot_branch: tuple
    N: int

    @classmethod
    def zero(cls, F, slot_branch, N):
        return cls(F, tuple((0,) * N for _ in slot_branch), tuple(slot_branch), N)

    @classmethod
    def from_terms(cls, F, slot_branch, N, terms):
        """terms: iterable of (slot, exponent, integer coefficient reduced mod p)."""
        data = [[0] * N for _ in slot_branch]
        for s, e, c in terms:
            if e >= N:
                raise ValueError(f"exponent {e} is at or beyond truncation {N}")
            data[s][e] = F.add(data[s][e], F.from_int(c))
        return cls(F, tuple(tuple(r) for r in data), tuple(slot_branch), N)

    @classmethod
    def idempotent(cls, F, slot_branch, N, slot):
        return cls.from_terms(F, slot_branch, N, [(slot, 0, 1)])

    @classmethod
    def unit(cls, F, slot_branch, N):
        return cls.from_terms(F, slot_branch, N, [(s, 0, 1) for s in range(len(slot_branch))])

    def _check(self, other):
        if self.field != other.field or self.slot_branch != other.slot_branch or self.N != other.N:
            raise ValueError("series live in different rings (field, slots or truncation differ)")

    def branch(self, s):
        return BranchSeries(s, self.slots[s], self.N)

    def __add__(self, other):
        self._check(other)
        add = self.field.add
        return MultiSeries(self.field,
                           tuple(tuple(add(u, v) for u, v in zip(a, b)) for a, b in zip(self.slots, other.slots)),
                           self.slot_branch, self.N)

    def scale(self, c):
        mul = self.field.mul
        return MultiSeries(self.field, tuple(tuple(mul(c, u) for u in a) for a in self.slots),
                           self.slot_branch, self.N)

    def __neg__(self):
        return self.scale(self.field.neg(1))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return series_mul(self, other)

    def is_zero(self):
        return not any(any(a) for a in self.slots)


def series_mul(x, y):
    """Componentwise product truncated at the common order."""
    x._check(y)
    F = x.field
    N = x.N
    add = F.add
    mul = F.mul
    out = []
    for a, b in zip(x.slots, y.slots):
        c = [0] * N
        for i, u in enumerate(a):
            if u:
                for j in range(N - i):
                    v = b[j]
                    if v:
                        c[i + j] = add(c[i + j], mul(u, v))
        out.append(tuple(c))
    return MultiSeries(F, tuple(out), x.slot_branch, N)


def valuation_vector(x):
    """Per-slot order of vanishing; the sentinel '≥N' marks a slot that is 0 mod z^N."""
    out = []
    for a in x.slots:
        v = next((j for j, c in enumerate(a) if c), None)
        out.append(ABOVE_TRUNCATION if v is None else v)
    return tuple(out)


class RationalField:
    """The rationals with the FieldSpec element interface (characteristic 0)."""

    p = 0
    k = 1
    q = None

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / x

    def from_int(self, n):
        return Fraction(n)

    def __repr__(self):
        return "RationalField()"


QQ = RationalField()
