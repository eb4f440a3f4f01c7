"""Valuation semigroups, singularity specs, cables and good reduction."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from math import gcd

from .exactfield import QQ, make_field
from .polyalg import TriPoly


class SemigroupError(ValueError):
    """Input does not define a cofinite semigroup (or violates a precondition)."""


# numerical semigroups -----------------------------------------------------

def _minimal_generators(members, conductor):
    """Positive members below conductor + multiplicity that are not sums of two positive members."""
    mult = min(m for m in members if m > 0)
    bound = conductor + mult
    mem = set(members) | set(range(conductor, bound + 1))
    gens = []
    for n in range(1, bound):
        if n in mem and not any(a in mem and (n - a) in mem for a in range(1, n)):
            gens.append(n)
    return tuple(gens)


@dataclass(frozen=True)
class NumericalSemigroup:
    """A cofinite additive submonoid of Z_{>=0}, stored through its generators."""

    generators: tuple

    def __post_init__(self):
        gens = tuple(sorted(set(int(g) for g in self.generators if g > 0)))
        if not gens:
            gens = (1,)
        if reduce(gcd, gens) != 1:
            raise SemigroupError(f"generators {gens} have gcd > 1")
        members = self._sieve(gens)
        cond = self._conductor_from(members)
        gens = _minimal_generators(members, cond) if cond else (1,)
        object.__setattr__(self, "generators", gens)

    @staticmethod
    def _sieve(gens):
        # the Frobenius number is below (g0 - 1) * (g1 - 1) for any two coprime
        # members; use a generous bound then trim
        g0 = gens[0]
        bound = g0 * gens[-1] + g0 + 1
        ok = [False] * (bound + 1)
        ok[0] = True
        for n in range(1, bound + 1):
            for g in gens:
                if g <= n and ok[n - g]:
                    ok[n] = True
                    break
        return {n for n in range(bound + 1) if ok[n]} | {bound + 1}

    @staticmethod
    def _conductor_from(members):
        top = max(members)
        c = top
        while c - 1 in members and c - 1 >= 0:
            c -= 1
        return c

    @cached_property
    def gaps(self):
        members = self._sieve(self.generators)
        c = self._conductor_from(members)
        return tuple(n for n in range(c) if n not in members)

    @property
    def delta(self):
        return len(self.gaps)

    @property
    def conductor(self):
        return self.gaps[-1] + 1 if self.gaps else 0

    @property
    def multiplicity(self):
        return self.generators[0]

    def __contains__(self, n):
        return n >= 0 and (n >= self.conductor or n not in set(self.gaps))

    def members_below(self, bound):
        gs = set(self.gaps)
        return [n for n in range(bound) if n not in gs]

    @property
    def is_symmetric(self):
        """Gorenstein symmetry: g is a gap iff conductor-1-g is a member."""
        c = self.conductor
        gs = set(self.gaps)
        return all((g in gs) != ((c - 1 - g) in gs) for g in range(c))

    @cached_property
    def segments(self):
        """Maximal runs of consecutive gaps as (first, last, length)."""
        out = []
        for g in self.gaps:
            if out and out[-1][1] == g - 1:
                s, _, m = out[-1]
                out[-1] = (s, g, m + 1)
            else:
                out.append((g, g, 1))
        return tuple(out)

    @property
    def num_segments(self):
        return len(self.segments)

    def __repr__(self):
        return f"NumericalSemigroup<{','.join(map(str, self.generators))}>"


def semigroup(*gens):
    return NumericalSemigroup(tuple(gens))


def vg_profiles(G):
    """(v, g) on [0, 2 delta): v(x) = #members in [0, x], g(x) = #gaps strictly below x.

    Hence v(x) - 1 + g(x) = x - [x is a gap].
    """
    n = 2 * G.delta
    gs = set(G.gaps)
    v = []
    g = []
    cv = 0
    cg = 0
    for x in range(n):
        if x not in gs:
            cv += 1
        v.append(cv)
        g.append(cg)
        if x in gs:
            cg += 1
    return v, g


def alexander_from_semigroup(G):
    """(1 - t) * sum_{members nu < c} t^nu + t^c with c the conductor."""
    c = G.conductor
    terms = {}
    for nu in G.members_below(c):
        terms[(0, nu, 0)] = terms.get((0, nu, 0), 0) + 1
        terms[(0, nu + 1, 0)] = terms.get((0, nu + 1, 0), 0) - 1
    terms[(0, c, 0)] = terms.get((0, c, 0), 0) + 1
    return TriPoly(terms)


# singularity specs ---------------------------------------------------------

def _terms(seq):
    return tuple((int(e), int(c)) for e, c in seq if int(c) != 0)


@dataclass(frozen=True)
class Branch:
    """One branch x = sum c z^e, y = sum c z^e with integer coefficients."""

    x: tuple
    y: tuple

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(sorted(_terms(self.x))))
        object.__setattr__(self, "y", tuple(sorted(_terms(self.y))))
        for name, ser in (("x", self.x), ("y", self.y)):
            if any(e < 0 for e, _ in ser):
                raise SemigroupError(f"negative exponent in {name}")
            if any(e == 0 for e, _ in ser):
                raise SemigroupError(f"{name} must have zero constant term")
        if not self.x and not self.y:
            raise SemigroupError("branch with x = y = 0")

    def to_json(self):
        return {"x": [[e, c] for e, c in self.x], "y": [[e, c] for e, c in self.y]}


@dataclass(frozen=True)
class SingularitySpec:
    """Branches of a plane curve germ plus row-color multiplicities."""

    branches: tuple
    colors: tuple = ()
    label: str = ""

    def __post_init__(self):
        brs = tuple(b if isinstance(b, Branch) else Branch(*b) for b in self.branches)
        if not brs:
            raise SemigroupError("a spec needs at least one branch")
        object.__setattr__(self, "branches", brs)
        cols = tuple(int(c) for c in self.colors) if self.colors else (1,) * len(brs)
        if len(cols) != len(brs):
            raise SemigroupError(f"{len(cols)} colors for {len(brs)} branches")
        if any(c <= 0 for c in cols):
            raise SemigroupError("colors must be positive")
        if list(cols) != sorted(cols, reverse=True):
            raise SemigroupError("colors must be non-increasing (reorder the branches)")
        object.__setattr__(self, "colors", cols)

    @property
    def kappa(self):
        return len(self.branches)

    @property
    def tau(self):
        return sum(self.colors)

    @property
    def slot_branch(self):
        return tuple(i for i, c in enumerate(self.colors) for _ in range(c))

    @property
    def uncolored(self):
        return all(c == 1 for c in self.colors)

    def to_json(self):
        return {"branches": [b.to_json() for b in self.branches],
                "colors": list(self.colors), "label": self.label}

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        if "newton" in obj:
            pairs = [tuple(p) for p in obj["newton"]]
            return cable_spec(pairs, label=obj.get("label", ""))
        try:
            branches = [Branch(b.get("x", []), b.get("y", [])) for b in obj["branches"]]
        except (KeyError, TypeError, AttributeError) as exc:
            raise SemigroupError(f"malformed spec: {exc}") from exc
        return cls(tuple(branches), tuple(obj.get("colors", ())), obj.get("label", ""))


_SERIES_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(z(?:\^(\d+))?)?")


def parse_series(text):
    """Parse '2z^4 - z^7 + z' into ((4, 2), (7, -1), (1, 1))."""
    text = text.replace(" ", "").replace("−", "-")
    if text in ("", "0"):
        return ()
    out = []
    pos = 0
    while pos < len(text):
        m = _SERIES_TERM.match(text, pos)
        if not m or m.end() == pos:
            raise SemigroupError(f"cannot parse series {text!r}")
        sign, coef, zpart, exp = m.groups()
        if not zpart:
            raise SemigroupError(f"constant term in series {text!r}")
        c = int(coef) if coef else 1
        c = -c if sign == "-" else c
        e = int(exp) if exp else 1
        out.append((e, c))
        pos = m.end()
    return tuple(out)


def parse_branches(text):
    """Parse 'x=z^4;y=z^6+z^7' (several branches separated by '|')."""
    branches = []
    for chunk in text.split("|"):
        parts = {}
        for piece in chunk.split(";"):
            piece = piece.strip()
            if not piece:
                continue
            if "=" not in piece:
                raise SemigroupError(f"expected name=series, got {piece!r}")
            name, ser = piece.split("=", 1)
            name = name.strip()
            if name not in ("x", "y"):
                raise SemigroupError(f"unknown coordinate {name!r}")
            parts[name] = parse_series(ser)
        branches.append(Branch(parts.get("x", ()), parts.get("y", ())))
    return tuple(branches)


_PAIR = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_newton(text):
    pairs = [(int(a), int(b)) for a, b in _PAIR.findall(text)]
    if not pairs or _PAIR.sub("", text).strip(" ,"):
        raise SemigroupError(f"cannot parse Newton pairs {text!r}")
    return pairs


# Newton pairs and cables ---------------------------------------------------

def _check_pairs(pairs):
    if not pairs:
        raise SemigroupError("empty list of Newton pairs")
    for n, (r, s) in enumerate(pairs):
        if r < 2 or s < 1 or gcd(r, s) != 1:
            raise SemigroupError(f"invalid Newton pair {(r, s)}")
    if pairs[0][0] >= pairs[0][1]:
        raise SemigroupError("first Newton pair needs r_1 < s_1")


def newton_a(pairs):
    """a_1 = s_1, a_{i+1} = a_i r_i r_{i+1} + s_{i+1}."""
    _check_pairs(pairs)
    a = [pairs[0][1]]
    for i in range(1, len(pairs)):
        a.append(a[-1] * pairs[i - 1][0] * pairs[i][0] + pairs[i][1])
    if any(v <= 0 for v in a):
        raise SemigroupError("non-algebraic Newton pairs")
    return a


def _tail_products(pairs):
    """upsilon_i = r_{i+1} ... r_k."""
    rs = [r for r, _ in pairs]
    out = []
    for i in range(len(rs)):
        prod = 1
        for r in rs[i + 1:]:
            prod *= r
        out.append(prod)
    return out


def semigroup_from_newton_pairs(pairs):
    pairs = [tuple(p) for p in pairs]
    a = newton_a(pairs)
    ups = _tail_products(pairs)
    gens = [pairs[0][0] * ups[0]] + [a[i] * ups[i] for i in range(len(pairs))]
    G = NumericalSemigroup(tuple(gens))
    twice = sum(ups[i] * (a[i] - 1) * (pairs[i][0] - 1) for i in range(len(pairs)))
    if twice % 2 or twice // 2 != G.delta:
        raise SemigroupError(f"delta formula {Fraction(twice, 2)} disagrees with gap count {G.delta}")
    return G


def cable_delta(pairs):
    a = newton_a(pairs)
    ups = _tail_products(pairs)
    return Fraction(sum(ups[i] * (a[i] - 1) * (pairs[i][0] - 1) for i in range(len(pairs))), 2)


def cable_branch(pairs, coeffs=None):
    """x = z^{r_1...r_k}, y = sum c_i z^{e_i} with the standard cable exponents."""
    _check_pairs(pairs)
    k = len(pairs)
    ups = _tail_products(pairs)
    coeffs = list(coeffs) if coeffs else [1] * k
    exps = [pairs[0][1] * ups[0]]
    for i in range(1, k):
        exps.append(exps[-1] + pairs[i][1] * ups[i])
    return Branch(((pairs[0][0] * ups[0], 1),), tuple(zip(exps, coeffs)))


def cable_spec(pairs, label=""):
    """Cable branch with generic coefficients 1,1,...; retried with 1,2,3,... if needed."""
    target = semigroup_from_newton_pairs(pairs)
    for coeffs in ([1] * len(pairs), list(range(1, len(pairs) + 1))):
        br = cable_branch(pairs, coeffs)
        try:
            G = semigroup_from_branch(br, QQ)
        except SemigroupError:
            continue
        if G == target:
            name = label or "".join(f"({r},{s})" for r, s in pairs)
            return SingularitySpec((br,), (1,), name)
    raise SemigroupError(f"no generic cable coefficients reproduce {target}")


def torus_spec(r, s, label=""):
    """Unibranch x = z^r, y = z^s for coprime r, s."""
    if gcd(r, s) != 1:
        raise SemigroupError("torus knot needs coprime r, s")
    return SingularitySpec((Branch(((r, 1),), ((s, 1),)),), (1,), label or f"T({s},{r})")


def hopf_spec(kappa=2, colors=None, label=""):
    """Hopf kappa-link: kappa smooth branches meeting pairwise transversally.

    kappa = 2 uses the coordinate axes; kappa >= 3 uses the lines y = c x
    with slopes 1, -1, 3, 5, ... (distinct modulo every odd prime).
    """
    if kappa < 1:
        raise SemigroupError("kappa must be positive")
    if kappa == 1:
        brs = (Branch(((1, 1),), ()),)
    elif kappa == 2:
        brs = (Branch(((1, 1),), ()), Branch((), ((1, 1),)))
    else:
        slopes = [1, -1] + [2 * n + 1 for n in range(1, kappa - 1)]
        brs = tuple(Branch(((1, 1),), ((1, c),)) for c in slopes)
    cols = tuple(colors) if colors else (1,) * kappa
    return SingularitySpec(brs, cols, label or f"Hopf{kappa}" + ("" if not colors else str(tuple(cols))))


# ring computations over a field ---------------------------------------------

class _Echelon:
    """Incremental lowest-pivot echelon basis with optional combination tracking."""

    def __init__(self, F, ncols, track=False):
        self.F = F
        self.ncols = ncols
        self.rows = {}  # pivot -> (vector, combination)
        self.track = track

    def insert(self, v, combo=None):
        F = self.F
        v = list(v)
        combo = dict(combo) if (self.track and combo) else ({} if self.track else None)
        while True:
            pc = next((j for j, c in enumerate(v) if c), None)
            if pc is None:
                return None
            if pc not in self.rows:
                inv = F.inv(v[pc])
                v = [F.mul(inv, c) for c in v]
                if self.track:
                    combo = {k: F.mul(inv, c) for k, c in combo.items()}
                self.rows[pc] = (v, combo)
                return pc
            row, rcombo = self.rows[pc]
            f = F.neg(v[pc])
            v = [F.add(a, F.mul(f, b)) if b else a for a, b in zip(v, row)]
            if self.track:
                for k, c in rcombo.items():
                    combo[k] = F.add(combo.get(k, F.from_int(0)), F.mul(f, c))

    def contains(self, v):
        F = self.F
        v = list(v)
        while True:
            pc = next((j for j, c in enumerate(v) if c), None)
            if pc is None:
                return True
            if pc not in self.rows:
                return False
            row, _ = self.rows[pc]
            f = F.neg(v[pc])
            v = [F.add(a, F.mul(f, b)) if b else a for a, b in zip(v, row)]


def _series_vec(terms, F, N):
    v = [F.from_int(0)] * N
    for e, c in terms:
        if e < N:
            v[e] = F.add(v[e], F.from_int(c))
    return v


def _mul_trunc(u, w, F, N):
    out = [F.from_int(0)] * N
    for i, a in enumerate(u):
        if a:
            for j in range(N - i):
                b = w[j]
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
    return out


def _valuation(v):
    return next((j for j, c in enumerate(v) if c), None)


def _ring_monomials(branches, F, N):
    """Yield ((a, b), vector) for monomials x^a y^b that are nonzero mod z^N.

    The vector concatenates the per-branch truncated series, branch-major.
    Monomials come in order of increasing minimal valuation, x-powers first.
    """
    xs = [_series_vec(br.x, F, N) for br in branches]
    ys = [_series_vec(br.y, F, N) for br in branches]
    one = [F.from_int(1)] + [F.from_int(0)] * (N - 1)
    vx = [_valuation(x) for x in xs]
    vy = [_valuation(y) for y in ys]
    mx = min((v for v in vx if v is not None), default=None)
    my = min((v for v in vy if v is not None), default=None)
    amax = (N - 1) // mx if mx else 0
    bmax = (N - 1) // my if my else 0
    items = []
    xpow = [list(one) for _ in branches]
    for a in range(amax + 1):
        cur = [list(p) for p in xpow]
        for b in range(bmax + 1):
            if any(any(c) for c in cur):
                val = min(_valuation(c) for c in cur if any(c))
                items.append((val, b, a, [c for part in cur for c in part]))
            else:
                break
            cur = [_mul_trunc(c, y, F, N) for c, y in zip(cur, ys)]
        xpow = [_mul_trunc(p, x, F, N) for p, x in zip(xpow, xs)]
        if not any(any(p) for p in xpow):
            break
    items.sort(key=lambda it: (it[0], it[1], it[2]))
    for val, b, a, vec in items:
        yield (a, b), vec


def semigroup_from_branch(branch, F=QQ, trunc=None):
    """Valuation semigroup of F[[x, y]] for a single branch.

    The truncation grows until the computed values contain a full run of
    multiplicity-many consecutive integers that is stable under a doubling
    of the truncation order.
    """
    if trunc is None:
        trunc = 4 * max([e for e, _ in branch.x + branch.y] + [2]) + 8
    prev = None
    for _ in range(8):
        vals = _values_mod(branch, F, trunc)
        cand = _semigroup_from_values(vals, trunc)
        if cand is not None and prev is not None and cand == prev:
            return cand
        prev = cand
        trunc *= 2
    if prev is None:
        raise SemigroupError("valuation set is not cofinite within the truncation order")
    return prev


def _values_mod(branch, F, N):
    ech = _Echelon(F, N)
    for _, vec in _ring_monomials((branch,), F, N):
        ech.insert(vec)
    return set(ech.rows)


def _semigroup_from_values(vals, N):
    if 0 not in vals:
        return None
    pos = sorted(v for v in vals if v > 0)
    if not pos:
        return None
    mult = pos[0]
    c = N
    while c - 1 in vals:
        c -= 1
    if N - c < mult or c == 0 and N < 1:
        return None
    gens = [v for v in vals if v < c + mult] + list(range(c, c + mult))
    try:
        G = NumericalSemigroup(tuple(gens))
    except SemigroupError:
        return None
    if set(G.members_below(N)) != vals:
        return None
    return G


@dataclass(frozen=True)
class RingInvariants:
    """delta, conductor exponents and linking numbers of a multibranch ring."""

    semigroups: tuple
    deltas: tuple
    linking: tuple  # kappa x kappa, zero diagonal
    conductors: tuple
    multiplicities: tuple
    delta: int


TRUNC_LIMIT = 256


def ring_delta(branches, F=QQ):
    """dim O/R and the conductor exponents for the ring generated by x, y, 1."""
    branches = tuple(branches)
    k = len(branches)
    start = 2 * max([e for b in branches for e, _ in b.x + b.y] + [1]) + 4
    N = start
    gmult = []
    for b in branches:
        vx = min((e for e, c in b.x if F.from_int(c)), default=None)
        vy = min((e for e, c in b.y if F.from_int(c)), default=None)
        cand = [v for v in (vx, vy) if v is not None]
        if not cand:
            raise SemigroupError("branch vanishes identically over this field")
        gmult.append(min(cand))
    while N <= TRUNC_LIMIT:
        ech = _Echelon(F, k * N)
        order = sorted(range(k * N), key=lambda idx: (idx % N, idx // N))
        pos = {idx: n for n, idx in enumerate(order)}
        for _, vec in _ring_monomials(branches, F, N):
            ech.insert([vec[idx] for idx in order])
        conds = []
        for i in range(k):
            c = N
            while c > 0:
                e = [F.from_int(0)] * (k * N)
                e[pos[i * N + c - 1]] = F.from_int(1)
                if not ech.contains(e):
                    break
                c -= 1
            conds.append(c)
        if all(N - c >= 2 * m + 1 for c, m in zip(conds, gmult)):
            dim_r = len(ech.rows)
            delta = sum(conds) - (dim_r - sum(N - c for c in conds))
            return delta, tuple(conds)
        N *= 2
    raise SemigroupError("conductor not found within the truncation limit")


def ring_invariants(spec, F=QQ):
    sgs = []
    deltas = []
    mults = []
    for b in spec.branches:
        G = semigroup_from_branch(b, F)
        sgs.append(G)
        deltas.append(G.delta)
        mults.append(G.multiplicity)
    k = len(spec.branches)
    link = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            dij, _ = ring_delta((spec.branches[i], spec.branches[j]), F)
            link[i][j] = link[j][i] = dij - deltas[i] - deltas[j]
    delta, conds = ring_delta(spec.branches, F)
    expected = sum(deltas) + sum(link[i][j] for i in range(k) for j in range(i + 1, k))
    if delta != expected:
        raise SemigroupError(f"delta {delta} disagrees with the branch/linking sum {expected}")
    return RingInvariants(tuple(sgs), tuple(deltas), tuple(tuple(r) for r in link),
                          conds, tuple(mults), delta)


# good reduction ------------------------------------------------------------

@dataclass(frozen=True)
class ReductionVerdict:
    p: int
    good: bool
    witness: str | None = None

    def __str__(self):
        return f"p={self.p}: " + ("GOOD" if self.good else f"BAD ({self.witness})")


def _render_combo(combo):
    """Render a Q-combination of monomials {(a, b): Fraction} with primitive integer coefficients."""
    den = reduce(lambda u, v: u * v // gcd(u, v), (c.denominator for c in combo.values() if c), 1)
    ints = {k: int(c * den) for k, c in combo.items() if c}
    g = reduce(gcd, (abs(v) for v in ints.values()), 0) or 1
    ints = {k: v // g for k, v in ints.items()}
    # y-powers first, leading term positive
    keys = sorted(ints, key=lambda ab: (-ab[1], -ab[0]))
    if ints[keys[0]] < 0:
        ints = {k: -v for k, v in ints.items()}
    out = []
    for k in keys:
        a, b = k
        c = ints[k]
        mono = "*".join(([f"y^{b}" if b > 1 else "y"] if b else []) + ([f"x^{a}" if a > 1 else "x"] if a else [])) or "1"
        mag = abs(c)
        txt = mono if mag == 1 else f"{mag}*{mono}"
        out.append(("-" if c < 0 else "") + txt if not out else (" - " if c < 0 else " + ") + txt)
    return "".join(out), ints


def _branch_witness(branch, p, GQ):
    """Find the first Q-semigroup element whose defining combination drops valuation mod p."""
    N = 2 * GQ.conductor + 4 * max([e for e, _ in branch.x + branch.y] + [1]) + 4
    ech = _Echelon(QQ, N, track=True)
    for ab, vec in _ring_monomials((branch,), QQ, N):
        ech.insert(vec, {ab: Fraction(1)})
    F = make_field(p)
    xs = _series_vec(branch.x, F, N)
    ys = _series_vec(branch.y, F, N)
    for pc in sorted(ech.rows):
        _, combo = ech.rows[pc]
        text, ints = _render_combo(combo)
        val = [0] * N
        for (a, b), c in ints.items():
            term = [F.from_int(1)] + [0] * (N - 1)
            for _ in range(a):
                term = _mul_trunc(term, xs, F, N)
            for _ in range(b):
                term = _mul_trunc(term, ys, F, N)
            val = [F.add(u, F.mul(F.from_int(c), w)) for u, w in zip(val, term)]
        vp = _valuation(val)
        if vp != pc:
            shown = "≥N" if vp is None else str(vp)
            return f"nu({text}) = {shown} vs {pc}"
    return None


def check_good_reduction(spec, p):
    """Compare semigroups and linking numbers over F_p with those over Q."""
    if isinstance(spec, Branch):
        spec = SingularitySpec((spec,))
    F = make_field(p)
    invQ = ring_invariants(spec, QQ)
    for i, b in enumerate(spec.branches):
        try:
            Gp = semigroup_from_branch(b, F)
        except SemigroupError as exc:
            return ReductionVerdict(p, False, f"branch {i}: {exc}")
        if Gp != invQ.semigroups[i]:
            w = _branch_witness(b, p, invQ.semigroups[i])
            return ReductionVerdict(p, False, w or f"branch {i}: semigroup {Gp} vs {invQ.semigroups[i]}")
    k = spec.kappa
    for i in range(k):
        for j in range(i + 1, k):
            try:
                dij, _ = ring_delta((spec.branches[i], spec.branches[j]), F)
            except SemigroupError as exc:
                return ReductionVerdict(p, False, f"branches {i},{j}: {exc}")
            lp = dij - invQ.deltas[i] - invQ.deltas[j]
            if lp != invQ.linking[i][j]:
                return ReductionVerdict(p, False, f"linking({i},{j}) = {lp} vs {invQ.linking[i][j]}")
    return ReductionVerdict(p, True, None)
