"""Counting standard modules over F_q.

Modules are enumerated as invariant subspaces of finite-dimensional
quotients of Omega (or of the colored module Omega~).  Every space used
here has a basis ordered by (zeta-degree, slot); multiplication by x and y
is strictly upper triangular in that order, so reduced echelon forms can
be built from the top index down with one linear solve per pivot row.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .exactfield import QQ, field_of_size, rref, solve_affine
from .gamma_modules import GuardExceeded, enumerate_standard_deltas
from .semigroup import SemigroupError, ring_delta, ring_invariants, semigroup_from_branch

DIM_GUARD = 24
NODE_BUDGET = 10 ** 9


class BadReduction(ValueError):
    """The field's characteristic is a prime of bad reduction for the spec."""


def default_threads():
    try:
        return max(1, int(os.environ.get("SINGZETA_THREADS", "1")))
    except ValueError:
        return 1


# small linear-algebra kernels on table-driven fields -------------------------

class _Lin:
    """Vector helpers bound to one field (uses full tables when available)."""

    def __init__(self, F):
        self.F = F
        self.q = F.q
        self.add = F.add_table
        self.mul = F.mul_table
        self.neg = F.neg_table
        self.inv = F.inv_table
        if self.add is None:
            raise GuardExceeded(f"field size {F.q} is too large for enumeration")

    def axpy(self, v, c, w):
        """v + c*w (new list)."""
        if not c:
            return list(v)
        add = self.add
        mc = self.mul[c]
        return [add[a][mc[b]] if b else a for a, b in zip(v, w)]

    def scale(self, c, w):
        mc = self.mul[c]
        return [mc[b] for b in w]


class Echelon:
    """Lowest-pivot reduced echelon basis, grown one vector at a time."""

    def __init__(self, lin, n):
        self.lin = lin
        self.n = n
        self.rows = {}

    def copy(self):
        e = Echelon(self.lin, self.n)
        e.rows = {p: list(r) for p, r in self.rows.items()}
        return e

    def reduce(self, v):
        lin = self.lin
        v = list(v)
        for p in sorted(self.rows):
            c = v[p]
            if c:
                v = lin.axpy(v, lin.neg[c], self.rows[p])
        return v

    def insert(self, v):
        """Insert v; return True if it enlarged the span."""
        lin = self.lin
        v = self.reduce(v)
        pc = next((j for j, c in enumerate(v) if c), None)
        if pc is None:
            return False
        v = lin.scale(lin.inv[v[pc]], v)
        for p, r in self.rows.items():
            c = r[pc]
            if c:
                self.rows[p] = lin.axpy(r, lin.neg[c], v)
        self.rows[pc] = v
        return True

    def contains(self, v):
        return not any(self.reduce(v))

    def __len__(self):
        return len(self.rows)


# the generic invariant-subspace search -------------------------------------

class NodeCounter:
    def __init__(self, budget=NODE_BUDGET):
        self.budget = budget
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise GuardExceeded(f"node budget {self.budget} exceeded")


def invariant_subspaces(lin, n, ops, pivots=None, max_codim=None, counter=None,
                        prune=None):
    """Yield every subspace of F^n invariant under the strictly upper-triangular ops.

    ops[g][c] is the image of basis vector c (a length-n list supported on
    indices > c).  Each result is a dict pivot -> reduced row.  Optional
    constraints: an exact pivot set, a bound on the codimension, and a
    callback prune(i, rows, nonpivots) that may veto a partial state
    covering indices >= i.
    """
    q = lin.q
    add = lin.add
    mul = lin.mul
    neg = lin.neg
    counter = counter or NodeCounter()
    pivset = None if pivots is None else frozenset(pivots)
    rows = {}
    nonpiv = []

    def residual(v):
        # v minus its projection on the current rows, read at non-pivot columns
        out = list(v)
        for p, r in rows.items():
            c = out[p]
            if c:
                nc = neg[c]
                mnc = mul[nc]
                for j in range(p, n):
                    b = r[j]
                    if b:
                        out[j] = add[out[j]][mnc[b]]
        return out

    def rec(i):
        counter.tick()
        if i < 0:
            yield {p: list(r) for p, r in rows.items()}
            return
        want_pivot = None if pivset is None else (i in pivset)
        # option 1: i is not a pivot
        if want_pivot is not True and (max_codim is None or len(nonpiv) < max_codim):
            nonpiv.append(i)
            if prune is None or prune(i, rows, nonpiv):
                yield from rec(i - 1)
            nonpiv.pop()
        if want_pivot is False:
            return
        # option 2: a pivot row e_i + sum_{c in nonpiv} a_c e_c
        free = list(nonpiv)  # all > i
        eqs = []
        for G in ops:
            r0 = residual(G[i])
            rc = [residual(G[c]) for c in free]
            for f in free:
                coeffs = [rc[k][f] for k in range(len(free))]
                rhs = neg[r0[f]]
                if any(coeffs) or rhs:
                    eqs.append((coeffs, rhs))
        if free and eqs:
            sol = solve_affine(eqs, len(free), lin.F)
            if sol is None:
                return
            part, kernel = sol
        elif eqs:
            if any(rhs for _, rhs in eqs):
                return
            part, kernel = [], []
        else:
            part = [0] * len(free)
            kernel = [[1 if k == m else 0 for k in range(len(free))] for m in range(len(free))]
        for cs in product(range(q), repeat=len(kernel)):
            a = list(part)
            for c, kv in zip(cs, kernel):
                if c:
                    mc = mul[c]
                    a = [add[x][mc[y]] if y else x for x, y in zip(a, kv)]
            row = [0] * n
            row[i] = 1
            for c, val in zip(free, a):
                row[c] = val
            rows[i] = row
            if prune is None or prune(i, rows, nonpiv):
                yield from rec(i - 1)
            del rows[i]

    yield from rec(n - 1)


# ring models ---------------------------------------------------------------

def _series_list(terms, F, N):
    v = [0] * N
    for e, c in terms:
        if e < N:
            v[e] = F.add(v[e], F.from_int(c))
    return v


def _mult_op(lin, basis, index, series_by_slot):
    """Columns of multiplication by a per-slot series on a (degree, slot) basis."""
    n = len(basis)
    cols = []
    for (j, s) in basis:
        col = [0] * n
        f = series_by_slot[s]
        for k, c in enumerate(f):
            if c and k > 0:
                tgt = index.get((j + k, s))
                if tgt is not None:
                    col[tgt] = lin.add[col[tgt]][c]
        cols.append(col)
    return cols


def _graded_basis(dims):
    """Basis (j, s) for j < dims[s], ordered by (j, s)."""
    basis = sorted(((j, s) for s, d in enumerate(dims) for j in range(d)))
    return basis, {b: n for n, b in enumerate(basis)}


_QQ_CACHE = {}


def _invariants_over_q(spec):
    key = spec.branches
    if key not in _QQ_CACHE:
        _QQ_CACHE[key] = ring_invariants(spec, QQ)
    return _QQ_CACHE[key]


@dataclass
class RingModel:
    """V = Omega / c Omega with the x, y actions, over one finite field."""

    spec: object
    field: object
    lin: _Lin
    slot_branch: tuple
    conductors: tuple  # per slot
    mults: tuple  # per slot
    delta: int
    basis: list
    index: dict
    X: list
    Y: list
    xs: list  # per slot coefficient lists (long enough for the ambient A)
    ys: list
    R: Echelon = None  # image of R in V
    semigroup: object = None  # unibranch only

    @property
    def q(self):
        return self.field.q

    @property
    def dim(self):
        return len(self.basis)

    @property
    def tau(self):
        return len(self.slot_branch)

    @property
    def unibranch(self):
        return self.tau == 1

    @property
    def rk_min(self):
        return max(self.spec.colors)

    @property
    def rk_max(self):
        return sum(self.mults)

    def unit(self):
        v = [0] * self.dim
        for s in range(self.tau):
            v[self.index[(0, s)]] = 1
        return v


def build_ring_model(spec, F, check_reduction=True, dim_guard=DIM_GUARD):
    """Set up V = Omega / c Omega for spec over F (a FieldSpec or a field size)."""
    if isinstance(F, int):
        F = field_of_size(F)
    lin = _Lin(F)
    invQ = _invariants_over_q(spec)
    if check_reduction:
        try:
            invF = ring_invariants(spec, F)
        except SemigroupError as exc:
            raise BadReduction(f"p={F.p}: {exc}") from exc
        if (invF.semigroups != invQ.semigroups or invF.linking != invQ.linking):
            raise BadReduction(f"p={F.p} is a prime of bad reduction for {spec.label or 'spec'}")
    conds_b = invQ.conductors
    slot_branch = spec.slot_branch
    conds = tuple(conds_b[b] for b in slot_branch)
    mults = []
    for b in slot_branch:
        br = spec.branches[b]
        vals = [e for e, c in br.x + br.y if F.from_int(c)]
        mults.append(min(vals))
    dims = list(conds)
    basis, index = _graded_basis(dims)
    if len(basis) > dim_guard:
        raise GuardExceeded(f"dim V = {len(basis)} exceeds the guard {dim_guard}")
    N = max(c + m for c, m in zip(conds, mults)) + 1
    xs = [_series_list(spec.branches[b].x, F, N) for b in slot_branch]
    ys = [_series_list(spec.branches[b].y, F, N) for b in slot_branch]
    X = _mult_op(lin, basis, index, xs)
    Y = _mult_op(lin, basis, index, ys)
    model = RingModel(spec, F, lin, slot_branch, conds, tuple(mults), invQ.delta,
                      basis, index, X, Y, xs, ys)
    model.R = krylov(lin, len(basis), [X, Y], [model.unit()])
    if spec.kappa == 1:
        model.semigroup = invQ.semigroups[0]
    return model


def apply_op(lin, op, v):
    n = len(v)
    out = [0] * n
    add = lin.add
    mul = lin.mul
    for c, a in enumerate(v):
        if a:
            ma = mul[a]
            for j, b in enumerate(op[c]):
                if b:
                    out[j] = add[out[j]][ma[b]]
    return out


def krylov(lin, n, ops, seeds):
    """Smallest op-invariant subspace containing the seeds, as an Echelon."""
    ech = Echelon(lin, n)
    todo = list(seeds)
    while todo:
        v = todo.pop()
        if ech.insert(v):
            for G in ops:
                todo.append(apply_op(lin, G, v))
    return ech


def quotient(lin, n, ops, K):
    """Basis of F^n / K (the non-pivot coordinates) with the induced operators."""
    free = [j for j in range(n) if j not in K.rows]
    pos = {j: k for k, j in enumerate(free)}
    qops = []
    for G in ops:
        cols = []
        for j in free:
            v = K.reduce(G[j])
            cols.append([v[f] for f in free])
        qops.append(cols)
    return free, pos, qops


def lift(free, n, row):
    v = [0] * n
    for k, j in enumerate(free):
        v[j] = row[k]
    return v


# statistics of a module ------------------------------------------------------

class RankCalculator:
    """rk(M) = dim M / (xM + yM), computed in the ambient sum of Omega_s / zeta^(c_s + e_s)."""

    def __init__(self, model, fixed_rows=()):
        self.model = model
        lin = model.lin
        dims = [c + e for c, e in zip(model.conductors, model.mults)]
        self.abasis, self.aindex = _graded_basis(dims)
        self.XA = _mult_op(lin, self.abasis, self.aindex, model.xs)
        self.YA = _mult_op(lin, self.abasis, self.aindex, model.ys)
        self.extra = sum(model.mults)
        self.base = Echelon(lin, len(self.abasis))
        for r in fixed_rows:
            self._add_images(self.base, r)
        self.nfixed = len(fixed_rows)

    def embed(self, v):
        out = [0] * len(self.abasis)
        for k, (j, s) in enumerate(self.model.basis):
            if v[k]:
                out[self.aindex[(j, s)]] = v[k]
        return out

    def _add_images(self, ech, v):
        a = self.embed(v)
        lin = self.model.lin
        ech.insert(apply_op(lin, self.XA, a))
        ech.insert(apply_op(lin, self.YA, a))

    def rank(self, rows):
        """rows: additional basis vectors of M / c (in V coordinates) beyond the fixed ones."""
        ech = self.base.copy()
        for r in rows:
            self._add_images(ech, r)
        return self.nfixed + len(rows) + self.extra - len(ech)


def _dim_subspace_with_zeros(lin, P, zero_coords):
    """dim of {p in span(P) : p_s = 0 for s in zero_coords}."""
    if not P:
        return 0
    k = len(P)
    # solve sum lambda_i P_i restricted to zero_coords = 0
    eqs = [([P[i][s] for i in range(k)], 0) for s in zero_coords]
    if not eqs:
        return k
    sol = solve_affine(eqs, k, lin.F)
    return len(sol[1])


def count_nowhere_zero(lin, P, tau):
    """#{p in span(P) with every coordinate nonzero}, by inclusion-exclusion."""
    ech = Echelon(lin, tau)
    for p in P:
        ech.insert(p)
    basis = list(ech.rows.values())
    total = 0
    q = lin.q
    for k in range(tau + 1):
        for S in combinations(range(tau), k):
            total += (-1) ** k * q ** _dim_subspace_with_zeros(lin, basis, S)
    return total


def constants_projection(model, rows):
    """Projections of rows onto the valuation-0 coordinates, one entry per slot."""
    idx = [model.index[(0, s)] for s in range(model.tau)]
    return [[r[i] for i in idx] for r in rows]


def is_standard(model, P):
    """O M = Omega: for each branch, the constants of M project onto all its slots."""
    lin = model.lin
    for b in range(model.spec.kappa):
        slots = [s for s, bb in enumerate(model.slot_branch) if bb == b]
        ech = Echelon(lin, len(slots))
        for p in P:
            ech.insert([p[s] for s in slots])
        if len(ech) < len(slots):
            return False
    return True


# count records ---------------------------------------------------------------

@dataclass
class CountRecord:
    """Joint counts of standard modules by colength d and q-rank r at one field size."""

    q: int
    counts: dict  # (d, r) -> int
    cells: dict = field(default_factory=dict)  # D tuple -> {(d, r): int}
    provenance: list = field(default_factory=list)

    def total(self):
        return sum(self.counts.values())

    def rows(self):
        return sorted(self.counts.items())


def _merge(dst, src, w=1):
    for k, v in src.items():
        dst[k] = dst.get(k, 0) + v * w


def _d_label(D):
    return ",".join(map(str, D)) if D else "-"


def read_checkpoint(path):
    """Parse 'q TAB D-set TAB d TAB r TAB count' lines into {(q, D): {(d, r): count}}."""
    out = {}
    if not path or not os.path.exists(path):
        return out
    with open(path) as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            qs, ds, d, r, c = line.split("\t")
            D = () if ds == "-" else tuple(int(x) for x in ds.split(","))
            cell = out.setdefault((int(qs), D), {})
            if d != "*":
                cell[(int(d), int(r))] = int(c)
    return out


def _append_checkpoint(path, q, D, cell):
    if not path:
        return
    with open(path, "a") as fh:
        if not cell:
            fh.write(f"{q}\t{_d_label(D)}\t*\t*\t0\n")
        for (d, r), c in sorted(cell.items()):
            fh.write(f"{q}\t{_d_label(D)}\t{d}\t{r}\t{c}\n")


def _unit_trick_setup(model):
    lin = model.lin
    n = model.dim
    free, pos, qops = quotient(lin, n, [model.X, model.Y], model.R)
    fixed = [model.R.rows[p] for p in sorted(model.R.rows)]
    ranker = RankCalculator(model, fixed)
    return free, qops, fixed, ranker


def _class_weight(model, fixed, lifted):
    """|U| / #units(M1) for M1 = fixed + lifted rows (M1 contains 1)."""
    lin = model.lin
    q = lin.q
    tau = model.tau
    rows = fixed + lifted
    P = constants_projection(model, rows)
    ech = Echelon(lin, tau)
    for p in P:
        ech.insert(p)
    dimP = len(ech)
    units = q ** (len(rows) - dimP) * count_nowhere_zero(lin, P, tau)
    U = (q - 1) ** tau * q ** (model.dim - tau)
    return Fraction(U, units), P


def count_cell(model, delta_module, counter=None):
    """Counts {(d, r): n} of standard modules with Delta(M) = Delta (unibranch)."""
    if not model.unibranch:
        raise ValueError("count_cell needs a unibranch model")
    free, qops, fixed, ranker = _unit_trick_setup(model)
    D = tuple(delta_module.D if hasattr(delta_module, "D") else delta_module)
    pivots = [free.index(g) for g in D if g in free]
    if len(pivots) != len(D):
        return {}
    q = model.q
    d = model.delta - len(D)
    weight = q ** d
    out = {}
    n = len(free)
    for rows in invariant_subspaces(model.lin, n, qops, pivots=pivots, counter=counter):
        lifted = [lift(free, model.dim, rows[p]) for p in sorted(rows)]
        r = ranker.rank(lifted)
        out[(d, r)] = out.get((d, r), 0) + weight
    return out


def _cell_task(args):
    spec, q, D = args
    model = build_ring_model(spec, q, check_reduction=False)
    return D, count_cell(model, D)


def count_standard_modules(model, threads=None, checkpoint=None, counter=None):
    """Complete (d, r) counts of standard modules for the model's ring and colors."""
    q = model.q
    lin = model.lin
    threads = threads or default_threads()
    if model.dim == 0:
        return CountRecord(q, {(0, model.rk_max): 1}, provenance=["exact"])
    if model.unibranch:
        deltas = enumerate_standard_deltas(model.semigroup)
        done = read_checkpoint(checkpoint)
        cells = {}
        todo = []
        for dm in deltas:
            key = (q, dm.D)
            if key in done:
                cells[dm.D] = done[key]
            else:
                todo.append(dm.D)
        if threads > 1 and len(todo) > 1:
            from concurrent.futures import ProcessPoolExecutor
            with ProcessPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(_cell_task, [(model.spec, q, D) for D in todo]))
        else:
            results = [(D, count_cell(model, D, counter)) for D in todo]
        for D, cell in results:
            cells[D] = cell
            _append_checkpoint(checkpoint, q, D, cell)
        counts = {}
        for D in sorted(cells):
            _merge(counts, cells[D])
        return CountRecord(q, counts, {D: cells[D] for D in sorted(cells)}, ["exact"])
    if model.tau <= q:
        counts = _count_by_unit_orbits(model, counter)
    else:
        counts = _count_direct(model, counter)
    return CountRecord(q, counts, provenance=["exact"])


def _count_by_unit_orbits(model, counter=None):
    free, qops, fixed, ranker = _unit_trick_setup(model)
    counts = {}
    n = len(free)
    for rows in invariant_subspaces(model.lin, n, qops, counter=counter):
        lifted = [lift(free, model.dim, rows[p]) for p in sorted(rows)]
        w, P = _class_weight(model, fixed, lifted)
        if not is_standard(model, P):
            continue
        d = model.dim - len(fixed) - len(lifted)
        r = ranker.rank(lifted)
        counts[(d, r)] = counts.get((d, r), 0) + w
    return _integral(counts)


def _count_direct(model, counter=None):
    ranker = RankCalculator(model)
    counts = {}
    n = model.dim
    for rows in invariant_subspaces(model.lin, n, [model.X, model.Y], counter=counter):
        basis = [rows[p] for p in sorted(rows)]
        P = constants_projection(model, basis)
        if not is_standard(model, P):
            continue
        d = n - len(basis)
        r = ranker.rank(basis)
        counts[(d, r)] = counts.get((d, r), 0) + 1
    return _integral(counts)


def _integral(counts):
    out = {}
    for k, v in counts.items():
        v = Fraction(v)
        if v.denominator != 1:
            raise ArithmeticError(f"non-integral orbit count {v} at {k}")
        if v:
            out[k] = int(v)
    return out


def all_standard_modules(model, counter=None):
    """Every standard module explicitly (direct search over V); tiny instances only."""
    n = model.dim
    ranker = RankCalculator(model)
    for rows in invariant_subspaces(model.lin, n, [model.X, model.Y], counter=counter):
        basis = [rows[p] for p in sorted(rows)]
        P = constants_projection(model, basis)
        if is_standard(model, P):
            yield basis, n - len(basis), ranker.rank(basis)


# shift sets and the L-function of uncolored rings --------------------------------

def _shift(model, v, m):
    """z^m v in V; m is an integer (all slots) or a per-slot tuple."""
    ms = (m,) * model.tau if isinstance(m, int) else m
    out = [0] * model.dim
    for k, c in enumerate(v):
        if c:
            j, s = model.basis[k]
            tgt = model.index.get((j + ms[s], s))
            if tgt is not None:
                out[tgt] = c
    return out


def shift_set(model, rows):
    """{m < 2 delta : z^m M in R} for M spanned by rows (plus the conductor)."""
    if not model.unibranch:
        raise ValueError("shift sets are defined here for unibranch models")
    out = []
    for m in range(model.dim):
        if all(model.R.contains(_shift(model, r, m)) for r in rows):
            out.append(m)
    return out


def _module_generators(model, ranker, rows):
    """A subset of rows spanning M modulo xM + yM (hence generating M over R)."""
    lin = model.lin
    ech = Echelon(lin, len(ranker.abasis))
    for r in rows:
        ranker._add_images(ech, r)
    gens = []
    for r in rows:
        a = ranker.embed(r)
        if ech.insert(a):
            gens.append(r)
    return gens


def _multiplier_columns(model, g, m):
    """Columns of u -> z^m (u g) on V, one per basis vector of u."""
    cols = []
    for (j, s) in model.basis:
        v = [0] * model.dim
        for k, c in enumerate(g):
            if c:
                jj, ss = model.basis[k]
                if ss == s:
                    tgt = model.index.get((jj + j + m[s], s))
                    if tgt is not None:
                        v[tgt] = c
        cols.append(v)
    return cols


def _units_in_kernel(model, eqs):
    """#{u in V with every constant coordinate nonzero and eqs(u) = 0} (eqs homogeneous)."""
    lin = model.lin
    n = model.dim
    const = [model.index[(0, s)] for s in range(model.tau)]
    total = 0
    for k in range(model.tau + 1):
        for S in combinations(const, k):
            extra = [([1 if c == i else 0 for c in range(n)], 0) for i in S]
            allq = eqs + extra
            if allq:
                sol = solve_affine(allq, n, lin.F)
                dim = len(sol[1])
            else:
                dim = n
            total += (-1) ** k * lin.q ** dim
    return total


def _ideal_units(model, gens, m):
    """#{units u of O/c : z^m u g in R for every generator g}."""
    R = model.R
    eqs = []
    for g in gens:
        cols = [R.reduce(c) for c in _multiplier_columns(model, g, m)]
        for f in range(model.dim):
            if f in R.rows:
                continue
            coeffs = [c[f] for c in cols]
            if any(coeffs):
                eqs.append((coeffs, 0))
    return _units_in_kernel(model, eqs)


def _branch_shifts(model):
    """Per-branch shift ranges 0..c_i (c_i standing for every m_i >= c_i)."""
    conds = []
    for b in range(model.spec.kappa):
        s = model.slot_branch.index(b)
        conds.append(model.conductors[s])
    return conds


def _shift_weight(m, conds):
    """(1 - t)^kappa prod_i w_i(m_i) as {t-exponent: coefficient}."""
    poly = {0: 1}
    for mi, ci in zip(m, conds):
        piece = {mi: 1} if mi == ci else {mi: 1, mi + 1: -1}
        new = {}
        for e1, c1 in poly.items():
            for e2, c2 in piece.items():
                new[e1 + e2] = new.get(e1 + e2, 0) + c1 * c2
        poly = new
    return poly


def L_terms(model, counter=None):
    """L = (1-t)^kappa Z at the model's q as {(t-exponent, rank): integer}.

    Z sums t^dim(R/I) over ideals I of R; every such I is z^m M for a
    standard module M and a multi-index m, so Z is assembled from the
    standard modules and, for each, the multi-indices with z^m M in R.
    Memberships only depend on min(m_i, c_i).
    """
    if not model.spec.uncolored:
        raise ValueError("use the colored module sum for colored specs")
    conds = _branch_shifts(model)
    slot_of_branch = list(model.slot_branch)
    shifts = list(product(*[range(c + 1) for c in conds]))
    q = model.q
    n = model.dim
    out = {}

    def add(dm, r, weight):
        for m in shifts:
            ms = tuple(m[slot_of_branch[s]] for s in range(model.tau))
            c = weight(ms)
            if not c:
                continue
            for e, w in _shift_weight(m, conds).items():
                key = (e + dm, r)
                out[key] = out.get(key, 0) + c * w

    if model.tau <= q:
        free, qops, fixed, ranker = _unit_trick_setup(model)
        for rows in invariant_subspaces(model.lin, len(free), qops, counter=counter):
            lifted = [lift(free, n, rows[p]) for p in sorted(rows)]
            allrows = fixed + lifted
            P = constants_projection(model, allrows)
            if not is_standard(model, P):
                continue
            r = ranker.rank(lifted)
            d = n - len(allrows)
            units = Fraction(q ** (len(allrows) - _rank_of(model, P)) * count_nowhere_zero(model.lin, P, model.tau))
            gens = _module_generators(model, ranker, allrows)
            add(d - model.delta, r, lambda ms: Fraction(_ideal_units(model, gens, ms)) / units)
    else:
        for basis, d, r in all_standard_modules(model, counter):
            add(d - model.delta, r,
                lambda ms: 1 if all(model.R.contains(_shift(model, b, ms)) for b in basis) else 0)
    return _integral(out)


def _rank_of(model, P):
    ech = Echelon(model.lin, model.tau)
    for p in P:
        ech.insert(p)
    return len(ech)


def unibranch_L_terms(model, counter=None):
    """L at the model's q for an uncolored unibranch ring (see L_terms)."""
    if not model.unibranch:
        raise ValueError("unibranch only")
    return L_terms(model, counter)

# flag oracle -------------------------------------------------------------------

FLAG_DIM_GUARD = 8


def flag_oracle(model, ellmax=None, counter=None):
    """Sum over standard flags of t^dim(O/M_l) a^l at the model's q, as {(d, l): count}.

    Direct enumeration of M_0 and of every admissible chain of one-dimensional
    extensions with increasing new valuations (unibranch, dim V <= 8).
    """
    if not model.unibranch:
        raise ValueError("the flag oracle is implemented for unibranch models")
    if model.dim > FLAG_DIM_GUARD:
        raise GuardExceeded(f"dim V = {model.dim} exceeds the flag-oracle guard {FLAG_DIM_GUARD}")
    lin = model.lin
    n = model.dim
    q = lin.q
    ellmax = n if ellmax is None else ellmax
    out = {}

    def extend(ech, last_g, level):
        d = n - len(ech)
        out[(d, level)] = out.get((d, level), 0) + 1
        if level >= ellmax:
            return
        # S = {w : Xw, Yw in M}; work with reduced representatives modulo M
        nonpiv = [j for j in range(n) if j not in ech.rows]
        cols = []
        for j in nonpiv:
            e = [0] * n
            e[j] = 1
            cols.append(e)
        eqs = []
        for G in (model.X, model.Y):
            imgs = [ech.reduce(apply_op(lin, G, c)) for c in cols]
            for f in nonpiv:
                coeffs = [im[f] for im in imgs]
                if any(coeffs):
                    eqs.append((coeffs, 0))
        if eqs:
            sol = solve_affine(eqs, len(nonpiv), lin.F)
            kernel = sol[1]
        else:
            kernel = [[1 if k == m else 0 for k in range(len(nonpiv))] for m in range(len(nonpiv))]
        if not kernel:
            return
        # enumerate lines: normalized vectors (first nonzero coefficient = 1)
        k = len(kernel)
        seen = set()
        for cs in product(range(q), repeat=k):
            if not any(cs):
                continue
            first = next(c for c in cs if c)
            if first != 1:
                continue
            w = [0] * len(nonpiv)
            for c, kv in zip(cs, kernel):
                if c:
                    mc = lin.mul[c]
                    w = [lin.add[x][mc[y]] if y else x for x, y in zip(w, kv)]
            vec = lift(nonpiv, n, w)
            g = next(j for j, c in enumerate(vec) if c)
            vec = lin.scale(lin.inv[vec[g]], vec)
            key = tuple(vec)
            if key in seen or g <= last_g:
                continue
            seen.add(key)
            nxt = ech.copy()
            nxt.insert(vec)
            if counter:
                counter.tick()
            extend(nxt, g, level + 1)

    for rows in invariant_subspaces(lin, n, [model.X, model.Y], counter=counter):
        if 0 not in rows:
            continue
        ech = Echelon(lin, n)
        ech.rows = {p: list(r) for p, r in rows.items()}
        extend(ech, -1, 0)
    return out


# truncated colored module counts (Z_sigma) -------------------------------------

@dataclass
class ColoredModel:
    """Omega~ / m~^(T+1) Omega~ with the m~ action, for the colored zeta function."""

    spec: object
    field: object
    lin: _Lin
    T: int
    N: int
    basis: list  # Omega_N basis (j, s)
    index: dict
    S: Echelon  # Omega~ mod zeta^N
    K: Echelon  # m~^(T+1) Omega~ mod zeta^N
    ops: list  # multiplication by the generators of m~, on Omega_N
    free: list
    qops: list
    slot_branch: tuple


def _truncated_colored(spec, F, T, N, lin):
    slot_branch = spec.slot_branch
    tau = len(slot_branch)
    basis, index = _graded_basis([N] * tau)
    n = len(basis)
    xs = [_series_list(spec.branches[b].x, F, N) for b in slot_branch]
    ys = [_series_list(spec.branches[b].y, F, N) for b in slot_branch]
    X = _mult_op(lin, basis, index, xs)
    Y = _mult_op(lin, basis, index, ys)
    # varpi_m = sum_i eps_{slot(i, m_i)}
    starts = []
    acc = 0
    for c in spec.colors:
        starts.append(acc)
        acc += c
    varpis = []
    for ms in product(*[range(c) for c in spec.colors]):
        v = [0] * n
        for i, m in enumerate(ms):
            v[index[(0, starts[i] + m)]] = 1
        varpis.append(v)
    # generators of m~: x * varpi, y * varpi as operators (componentwise products)
    ops = []
    for vp in varpis:
        sel = {s for s in range(tau) if vp[index[(0, s)]]}
        for ser in (xs, ys):
            masked = [ser[s] if s in sel else [0] * N for s in range(tau)]
            ops.append(_mult_op(lin, basis, index, masked))
    # Omega~ = sum_m R varpi_m (R acts through X, Y)
    S = krylov(lin, n, [X, Y], varpis)
    K = Echelon(lin, n)
    for v in S.rows.values():
        K.insert(v)
    for _ in range(T + 1):
        nxt = Echelon(lin, n)
        for v in list(K.rows.values()):
            for G in ops:
                nxt.insert(apply_op(lin, G, v))
        K = nxt
    return basis, index, S, K, ops


def build_colored_model(spec, F, T, N=None):
    """Truncated model for Z_sigma; N grows until dim(Omega~/m~^(T+1)) is stable."""
    if isinstance(F, int):
        F = field_of_size(F)
    lin = _Lin(F)
    inv = _invariants_over_q(spec)
    step = max(max(c for c in inv.conductors), 1) + 2
    N = N or (max(inv.conductors) + (T + 2) * max(inv.multiplicities) + 2)
    prev = None
    for _ in range(6):
        basis, index, S, K, ops = _truncated_colored(spec, F, T, N, lin)
        dimq = len(S) - len(K)
        if prev is not None and dimq == prev[0]:
            break
        prev = (dimq, basis, index, S, K, ops)
        N += step
    else:
        raise GuardExceeded("truncated colored module did not stabilize")
    n = len(basis)
    # quotient S / K: coordinates are S-pivots that are not K-pivots, after reducing mod K
    srows = [K.reduce(v) for v in S.rows.values()]
    Sred = Echelon(lin, n)
    for v in srows:
        Sred.insert(v)
    free = sorted(Sred.rows)
    if any(j in K.rows for j in free):
        raise ArithmeticError("quotient basis overlaps the submodule pivots")
    # operators on S/K in the basis {Sred.rows[f]}
    qops = []
    for G in ops:
        cols = []
        for f in free:
            img = K.reduce(apply_op(lin, G, Sred.rows[f]))
            # express img in the Sred basis: its coefficient at pivot f' is img[f']
            cols.append([img[f2] for f2 in free])
        qops.append(cols)
    return ColoredModel(spec, F, lin, T, N, basis, index, S, K, ops, free, qops, spec.slot_branch)


def colored_zeta_counts(cm, counter=None):
    """{(d, r): count} over R~-invariant M with codim d <= T and rk(M e_i) >= c_i."""
    lin = cm.lin
    n = len(cm.basis)
    nq = len(cm.free)
    free = cm.free
    Srows = {}
    Sred = Echelon(lin, n)
    for v in cm.S.rows.values():
        Sred.insert(cm.K.reduce(v))
    colors = cm.spec.colors
    starts = []
    acc = 0
    for c in colors:
        starts.append(acc)
        acc += c
    branch_coords = []
    for b, c in enumerate(colors):
        slots = set(range(starts[b], starts[b] + c))
        branch_coords.append([k for k, (j, s) in enumerate(cm.basis) if s in slots])
    Kvecs = list(cm.K.rows.values())
    Kproj = []
    for coords in branch_coords:
        ech = Echelon(lin, len(coords))
        for v in Kvecs:
            ech.insert([v[k] for k in coords])
        Kproj.append(ech)
    out = {}
    for rows in invariant_subspaces(lin, nq, cm.qops, max_codim=cm.T, counter=counter):
        vecs = []
        for p in sorted(rows):
            v = [0] * n
            for k, f in enumerate(free):
                c = rows[p][k]
                if c:
                    v = lin.axpy(v, c, Sred.rows[f])
            vecs.append(v)
        images = [apply_op(lin, G, v) for v in vecs for G in cm.ops]
        ech = Echelon(lin, n)
        for v in Kvecs:
            ech.insert(v)
        before = len(ech)
        for im in images:
            ech.insert(im)
        r = len(vecs) - (len(ech) - before)
        ok = True
        for b, coords in enumerate(branch_coords):
            e1 = Kproj[b].copy()
            for v in vecs:
                e1.insert([v[k] for k in coords])
            e2 = Kproj[b].copy()
            for im in images:
                e2.insert([im[k] for k in coords])
            if len(e1) - len(e2) < colors[b]:
                ok = False
                break
        if not ok:
            continue
        d = nq - len(vecs)
        out[(d, r)] = out.get((d, r), 0) + 1
    return out
