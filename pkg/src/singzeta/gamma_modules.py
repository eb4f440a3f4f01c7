"""Standard Gamma-modules, standard flags and the reciprocity involution."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .semigroup import NumericalSemigroup


class GuardExceeded(RuntimeError):
    """A configured size or node budget was exceeded."""


DELTA_GUARD = 16
FLAG_GUARD = 12


@dataclass(frozen=True)
class GammaModule:
    """Delta = Gamma union D, with D a subset of the gaps; 0 always belongs to Delta."""

    semigroup: NumericalSemigroup
    D: tuple

    def __post_init__(self):
        object.__setattr__(self, "D", tuple(sorted(self.D)))

    @property
    def dev(self):
        return len(self.D)

    def __contains__(self, n):
        return n in self.semigroup or n in self.D

    def members_below(self, bound):
        return [n for n in range(bound) if n in self]

    @property
    def missing(self):
        """Z_+ minus Delta: the gaps not in D."""
        ds = set(self.D)
        return tuple(g for g in self.semigroup.gaps if g not in ds)

    def is_module(self):
        G = self.semigroup
        return all((d + g) in self for d in self.D for g in G.generators)

    def label(self):
        return ",".join(map(str, self.D))

    def __repr__(self):
        return f"GammaModule(D=[{self.label()}])"


def _check_guard(G, limit):
    if G.delta > limit:
        raise GuardExceeded(f"delta={G.delta} exceeds the enumeration guard {limit}")


def enumerate_standard_deltas(G, guard=DELTA_GUARD):
    """All standard Gamma-modules, ordered lexicographically by D."""
    _check_guard(G, guard)
    gaps = list(G.gaps)
    gens = G.generators
    found = []

    def rec(idx, chosen):
        # gaps are decided from the largest down, so every d + g above is settled
        if idx < 0:
            found.append(tuple(sorted(chosen)))
            return
        g = gaps[idx]
        rec(idx - 1, chosen)
        if all((g + s) in G or (g + s) in chosen for s in gens):
            chosen.add(g)
            rec(idx - 1, chosen)
            chosen.discard(g)

    rec(len(gaps) - 1, set())
    found.sort()
    return [GammaModule(G, D) for D in found]


@dataclass(frozen=True)
class StandardFlagShape:
    base: GammaModule
    added: tuple

    @property
    def level(self):
        return len(self.added)

    def steps(self):
        out = [self.base]
        cur = set(self.base.D)
        for g in self.added:
            cur.add(g)
            out.append(GammaModule(self.base.semigroup, tuple(cur)))
        return out


def enumerate_standard_flags(G, ellmax, guard=FLAG_GUARD):
    """Chains Delta_0 < Delta_0+{g_1} < ... with each step a Gamma-module and g_i increasing."""
    _check_guard(G, guard)
    out = []
    gens = G.generators

    def rec(base, cur, added):
        out.append(StandardFlagShape(base, tuple(added)))
        if len(added) >= ellmax:
            return
        lo = added[-1] if added else -1
        for g in G.gaps:
            if g <= lo or g in cur:
                continue
            if all((g + s) in G or (g + s) in cur for s in gens):
                cur.add(g)
                added.append(g)
                rec(base, cur, added)
                added.pop()
                cur.discard(g)

    for base in enumerate_standard_deltas(G, guard):
        rec(base, set(base.D), [])
    return out


def reciprocity(delta_module):
    """Delta -> Delta^v - min(Delta^v), with Delta^v = Gamma minus ((c - 1) - D)."""
    G = delta_module.semigroup
    c = G.conductor
    removed = {c - 1 - d for d in delta_module.D}
    bound = 2 * c + G.multiplicity + 2
    dual = [n for n in range(bound) if n in G and n not in removed]
    m = min(dual)
    shifted = {n - m for n in dual}
    # everything from c on is in Gamma, and the shifted set is cofinite from c - m
    D = tuple(g for g in G.gaps if g in shifted or g >= bound - m)
    out = GammaModule(G, D)
    if not out.is_module():
        raise ValueError(f"reciprocity image of {delta_module} is not a Gamma-module")
    return out


def rational_catalan(r, s):
    """(1/(r+s)) * binomial(r+s, r) for coprime r, s."""
    n = comb(r + s, r)
    if n % (r + s):
        raise ValueError(f"({r},{s}) is not a coprime pair")
    return n // (r + s)
