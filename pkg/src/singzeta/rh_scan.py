"""Zeros of superpolynomials in t at numeric q, and the RH threshold search.

Roots are found with mpmath's simultaneous-iteration solver at extended
precision; each root's residual is certified before a verdict is issued.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

import mpmath

from .polyalg import TriPoly

DEFAULT_DPS = 40


class RootFailure(ArithmeticError):
    """The root finder did not converge or a residual failed certification."""


@dataclass
class RHVerdict:
    q: float
    roots: list
    residuals: list
    scaled_moduli: list  # |xi| sqrt(q)
    on_circle: list  # True, False or None (indeterminate)
    exceptional_pairs: int
    holds: bool
    indeterminate: bool = False
    notes: list = field(default_factory=list)

    @property
    def max_residual(self):
        return max(self.residuals, default=0.0)

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["q", "re", "im", "abs_sqrt_q", "verdict"])
        for z, s, flag in zip(self.roots, self.scaled_moduli, self.on_circle):
            tag = "on" if flag else ("indeterminate" if flag is None else "off")
            w.writerow([repr(float(self.q)), f"{float(z.real):.15g}", f"{float(z.imag):.15g}",
                        f"{float(s):.15g}", tag])
        return buf.getvalue()


def t_coefficients(H, q, a=0):
    """Coefficients (low to high in t) of H at numeric q and a, as mpmath numbers."""
    H = TriPoly.coerce(H)
    q = mpmath.mpf(q) if not isinstance(q, mpmath.mpf) else q
    lo = H.mindegree("t")
    hi = H.degree("t")
    coeffs = [mpmath.mpf(0)] * (hi - lo + 1)
    for (i, j, k), c in H.terms():
        val = mpmath.mpf(c.numerator) / c.denominator if hasattr(c, "numerator") else mpmath.mpf(c)
        val = val * q ** i * (mpmath.mpf(a) ** k if k else 1)
        coeffs[j - lo] += val
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    start = 0
    while start < len(coeffs) - 1 and coeffs[start] == 0:
        start += 1
    return coeffs[start:]


def poly_roots(coeffs, dps=DEFAULT_DPS):
    """All complex roots of sum coeffs[n] t^n with certified residuals."""
    if len(coeffs) <= 1:
        return [], []
    with mpmath.workdps(dps):
        high_first = list(reversed(coeffs))
        try:
            roots = mpmath.polyroots(high_first, maxsteps=400, extraprec=2 * dps)
        except mpmath.libmp.libhyper.NoConvergence as exc:
            raise RootFailure(f"no convergence for coefficients {coeffs}") from exc
        scale = max(abs(c) for c in coeffs)
        res = []
        for z in roots:
            val = mpmath.polyval(high_first, z)
            mag = sum(abs(c) * abs(z) ** n for n, c in enumerate(coeffs))
            res.append(float(abs(val) / max(mag, scale)))
        if max(res) > 1e-9:
            raise RootFailure(f"residual {max(res):.3g} too large for coefficients {coeffs}")
        return [complex(z) for z in roots], res


def rh_verdict(H, q, a=0, tol=1e-6, dps=DEFAULT_DPS):
    """Are all t-zeros of H(q, t, a) on |t| = q^(-1/2)?

    A root is on the circle when | |xi| sqrt(q) - 1 | <= tol, off it when the
    gap exceeds 10 tol, and indeterminate in between.  Exceptional pairs are
    the off-circle roots counted in pairs.
    """
    coeffs = t_coefficients(H, q, a)
    roots, res = poly_roots(coeffs, dps)
    sq = math.sqrt(float(q))
    scaled = [abs(z) * sq for z in roots]
    flags = []
    for s in scaled:
        gap = abs(s - 1)
        if gap <= tol:
            flags.append(True)
        elif gap > 10 * tol:
            flags.append(False)
        else:
            flags.append(None)
    off = sum(1 for f in flags if f is False)
    indet = any(f is None for f in flags)
    return RHVerdict(float(q), roots, res, scaled, flags, off // 2 + off % 2,
                     holds=(off == 0 and not indet), indeterminate=indet)


def _holds(H, q, a, tol):
    v = rh_verdict(H, q, a, tol)
    return v.holds


def rh_threshold(H, a=0, resolution=1e-4, step=1e-2, start=0.01, tol=1e-6, upper=0.999):
    """Bracket (lo, hi) for the end of the initial q-interval on which RH holds.

    The grid start, start+step, ... is sampled up to the first failure,
    which is then bisected down to the requested width.
    """
    if not _holds(H, start, a, tol):
        raise ValueError(f"RH fails already at the anchor q={start}")
    lo = start
    hi = None
    n = 1
    while True:
        qv = round(start + n * step, 12)
        if qv > upper:
            return lo, None
        if _holds(H, qv, a, tol):
            lo = qv
            n += 1
        else:
            hi = qv
            break
    while hi - lo > resolution:
        mid = (lo + hi) / 2
        if _holds(H, mid, a, tol):
            lo = mid
        else:
            hi = mid
    return lo, hi


def lee_yang_1d(N, u):
    """Zeros of the 1D Ising partition function in the fugacity mu = exp(2 i theta_n).

    cos(theta_n) = sqrt(1 - u) cos((2n - 1) pi / (2N)); all theta_n are real
    (zeros on |mu| = 1) exactly when u >= -tan^2(pi / (2N)).
    """
    if N < 1:
        raise ValueError("N must be positive")
    zeros = []
    for n in range(1, N + 1):
        c = mpmath.sqrt(1 - mpmath.mpf(u)) * mpmath.cos((2 * n - 1) * mpmath.pi / (2 * N))
        theta = mpmath.acos(c)
        zeros.append(complex(mpmath.exp(2j * theta)))
    bound = -math.tan(math.pi / (2 * N)) ** 2
    on_circle = u >= bound - 1e-15
    return zeros, on_circle, bound
