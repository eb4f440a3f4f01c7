"""Motivic superpolynomials, L-functions and related invariants of plane curve singularities.

Counts of standard modules over finite fields are interpolated in q into
exact superpolynomials; the package also provides the flagged L-function,
quasi-rho invariants, the refined Witten index and RH root scans.
"""

from .polyalg import TriPoly, parse
from .semigroup import (Branch, NumericalSemigroup, SingularitySpec, cable_spec, hopf_spec,
                        ring_invariants, semigroup, torus_spec)
from .superzeta import InvariantBundle, flagged_L, motivic_bundle, motivic_superpolynomial

__all__ = ["TriPoly", "parse", "Branch", "NumericalSemigroup", "SingularitySpec", "cable_spec",
           "hopf_spec", "ring_invariants", "semigroup", "torus_spec", "InvariantBundle",
           "flagged_L", "motivic_bundle", "motivic_superpolynomial"]

__version__ = "0.1.0"
