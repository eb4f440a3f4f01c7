"""Named singularities and printed reference polynomials.

The reference polynomials are kept as LaTeX source strings and converted
with `latex_to_poly`, so that they can be compared verbatim with what the
library computes.
"""

from __future__ import annotations

import re

from .polyalg import parse
from .semigroup import Branch, SingularitySpec, hopf_spec, torus_spec


# specs -------------------------------------------------------------------------

def trefoil():
    return torus_spec(2, 3, "trefoil")


def torus2(p):
    """T(2p+1, 2): x = z^2, y = z^(2p+1)."""
    return torus_spec(2, 2 * p + 1, f"T({2 * p + 1},2)")


def cable13():
    """C[[z^4, z^6 + z^7]], the cable Cab(13,2)Cab(2,3) with semigroup <4,6,13>."""
    return SingularitySpec((Branch(((4, 1),), ((6, 1), (7, 1))),), (1,), "Cab(13,2)Cab(2,3)")


def cable13_char2():
    """x = z^4 + z^5, y = z^6: the same semigroup, with good reduction in characteristic 2."""
    return SingularitySpec((Branch(((4, 1), (5, 1)), ((6, 1),)),), (1,), "Cab(13,2)Cab(2,3)/char2")


def double_trefoil():
    """T(6,4): two cusps y^2 = x^3 and y^2 = -x^3 with linking number 6."""
    return SingularitySpec((Branch(((2, 1),), ((3, 1),)), Branch(((2, -1),), ((3, 1),))),
                           (1, 1), "T(6,4)")


def hopf(kappa=2, colors=None):
    return hopf_spec(kappa, colors)


NAMED = {
    "trefoil": trefoil,
    "T(5,2)": lambda: torus2(2),
    "T(7,2)": lambda: torus2(3),
    "T(9,2)": lambda: torus2(4),
    "cable13": cable13,
    "T(6,4)": double_trefoil,
    "hopf": hopf,
}


# LaTeX cleaning --------------------------------------------------------------------

_DROP = re.compile(r"\\(bigl|bigr|Bigl|Bigr|left|right|,|!|;)")


def latex_to_poly(src):
    """TriPoly from a LaTeX polynomial in q, t, a (sizing macros and braces removed)."""
    s = _DROP.sub(" ", src)
    s = s.replace("\\\\", " ").replace("\\(", " ").replace("\\)", " ")
    s = re.sub(r"\^\{(-?\d+)\}", r"^\1", s)
    s = s.replace("{", "(").replace("}", ")")
    s = s.replace("\n", " ").strip().rstrip(".")
    return parse(s)


# printed reference polynomials -------------------------------------------------------

CABLE13_H = r"""
1 + q t + q^8 t^8 + q^2 \bigl(t + t^2\bigr)
 + q^3 \bigl(t + t^2 + t^3\bigr) + q^4 \bigl(2 t^2 + t^3 + t^4\bigr)
+  q^5 \bigl(2 t^3 + t^4 + t^5\bigr) + q^6 \bigl(2 t^4 + t^5
+ t^6\bigr) + q^7 \bigl(t^5 + t^6 + t^7\bigr) +
a \bigl(q + q^2 \bigl(1 + t\bigr) + q^3 \bigl(1 + 2 t + t^2\bigr)
+ q^4 \bigl(3 t + 2 t^2 + t^3\bigr) +
    q^5 \bigl(t + 4 t^2 + 2 t^3 + t^4\bigr) + q^6 \bigl(t^2
+ 4 t^3 + 2 t^4 + t^5\bigr) +
    q^7 \bigl(t^3 + 3 t^4 + 2 t^5 + t^6\bigr) + q^8 \bigl(t^5
+ t^6 + t^7\bigr)\bigr)+
a^2 \bigl(q^3 + q^4 \bigl(1 + t\bigr) + q^5 \bigl(1 + 2 t + t^2\bigr)
+ q^6 \bigl(2 t + 2 t^2 + t^3\bigr) + q^7 \bigl(2 t^2 + 2 t^3
+ t^4\bigr) + q^8 \bigl(t^3 + t^4 + t^5\bigr)\bigr) +
a^3 \bigl(q^6 + q^7 t + q^8 t^2\bigr).
"""

# (D-set, dimension of the cell); None marks the two empty cells
CABLE13_CELLS = [
    ((), 8), ((15,), 7), ((11, 15), 6), ((7, 11, 15), 6), ((9, 15), 7),
    ((9, 11, 15), 5), ((7, 9, 11, 15), 4), ((3, 7, 9, 11, 15), 4),
    ((5, 9, 11, 15), 5), ((5, 7, 9, 11, 15), 3), ((3, 5, 7, 9, 11, 15), 2),
    ((1, 5, 7, 9, 11, 15), 4), ((1, 3, 5, 7, 9, 11, 15), 2), ((2, 7, 11, 15), 6),
    ((2, 9, 15), 7), ((2, 9, 11, 15), 6), ((2, 7, 9, 11, 15), 5),
    ((2, 3, 7, 9, 11, 15), 4), ((2, 5, 9, 11, 15), 5), ((2, 5, 7, 9, 11, 15), 3),
    ((2, 3, 5, 7, 9, 11, 15), 1), ((1, 2, 5, 7, 9, 11, 15), 3),
    ((1, 2, 3, 5, 7, 9, 11, 15), 0), ((2, 15), None), ((2, 11, 15), None),
]

HOPF_211_HMOT = r"""
1+a^2 q^5-2 t+q^2 t+q^3 t+t^2-2 q^2 t^2+q^4 t^2+q^2 t^3
-q^3 t^3-q^4 t^3+q^5 t^3 +a \bigl(q^2+q^3-2 q^2 t+q^4 t+
q^5 t+q^2 t^2-q^3 t^2-q^4 t^2+q^5 t^2\bigr)
"""

T64_HMOT = r"""
q^8 t^8-q^7 t^8
+q^3 t^2 \bigl(q+t-2 q t+q^2 t-2 q^2 t^2+2 q^3 t^2
-q^2 t^3+q^4 t^3-q^2 t^4+q^4 t^4-q^3 t^5+q^4 t^5\bigr) (1+a q)
+q^2 t \bigl(1+q-t+q^2 t-t^2-q t^2+q^2 t^2+q^3 t^2-q t^3+q^3 t^3-q^2 t^4
+q^3 t^4\bigr) (1+a q) (1+a q^2)
+\bigl(1-t+q t-q t^2+q^2 t^2\bigr) (1+a q) (1+a q^2) (1+a q^3)
"""

T64_L = r"""
1-2 t+t^2+q^3 t^4-2 q^3 t^5+q^3 t^6+q^4 t^6-2 q^4 t^7+q^4 t^8
+q^5 t^8-2 q^5 t^9+q^5 t^{10}+q^6 t^{10}-2 q^6 t^{11}+q^7 t^{12}
+q^6 t^{14}-2 q^7 t^{15}+q^8 t^{16}+t \bigl(1-t+q t-t^2-q t^2+q^2 t^2
+t^3-q t^3-2 q^2 t^4+2 q^3 t^4+2 q t^5-q^3 t^5
+q^4 t^5-q t^6-3 q^3 t^6+q^4 t^6+2 q^2 t^7+q^3 t^7-q^4 t^7
+q^5 t^7-q^2 t^8-3 q^4 t^8+q^5 t^8+2 q^3 t^9-q^5 t^9
+q^6 t^9-2 q^5 t^{10}+2 q^6 t^{10}+q^4 t^{11}-q^5 t^{11}
-q^5 t^{12}-q^6 t^{12}
+q^7 t^{12}-q^6 t^{13}+q^7 t^{13}+q^7 t^{14}\bigr) (1+a q)
+t^3 \bigl(1-t+q t
+q^2 t^2-t^3-2 q t^3+t^4+2 q^3 t^4-a q^4 t^4+q t^5-3 q^2 t^5
-q^3 t^5+2 a q^4 t^5-a q^5 t^5+q^2 t^6+2 q^4 t^6-a q^4 t^6
-2 q^3 t^7+a q^5 t^7+q^5 t^8-q^4 t^9+q^5 t^9+q^5 t^{10}\bigr)
(1+a q) (1+a q^2)
+t^6 \bigl(1-t+q t-q t^2+q^2 t^2\bigr) (1+a q) (1+a q^2) (1+a q^3)
"""

CABLE13_RHO = r"""
1+q t+q^2 t^2+q^3 t^3+q^3 t^4+q^4 t^4+q^4 t^5+q^5 t^5+q^4 t^6
+q^5 t^6+q^6 t^6+q^5 t^7+q^6 t^7+q^7 t^7+q^5 t^8+q^6 t^8+q^7 t^8
+q^6 t^9+q^7 t^9+q^6 t^{10}+q^7 t^{10}
+q^7 t^{11}+q^7 t^{12}+q^7 t^{13}+q^7 t^{14}
"""

CABLE13_RHO_11 = 25

CABLE13_R = r"""
1+t+q t+t^2+2 q t^2+q^2 t^2+t^3+2 q t^3+3 q^2 t^3+q^3 t^3+t^4
+2 q t^4+4 q^2 t^4+4 q^3 t^4+q^4 t^4+t^5+2 q t^5+4 q^2 t^5
+6 q^3 t^5+4 q^4 t^5+q^5 t^5+t^6+2 q t^6+4 q^2 t^6+7 q^3 t^6
+8 q^4 t^6+4 q^5 t^6+q^6 t^6+t^7+2 q t^7+4 q^2 t^7+7 q^3 t^7
+10 q^4 t^7+8 q^5 t^7+4 q^6 t^7+q^7 t^7+q t^8+2 q^2 t^8+4 q^3 t^8
+7 q^4 t^8+8 q^5 t^8+4 q^6 t^8+q^7 t^8+q^2 t^9+2 q^3 t^9
+4 q^4 t^9+6 q^5 t^9+4 q^6 t^9+q^7 t^9+q^3 t^{10}+2 q^4 t^{10}
+4 q^5 t^{10}+4 q^6 t^{10}+q^7 t^{10}+q^4 t^{11}+2 q^5 t^{11}
+3 q^6 t^{11}+q^7 t^{11}+q^5 t^{12}+2 q^6 t^{12}+q^7 t^{12}
+q^6 t^{13}+q^7 t^{13}+q^7 t^{14}+a \Bigl(q t+q t^2
+2 q^2 t^2+q t^3+3 q^2 t^3+3 q^3 t^3+q t^4+3 q^2 t^4+6 q^3 t^4
+3 q^4 t^4+q t^5+3 q^2 t^5+7 q^3 t^5+9 q^4 t^5+3 q^5 t^5
+q t^6+3 q^2 t^6+7 q^3 t^6+12 q^4 t^6+10 q^5 t^6+3 q^6 t^6
+q t^7+3 q^2 t^7+7 q^3 t^7+13 q^4 t^7+17 q^5 t^7+10 q^6 t^7
+3 q^7 t^7+q^2 t^8+3 q^3 t^8+7 q^4 t^8+12 q^5 t^8+10 q^6 t^8
+3 q^7 t^8+q^3 t^9+3 q^4 t^9+7 q^5 t^9+9 q^6 t^9+3 q^7 t^9
+q^4 t^{10}+3 q^5 t^{10}+6 q^6 t^{10}+3 q^7 t^{10}+q^5 t^{11}
+3 q^6 t^{11}
+3 q^7 t^{11}+q^6 t^{12}+2 q^7 t^{12}+q^7 t^{13}\Bigr)
+a^2 \Bigl(q^3 t^3+q^3 t^4+2 q^4 t^4
+q^3 t^5+3 q^4 t^5+3 q^5 t^5+q^3 t^6+3 q^4 t^6+6 q^5 t^6+3 q^6 t^6
+q^3 t^7+3 q^4 t^7+7 q^5 t^7+8 q^6 t^7+3 q^7 t^7+q^4 t^8
+3 q^5 t^8+6 q^6 t^8+3 q^7 t^8+q^5 t^9+3 q^6 t^9+3 q^7 t^9
+q^6 t^{10}+2 q^7 t^{10}+q^7 t^{11}\Bigr)
+a^3 \Bigl(q^6 t^6+q^6 t^7
+q^7 t^7+q^7 t^8\Bigr)
"""

CABLE13_MU = r"""
2 + q + q^2 + 2 q^3 t + 2 q^4 t^2 + 2 q^5 t^3 + 2 q^6 t^4 + q^7 t^5 +
 q^7 t^6 + 2 q^7 t^7
"""

CABLE13_HOOK2 = r"""
q t (1 + q^2 + q^4 + q^7 t + q^{10} t^2 + q^{13} t^3 + q^{16} t^4 + q^{21} t^7)
"""

# printed RH thresholds and their pinned bracket widths
THRESHOLDS = {
    "cable13_H_a0": (0.6686, 1e-3),
    "cable13_rho": (0.802, 2e-3),
    "cable13_mu_qt": (0.919090, 1e-4),
}


def printed(name):
    """TriPoly of a printed reference polynomial by attribute name."""
    return latex_to_poly(globals()[name])
