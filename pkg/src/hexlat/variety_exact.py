"""Exact shadow diagrams of the curves

    V_d  : z1 z2^(d-1) + z2 z3^(d-1) + z3 z1^(d-1) = 0
    V'_d : z1^(d-1) z2 + z2^(d-1) z3 + z3^(d-1) z1 = 0

on the central torus, in turn units.  The a-arcs are straight segments
between closed-form bridge points; the b- and c-arcs are their images under
the cyclic symmetry z1 -> z2 -> z3 -> z1.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import List, Tuple

from . import torus_geom as tg
from .diagram import Arc, Family, LatticeDiagram, T_inv, require_valid, scan_contacts
from .errors import NotLatticeError, RangeError

# The cyclic symmetry acts on (theta, psi) by this map.  With the other
# candidate (x, y) -> (y - x, -x) every bridge point has sign -1 and for d >= 4
# the paired curves are no longer unlinks.
CYCLIC_MAP = T_inv


class VarietyKind(enum.Enum):
    V = "v"
    VPRIME = "vprime"

    @classmethod
    def parse(cls, s) -> "VarietyKind":
        if isinstance(s, cls):
            return s
        key = str(s).lower().replace("'", "prime").replace("_", "")
        for k in cls:
            if key == k.value:
                return k
        raise ValueError(f"unknown variety kind {s!r}")


def sheet_count(d: int) -> int:
    return d * d - 3 * d + 3


def endpoints(kind, d: int, j: int) -> Tuple[tg.Point, tg.Point]:
    """(x-, x+) of the j-th a-arc, 1 <= j <= d^2-3d+3, reduced mod 1."""
    kind = VarietyKind.parse(kind)
    N = sheet_count(d)
    F = Fraction
    if kind is VarietyKind.V:
        lo = (F(2 * d, 3) + j - 1, F(d, 3) + (d - 1) * j - 1)
        hi = (F(d, 3) + j, F(2 * d, 3) + (d - 1) * j - 1)
        return tg.reduce((lo[0] / N, lo[1] / N)), tg.reduce((hi[0] / N, hi[1] / N))
    # nu = (d-1) theta - (d-2) psi and omega = theta - (d-1) psi run
    # from (1/3, 2/3) to (2/3, 1/3) along each sheet.
    def at(nu, omega):
        psi = (nu - (d - 1) * omega + j) / N
        return tg.reduce((omega + (d - 1) * psi, psi))
    return at(F(1, 3), F(2, 3)), at(F(2, 3), F(1, 3))


def displacement(kind, d: int) -> tg.Point:
    """Common displacement x+ - x- of the a-arcs on the chosen lift."""
    kind = VarietyKind.parse(kind)
    N = sheet_count(d)
    if kind is VarietyKind.V:
        return (Fraction(3 - d, 3 * N), Fraction(d, 3 * N))
    return (Fraction(2 * d - 3, 3 * N), Fraction(d, 3 * N))


def a_arcs(kind, d: int) -> List[Arc]:
    kind = VarietyKind.parse(kind)
    if d < 1:
        raise RangeError("degree must be at least 1")
    delta = displacement(kind, d)
    arcs = []
    for j in range(1, sheet_count(d) + 1):
        lo, hi = endpoints(kind, d, j)
        end = tg.add(lo, delta)
        if tg.reduce(end) != hi:
            raise NotLatticeError(f"arc {j} does not close up with the displacement formula", None)
        arcs.append(Arc(Family.A, (lo, end)))
    return arcs


def variety_arcs(kind, d: int, cyclic_map=None) -> LatticeDiagram:
    kind = VarietyKind.parse(kind)
    fn = cyclic_map or CYCLIC_MAP
    a = a_arcs(kind, d)
    b = [x.mapped(fn, Family.B) for x in a]
    c = [x.mapped(fn, Family.C) for x in b]
    return LatticeDiagram(a + b + c, {"generator": f"variety-{kind.value}", "degree": d})


def interior_contacts(d: LatticeDiagram) -> list:
    """Pairs of arcs meeting anywhere other than at shared bridge points."""
    return [(kind, i, j) for kind, i, j, _ in scan_contacts(d.arcs) if kind != "bridge"]


def build(kind, d: int) -> LatticeDiagram:
    """variety_arcs, checked to be a valid lattice diagram."""
    return require_valid(variety_arcs(kind, d))
