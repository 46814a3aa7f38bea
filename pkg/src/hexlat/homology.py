"""Integer first homology of the central torus.

The torus carries three distinguished curves alpha, beta, gamma with
gamma = -alpha - beta.  Each of the three boundary spheres has its own
Heegaard basis: (alpha, beta), (beta, gamma) and (gamma, alpha).  Classes
are stored in whichever basis they were given in, and every computation
goes through (alpha, beta) coordinates.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass


class Basis(enum.Enum):
    AB = "AB"
    BG = "BG"
    GA = "GA"


@dataclass(frozen=True)
class HomClass:
    """The class p*u + q*v where (u, v) is the named basis."""

    p: int
    q: int
    basis: Basis = Basis.AB

    def ab(self):
        """Coordinates (a, b) with class = a*alpha + b*beta."""
        p, q = self.p, self.q
        if self.basis is Basis.AB:
            return (p, q)
        if self.basis is Basis.BG:
            # p beta + q gamma = -q alpha + (p - q) beta
            return (-q, p - q)
        # p gamma + q alpha = (q - p) alpha - p beta
        return (q - p, -p)

    def to_ab(self) -> "HomClass":
        return HomClass(*self.ab(), Basis.AB)

    def in_basis(self, basis: Basis) -> "HomClass":
        return from_ab(*self.ab(), basis)

    def __add__(self, other):
        return add(self, other)

    def __neg__(self):
        a, b = self.ab()
        return HomClass(-a, -b, Basis.AB)

    def __sub__(self, other):
        return add(self, -other)

    def __eq__(self, other):
        if not isinstance(other, HomClass):
            return NotImplemented
        return self.ab() == other.ab()

    def __hash__(self):
        return hash(self.ab())

    def is_zero(self):
        return self.ab() == (0, 0)

    def __str__(self):
        names = {Basis.AB: ("α", "β"), Basis.BG: ("β", "γ"), Basis.GA: ("γ", "α")}[self.basis]
        return _format_combination(self.p, self.q, names)


def _format_combination(p, q, names):
    terms = []
    for coeff, name in ((p, names[0]), (q, names[1])):
        if coeff == 0:
            continue
        if coeff == 1:
            terms.append(name)
        elif coeff == -1:
            terms.append("-" + name)
        else:
            terms.append(f"{coeff}{name}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


ALPHA = HomClass(1, 0)
BETA = HomClass(0, 1)
GAMMA = HomClass(-1, -1)


def from_ab(a: int, b: int, basis: Basis = Basis.AB) -> HomClass:
    """Express a*alpha + b*beta in the requested basis."""
    if basis is Basis.AB:
        return HomClass(a, b, basis)
    if basis is Basis.BG:
        return HomClass(b - a, -a, basis)
    return HomClass(-b, a - b, basis)


def to_ab(c: HomClass) -> HomClass:
    return c.to_ab()


def pair(u: HomClass, v: HomClass) -> int:
    """Algebraic intersection number, normalised by <alpha, beta> = 1."""
    a, b = u.ab()
    c, d = v.ab()
    return a * d - b * c


def add(u: HomClass, v: HomClass) -> HomClass:
    a, b = u.ab()
    c, d = v.ab()
    return HomClass(a + c, b + d, Basis.AB)


def component_count(c: HomClass) -> int:
    """Number of components of the straight multi-curve in this class."""
    return math.gcd(abs(c.p), abs(c.q))


def is_unlink(c: HomClass) -> bool:
    """Whether the torus multi-curve is an unlink in its boundary sphere.

    The class must be written in the Heegaard basis of that sphere.
    """
    return c.p == 0 or c.q == 0 or abs(c.p) == 1 or abs(c.q) == 1
