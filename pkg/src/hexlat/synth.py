"""Construction of hexagonal lattice diagrams from homology classes.

A lattice diagram is determined up to isotopy by the classes ac and bc.
Two realisations are provided:

* ``"regular"``: the straight honeycomb.  Every arc of a family is a
  translate of one vector; the three vectors sum to zero and their pairwise
  differences are ab/b, bc/b and ca/b.
* ``"resolve"``: draw the ac and bc classes as parallel straight curves and
  resolve each crossing into a short c-arc flanked by two bridge points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import torus_geom as tg
from .diagram import Arc, Family, LatticeDiagram, PAIR_BASIS
from .errors import DegenerateError, NotUnlinkError, RangeError
from .homology import Basis, HomClass, component_count, is_unlink, pair

FAMILIES = "ABCDEFGH"

# Coefficients ((p1, q1), (p2, q2), (p3, q3)) with
# ab = p1 alpha + q1 beta, bc = p2 beta + q2 gamma, ca = p3 gamma + q3 alpha.
_TEMPLATES = {
    "A": lambda d: ((1, d - 1), (1, d - 1), (1, d - 1)),
    "B": lambda d: ((0, d - 1), (1, d - 1), (1, d)),
    "C": lambda d: ((0, d), (0, d - 1), (1, d)),
    "D": lambda d: ((0, d), (0, d), (0, d)),
    "E": lambda d: ((d - 1, 1), (d - 1, 1), (d - 1, 1)),
    "F": lambda d: ((d - 1, 0), (d, 1), (d - 1, 1)),
    "G": lambda d: ((d, 0), (d, 1), (d - 1, 0)),
    "H": lambda d: ((d, 0), (d, 0), (d, 0)),
}

_MIN_DEGREE = {"A": 1, "E": 1, "D": 1, "H": 1, "B": 2, "C": 2, "F": 2, "G": 2}


@dataclass(frozen=True)
class FamilyId:
    name: str
    degree: int

    def __str__(self):
        return f"({self.name})_{self.degree}"


def min_degree(f: str) -> int:
    return _MIN_DEGREE[f.upper()]


def template(f: str, d: int):
    """Class triple (ab, bc, ca) of family f at degree d, each in its own basis."""
    f = f.upper()
    if f not in _TEMPLATES:
        raise RangeError(f"unknown family {f!r}")
    (p1, q1), (p2, q2), (p3, q3) = _TEMPLATES[f](d)
    return HomClass(p1, q1, Basis.AB), HomClass(p2, q2, Basis.BG), HomClass(p3, q3, Basis.GA)


def coefficients(ab: HomClass, bc: HomClass, ca: HomClass):
    """The six coefficients (p1, q1, p2, q2, p3, q3) of a class triple."""
    x, y, z = ab.in_basis(Basis.AB), bc.in_basis(Basis.BG), ca.in_basis(Basis.GA)
    return (x.p, x.q, y.p, y.q, z.p, z.q)


def _check_classes(ac: HomClass, bc: HomClass):
    ab, ca = ac - bc, -ac
    e = pair(ac, bc)
    if e == 0:
        raise DegenerateError("ac and bc have zero pairing, so no bridge points")
    for name, cls in (("ab", ab), ("bc", bc), ("ca", ca)):
        local = cls.in_basis(PAIR_BASIS[name])
        if not is_unlink(local):
            raise NotUnlinkError(f"{name} = {local} is not an unlink")
    return ab, ca, e


def from_classes(ac: HomClass, bc: HomClass, method: str = "regular", origin=(0, 0),
                 metadata=None, shear=None) -> LatticeDiagram:
    """The lattice diagram with the given ac and bc classes.

    ``shear`` (regular method only) is added to all three arc vectors, moving
    the positive bridge points; small shears are isotopies of the honeycomb.
    """
    ab, ca, e = _check_classes(ac, bc)
    if method == "regular":
        d = _regular(ab, bc, ca, abs(e), shear)
    elif method == "resolve":
        d = _resolve(ac, bc)
    else:
        raise ValueError(f"unknown method {method!r}")
    if origin != (0, 0):
        d = d.translated(origin)
    meta = {"generator": f"from_classes/{method}"}
    meta.update(metadata or {})
    return LatticeDiagram(d.arcs, meta)


def arc_vectors(ab, bc, ca, b):
    """Arc vectors of the regular honeycomb; they sum to zero."""
    ab, bc, ca = ab.ab(), bc.ab(), ca.ab()
    den = 3 * b
    return (
        (Fraction(ab[0] - ca[0], den), Fraction(ab[1] - ca[1], den)),
        (Fraction(bc[0] - ab[0], den), Fraction(bc[1] - ab[1], den)),
        (Fraction(ca[0] - bc[0], den), Fraction(ca[1] - bc[1], den)),
    )


def _regular(ab, bc, ca, b, shear=None):
    va, vb, vc = arc_vectors(ab, bc, ca, b)
    if shear is not None:
        w = tg.point(*shear)
        va, vb, vc = tg.add(va, w), tg.add(vb, w), tg.add(vc, w)
    ab, ca = ab.ab(), ca.ab()
    # the negative bridge points form a coset of the lattice spanned by ab/b and ac/b
    gens = [(Fraction(ab[0], b), Fraction(ab[1], b)), (Fraction(-ca[0], b), Fraction(-ca[1], b))]
    origin = (Fraction(0), Fraction(0))
    seen = {origin}
    todo = [origin]
    while todo:
        p = todo.pop()
        for g in gens:
            q = tg.reduce(tg.add(p, g))
            if q not in seen:
                seen.add(q)
                todo.append(q)
    assert len(seen) == b, (len(seen), b)
    arcs = []
    for fam, v in ((Family.A, va), (Family.B, vb), (Family.C, vc)):
        for p in sorted(seen):
            arcs.append(Arc(fam, (p, tg.add(p, v))))
    return LatticeDiagram(arcs)


def _transversal(w):
    """Integer vector t with cross(w, t) = 1 for primitive w."""
    a, b = w
    g, x, y = _egcd(a, b)
    assert g == 1
    # a*x + b*y = 1 and cross((a, b), (-y, x)) = a*x + b*y
    return (-y, x)


def _egcd(a, b):
    if b == 0:
        return (abs(a), (1 if a >= 0 else -1), 0)
    g, x, y = _egcd(b, a % b)
    return (g, y, x - (a // b) * y)


def _lines(cls: HomClass, offset):
    g = component_count(cls)
    w = (cls.ab()[0] // g, cls.ab()[1] // g)
    t = _transversal(w)
    out = []
    for k in range(g):
        base = tg.add(offset, (Fraction(k * t[0], g), Fraction(k * t[1], g)))
        out.append((base, tg.add(base, w)))
    return w, out


def _resolve(ac: HomClass, bc: HomClass):
    wa, la = _lines(ac, (Fraction(0), Fraction(0)))
    wb, lb = _lines(bc, (Fraction(1, 7), Fraction(2, 11)))
    crossings = {}
    for k, (p1, p2) in enumerate(la):
        for l, (q1, q2) in enumerate(lb):
            for c in tg.contacts(p1, p2, q1, q2):
                ta, tb = c.t1 % 1, c.t2 % 1
                crossings[(k, ta)] = (k, ta, l, tb)
    crossings = sorted(set(crossings.values()))
    on_a = {k: sorted(c[1] for c in crossings if c[0] == k) for k in range(len(la))}
    on_b = {l: sorted(c[3] for c in crossings if c[2] == l) for l in range(len(lb))}

    def min_gap(ts):
        gaps = [b - a for a, b in zip(ts, ts[1:])] + [ts[0] + 1 - ts[-1]]
        return min(gaps)

    ha = min(min_gap(ts) for ts in on_a.values()) / 4
    hb = min(min_gap(ts) for ts in on_b.values()) / 4
    local = {}
    for k, ta, l, tb in crossings:
        p = tg.add(la[k][0], tg.scale(ta, wa))
        half = tg.scale(Fraction(1, 2), tg.add(tg.scale(ha, wa), tg.scale(hb, wb)))
        local[(k, ta)] = local[("b", l, tb)] = (p, tg.add(p, half), tg.sub(p, half))
    arcs = []
    for fam, lines, w, h, key in ((Family.A, la, wa, ha, lambda i, t: (i, t)),
                                  (Family.B, lb, wb, hb, lambda i, t: ("b", i, t))):
        params = on_a if fam is Family.A else on_b
        for i, ts in params.items():
            for n, t in enumerate(ts):
                p, minus, _ = local[key(i, t)]
                t_next = ts[(n + 1) % len(ts)] + (1 if n + 1 == len(ts) else 0)
                q = tg.add(p, tg.scale(t_next - t, w))
                q_plus = tg.add(local[key(i, ts[(n + 1) % len(ts)])][2], tg.sub(q, local[key(i, ts[(n + 1) % len(ts)])][0]))
                path = (minus, tg.add(p, tg.scale(h, w)), tg.sub(q, tg.scale(h, w)), q_plus)
                arcs.append(Arc(fam, path))
    for k, ta, l, tb in crossings:
        _, minus, plus = local[(k, ta)]
        arcs.append(Arc(Family.C, (minus, plus)))
    return LatticeDiagram(arcs)


def family_classes(f: str, d: int):
    """(ac, bc) in alpha-beta coordinates for family f at degree d."""
    ab, bc, _ = template(f, d)
    return (ab + bc), bc.to_ab()


def family(f: str, d: int, method: str = "regular", shear=None) -> LatticeDiagram:
    f = f.upper()
    if f not in _TEMPLATES:
        raise RangeError(f"unknown family {f!r}")
    if d < _MIN_DEGREE[f]:
        raise RangeError(f"family {f} needs degree >= {_MIN_DEGREE[f]}, got {d}")
    ac, bc = family_classes(f, d)
    return from_classes(ac, bc, method=method, shear=shear,
                        metadata={"family_id": f, "degree": d, "generator": "synth"})
