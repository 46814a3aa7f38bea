"""Hexagonal lattice diagrams on the central torus.

A diagram is three families of oriented PL arcs (red a, blue b, green c)
whose endpoints are the bridge points.  It is a hexagonal lattice diagram
when the arcs meet only at bridge points and cut the torus into hexagons
with two opposite edges of each colour.
"""

from __future__ import annotations

import enum
import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from . import torus_geom as tg
from .errors import (DiagramError, InconsistentError, NotOrientableError,
                     SlideConditionError)
from .homology import ALPHA, BETA, GAMMA, Basis, HomClass, component_count, is_unlink, pair


class Family(enum.Enum):
    A = "a"
    B = "b"
    C = "c"

    @property
    def succ(self) -> "Family":
        return _SUCC[self]

    @property
    def pred(self) -> "Family":
        return _SUCC[_SUCC[self]]

    @property
    def core(self) -> HomClass:
        """Core curve of the solid torus this family lives in."""
        return _CORE[self]

    @property
    def color(self) -> str:
        return _COLOR[self]

    @classmethod
    def parse(cls, s) -> "Family":
        if isinstance(s, Family):
            return s
        return cls(str(s).lower())


_SUCC = {Family.A: Family.B, Family.B: Family.C, Family.C: Family.A}
_CORE = {Family.A: ALPHA, Family.B: BETA, Family.C: GAMMA}
_COLOR = {Family.A: "red", Family.B: "blue", Family.C: "green"}

PAIRS = {"ab": (Family.A, Family.B), "bc": (Family.B, Family.C), "ca": (Family.C, Family.A)}
PAIR_BASIS = {"ab": Basis.AB, "bc": Basis.BG, "ca": Basis.GA}


def T(p):
    """Linear automorphism of the torus sending beta to alpha, gamma to beta, alpha to gamma."""
    x, y = p
    return (y - x, -x)


def _reflect(p):
    return (p[1], p[0])


def T_inv(p):
    x, y = p
    return (-y, x - y)


@dataclass(frozen=True)
class Arc:
    family: Family
    path: Tuple[tg.Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "path", tuple(tg.point(*v) for v in self.path))

    @property
    def start(self):
        return self.path[0]

    @property
    def end(self):
        return self.path[-1]

    def segments(self):
        return list(zip(self.path, self.path[1:]))

    def reversed(self) -> "Arc":
        return Arc(self.family, self.path[::-1])

    def translated(self, v) -> "Arc":
        return Arc(self.family, tuple(tg.add(p, v) for p in self.path))

    def mapped(self, fn, family=None) -> "Arc":
        return Arc(family or self.family, tuple(fn(p) for p in self.path))

    def normalized(self) -> "Arc":
        """Same arc with its lift shifted so the first vertex lies in [0,1)^2."""
        k = tg.lattice_shift(self.path[0])
        if k == (0, 0):
            return self
        return self.translated((-k[0], -k[1]))


class LatticeDiagram:
    """Three families of oriented arcs; validity is checked by ``validate``."""

    def __init__(self, arcs: Sequence[Arc], metadata: Optional[dict] = None):
        self.arcs = tuple(arcs)
        self.metadata = dict(metadata or {})

    def __repr__(self):
        counts = "/".join(str(len(self.family_arcs(f))) for f in Family)
        return f"LatticeDiagram({counts} arcs, metadata={self.metadata})"

    def family_arcs(self, f: Family) -> List[int]:
        return [i for i, a in enumerate(self.arcs) if a.family is f]

    @property
    def bridge_number(self) -> int:
        return len(self.family_arcs(Family.A))

    # geometric transformations

    def translated(self, v) -> "LatticeDiagram":
        v = tg.point(*v)
        return LatticeDiagram([a.translated(v) for a in self.arcs], self.metadata)

    def reversed(self) -> "LatticeDiagram":
        return LatticeDiagram([a.reversed() for a in self.arcs], self.metadata)

    def relabeled(self) -> "LatticeDiagram":
        """Relabel (a, b, c) -> (b, c, a) and apply T, so new a-arcs are T(old b-arcs)."""
        return LatticeDiagram([a.mapped(T, a.family.pred) for a in self.arcs], self.metadata)

    def mirrored(self) -> "LatticeDiagram":
        """Reflect every arc in the diagonal (x, y) -> (y, x).

        Bridge-point signs flip.  The reflected paired curves need not be
        unlinks, so the result must be validated before use.
        """
        return LatticeDiagram([a.mapped(_reflect) for a in self.arcs], self.metadata)

    def normalized(self) -> "LatticeDiagram":
        return LatticeDiagram([a.normalized() for a in self.arcs], self.metadata)

    def with_metadata(self, **kw) -> "LatticeDiagram":
        return LatticeDiagram(self.arcs, {**self.metadata, **kw})

    # combinatorial structure

    @cached_property
    def _ends(self) -> Dict[tg.Point, List[Tuple[int, int]]]:
        ends = defaultdict(list)
        for i, a in enumerate(self.arcs):
            ends[tg.reduce(a.start)].append((i, 0))
            ends[tg.reduce(a.end)].append((i, 1))
        return dict(ends)

    @property
    def bridge_points(self) -> List[tg.Point]:
        return sorted(self._ends)

    def dart_direction(self, dart):
        i, e = dart
        path = self.arcs[i].path
        return tg.sub(path[1], path[0]) if e == 0 else tg.sub(path[-2], path[-1])

    def point_sign(self, p) -> int:
        """+1 when a counterclockwise loop around p meets a, b, c in that order."""
        darts = self._ends[p]
        if sorted(self.arcs[i].family.value for i, _ in darts) != ["a", "b", "c"]:
            return 0
        order = tg.ccw_sorted([self.dart_direction(dt) for dt in darts])
        fams = [self.arcs[darts[k][0]].family for k in order]
        k = fams.index(Family.A)
        return 1 if fams[(k + 1) % 3] is Family.B else -1

    @cached_property
    def sign(self) -> int:
        """Common sign of all bridge points, or 0 if they disagree."""
        signs = {self.point_sign(p) for p in self._ends}
        return signs.pop() if len(signs) == 1 else 0

    def is_oriented(self) -> bool:
        for darts in self._ends.values():
            if len({e for _, e in darts}) != 1:
                return False
        return True

    @cached_property
    def orientation(self) -> Optional[Dict[tg.Point, str]]:
        """Map bridge point -> '+' or '-' when the arcs run consistently from - to +."""
        if not self.is_oriented():
            return None
        return {p: ("-" if darts[0][1] == 0 else "+") for p, darts in self._ends.items()}

    def classes(self) -> Tuple[HomClass, HomClass, HomClass]:
        """Paired-curve classes (ab, bc, ca) in (alpha, beta) coordinates."""
        return self._classes

    @cached_property
    def _classes(self):
        return tuple(paired_curve(self, w)[1] for w in ("ab", "bc", "ca"))


# ---------------------------------------------------------------------------
# validation


@dataclass
class ValidationReport:
    violations: List[str] = field(default_factory=list)
    vertices: int = 0
    edges: int = 0
    faces: int = 0
    face_lengths: List[int] = field(default_factory=list)
    sign: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def add(self, msg):
        if msg not in self.violations:
            self.violations.append(msg)

    def __str__(self):
        if self.ok:
            return f"ok (V={self.vertices}, E={self.edges}, F={self.faces})"
        return "; ".join(self.violations)


def _grid_pairs(segs):
    """Candidate pairs of segment ids whose torus bounding boxes share a grid cell."""
    n = len(segs)
    g = max(1, min(64, int(math.sqrt(n))))
    cells = defaultdict(list)
    for sid, (_, _, p, q) in enumerate(segs):
        x0, x1 = sorted((p[0], q[0]))
        y0, y1 = sorted((p[1], q[1]))
        xs = range(math.floor(x0 * g), math.floor(x1 * g) + 1)
        ys = range(math.floor(y0 * g), math.floor(y1 * g) + 1)
        xs = {x % g for x in (xs if len(xs) < g else range(g))}
        ys = {y % g for y in (ys if len(ys) < g else range(g))}
        for cx in xs:
            for cy in ys:
                cells[(cx, cy)].append(sid)
    found = set()
    for members in cells.values():
        for i, s in enumerate(members):
            for t in members[i:]:
                found.add((s, t))
    return sorted(found)


def scan_contacts(arcs: Sequence[Arc]):
    """Classify every contact between arc segments on the torus.

    Yields (kind, arc_i, arc_j, contact) with kind one of "crossing"
    (transverse, interior to both segments), "touch" (any other contact off
    the bridge points), "overlap" or "bridge" (shared arc endpoint).  Shared
    vertices of consecutive segments of one arc are skipped.
    """
    segs = []
    for i, a in enumerate(arcs):
        m = len(a.path) - 1
        for k, (p, q) in enumerate(a.segments()):
            segs.append((i, (k, m), p, q))
    for s, t in _grid_pairs(segs):
        i, (ki, mi), p1, p2 = segs[s]
        j, (kj, mj), q1, q2 = segs[t]
        for c in tg.contacts(p1, p2, q1, q2, skip_zero=(s == t)):
            if isinstance(c, tg.Overlap):
                yield ("overlap", i, j, c)
                continue
            if c.transverse:
                yield ("crossing", i, j, c)
                continue
            end1 = (ki == 0 and c.t1 == 0) or (ki == mi - 1 and c.t1 == 1)
            end2 = (kj == 0 and c.t2 == 0) or (kj == mj - 1 and c.t2 == 1)
            if i == j and c.shift == (0, 0) and abs(ki - kj) == 1:
                if (kj == ki + 1 and c.t1 == 1 and c.t2 == 0) or (ki == kj + 1 and c.t1 == 0 and c.t2 == 1):
                    continue
            if end1 and end2 and not (s == t and mi == 1 and c.shift == (0, 0)):
                yield ("bridge", i, j, c)
            else:
                yield ("touch", i, j, c)


def _check_bridge_points(d: LatticeDiagram, report: ValidationReport) -> bool:
    good = True
    for p, darts in d._ends.items():
        fams = sorted(d.arcs[i].family.value for i, _ in darts)
        if fams != ["a", "b", "c"]:
            report.add("bridge point not met by exactly one arc end of each family")
            good = False
    return good


def _bipartition(d: LatticeDiagram):
    """Two-colour the bridge points so every arc joins the two colours."""
    adj = defaultdict(list)
    for a in d.arcs:
        u, v = tg.reduce(a.start), tg.reduce(a.end)
        adj[u].append(v)
        adj[v].append(u)
    colour = {}
    for root in sorted(adj):
        if root in colour:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in colour:
                    colour[v] = 1 - colour[u]
                    stack.append(v)
                elif colour[v] == colour[u]:
                    return None, None
    comps = _components(adj)
    return colour, comps


def _components(adj):
    seen, comps = set(), 0
    for root in adj:
        if root in seen:
            continue
        comps += 1
        stack = [root]
        seen.add(root)
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
    return comps


def faces(d: LatticeDiagram) -> List[List[Tuple[int, int]]]:
    """Faces of the rotation system given by the arc directions at bridge points.

    Each face is a list of darts (arc index, end) where end 0 leaves the
    start of the arc and end 1 leaves its end.
    """
    succ = {}
    for p, darts in d._ends.items():
        order = tg.ccw_sorted([d.dart_direction(dt) for dt in darts])
        ring = [darts[k] for k in order]
        for k, dt in enumerate(ring):
            succ[dt] = ring[(k + 1) % len(ring)]
    seen = set()
    out = []
    for start in sorted(succ):
        if start in seen:
            continue
        face, dt = [], start
        while dt not in seen:
            seen.add(dt)
            face.append(dt)
            i, e = dt
            dt = succ[(i, 1 - e)]
        out.append(face)
    return out


def _is_hexagon(d, face):
    if len(face) != 6:
        return False
    fams = [d.arcs[i].family for i, _ in face]
    return len(set(fams[:3])) == 3 and fams[:3] == fams[3:]


def validate(d: LatticeDiagram) -> ValidationReport:
    """Check every defining property of a hexagonal lattice diagram."""
    report = ValidationReport()
    if not d.arcs:
        report.add("diagram has no arcs")
        return report
    for a in d.arcs:
        if len(a.path) < 2 or any(p == q for p, q in a.segments()):
            report.add("arc with a degenerate segment")
            return report
    counts = [len(d.family_arcs(f)) for f in Family]
    b = counts[0]
    if len(set(counts)) != 1 or b < 1:
        report.add(f"family sizes differ: {counts}")
    report.vertices, report.edges = len(d._ends), len(d.arcs)
    if not _check_bridge_points(d, report):
        return report
    for kind, i, j, _ in scan_contacts(d.arcs):
        if kind == "overlap":
            report.add("arcs overlap along a segment")
        elif kind in ("crossing", "touch"):
            report.add("arcs meet off bridge points")
    signs = {d.point_sign(p) for p in d._ends}
    if len(signs) != 1:
        report.add("sign not uniform")
    else:
        report.sign = signs.pop()
    if not report.ok:
        return report
    colour, comps = _bipartition(d)
    if colour is None:
        report.add("bridge points admit no orientation bipartition")
        return report
    if comps != 1:
        report.add("arc graph is disconnected")
    fs = faces(d)
    report.faces = len(fs)
    report.face_lengths = sorted(len(f) for f in fs)
    if report.vertices - report.edges + report.faces != 0:
        report.add("Euler characteristic is not zero")
    if report.vertices != 2 * b or report.faces != b:
        report.add(f"expected V=2b and F=b, got V={report.vertices}, F={report.faces}, b={b}")
    if not all(_is_hexagon(d, f) for f in fs):
        report.add("face is not a hexagon with colour pattern a,b,c,a,b,c")
    if not report.ok:
        return report
    od = d if d.is_oriented() else _orient_from(d, colour)
    for which in ("ab", "bc", "ca"):
        _, cls, comps = paired_curve(od, which)
        local = cls.in_basis(PAIR_BASIS[which])
        if not is_unlink(local):
            report.add(f"{which} = {local} is not an unlink")
        if comps != component_count(cls):
            report.add(f"{which} has {comps} components but its class has gcd {component_count(cls)}")
    return report


def validate_shadow(d: LatticeDiagram) -> ValidationReport:
    """General-position check for a shadow diagram that need not tile by hexagons."""
    report = ValidationReport()
    counts = [len(d.family_arcs(f)) for f in Family]
    if len(set(counts)) != 1 or counts[0] < 1:
        report.add(f"family sizes differ: {counts}")
    report.vertices, report.edges = len(d._ends), len(d.arcs)
    if not _check_bridge_points(d, report):
        return report
    for kind, i, j, _ in scan_contacts(d.arcs):
        same = d.arcs[i].family is d.arcs[j].family
        if kind == "overlap":
            report.add("arcs overlap along a segment")
        elif kind == "touch":
            report.add("non-transverse contact off bridge points")
        elif kind == "crossing" and same:
            report.add("arcs of the same family intersect")
    signs = {d.point_sign(p) for p in d._ends}
    report.sign = signs.pop() if len(signs) == 1 else 0
    return report


def require_valid(d: LatticeDiagram) -> LatticeDiagram:
    from .errors import NotLatticeError
    report = validate(d)
    if not report.ok:
        raise NotLatticeError(f"not a hexagonal lattice diagram: {report}", report)
    return d


# ---------------------------------------------------------------------------
# orientation and paired curves


def _orient_from(d: LatticeDiagram, colour) -> LatticeDiagram:
    least = min(colour)
    minus = colour[least]
    arcs = []
    for a in d.arcs:
        if colour[tg.reduce(a.start)] == minus:
            arcs.append(a)
        else:
            arcs.append(a.reversed())
    return LatticeDiagram(arcs, d.metadata)


def orient(d: LatticeDiagram) -> LatticeDiagram:
    """The orientation giving '-' to the lexicographically least bridge point."""
    colour, _ = _bipartition(d)
    if colour is None:
        raise NotOrientableError("bridge points admit no orientation bipartition")
    return _orient_from(d, colour)


def ensure_oriented(d: LatticeDiagram) -> LatticeDiagram:
    return d if d.is_oriented() else orient(d)


def paired_curve(d: LatticeDiagram, which: str):
    """The multi-curve f u (-g) as a list of closed lifted loops, its class and component count."""
    f, g = PAIRS[which]
    if not d.is_oriented():
        raise DiagramError("paired curves need an oriented diagram")
    f_from, g_to = {}, {}
    for i, a in enumerate(d.arcs):
        if a.family is f:
            f_from[tg.reduce(a.start)] = i
        elif a.family is g:
            g_to[tg.reduce(a.end)] = i
    loops, seen = [], set()
    total = (0, 0)
    for i in sorted(f_from.values()):
        if i in seen:
            continue
        pieces, k = [], i
        while k not in seen:
            seen.add(k)
            pieces.append(d.arcs[k].path)
            j = g_to.get(tg.reduce(d.arcs[k].end))
            if j is None:
                raise DiagramError(f"no {g.value}-arc ends where a {f.value}-arc ends")
            pieces.append(d.arcs[j].path[::-1])
            nxt = f_from.get(tg.reduce(d.arcs[j].start))
            if nxt is None:
                raise DiagramError(f"no {f.value}-arc starts where a {g.value}-arc starts")
            k = nxt
        if k != i:
            raise DiagramError("paired curve does not close up")
        loop = tg.concatenate(pieces)
        cls = tg.cycle_class(loop)
        loops.append(loop)
        total = (total[0] + cls.p, total[1] + cls.q)
    return loops, HomClass(*total), len(loops)


# ---------------------------------------------------------------------------
# invariants


@dataclass(frozen=True)
class InvariantReport:
    b: int
    c1: int
    c2: int
    c3: int
    epsilon: int
    ab: HomClass
    bc: HomClass
    ca: HomClass
    degree: int
    self_int: int
    genus: int
    genus_minimal: bool

    @property
    def components(self):
        return (self.c1, self.c2, self.c3)

    def as_dict(self):
        return {
            "b": self.b, "c": [self.c1, self.c2, self.c3], "epsilon": self.epsilon,
            "ab": [self.ab.p, self.ab.q], "bc": [self.bc.p, self.bc.q], "ca": [self.ca.p, self.ca.q],
            "degree": self.degree, "self_int": self.self_int, "genus": self.genus,
            "genus_minimal": self.genus_minimal,
        }


def thom_genus(degree: int) -> int:
    d = abs(degree)
    return (d - 1) * (d - 2) // 2


def triple_invariants(ab: HomClass, bc: HomClass, ca: HomClass, eps_b: int):
    """Degree, self-intersection and genus data computed from a class triple.

    ``eps_b`` is the signed bridge number, i.e. the pairing <ac, bc>.
    Returns (p, q, degree, self_int, genus) where p, q hold the coefficient
    triples in the bases AB, BG, GA and genus is a Fraction.
    """
    p1, q1 = ab.in_basis(Basis.AB).p, ab.in_basis(Basis.AB).q
    l2, l3 = bc.in_basis(Basis.BG), ca.in_basis(Basis.GA)
    p2, q2, p3, q3 = l2.p, l2.q, l3.p, l3.q
    b = abs(eps_b)
    c = [component_count(x) for x in (ab, bc, ca)]
    degree = p2 + q1
    self_int = p1 * q1 + p2 * q2 + p3 * q3 + eps_b
    genus = Fraction(b - sum(c), 2) + 1
    return (p1, p2, p3), (q1, q2, q3), degree, self_int, genus, c


def invariants(d: LatticeDiagram) -> InvariantReport:
    d = ensure_oriented(d)
    ab, bc, ca = d.classes()
    b = d.bridge_number
    eps = d.sign
    ac = -ca
    eps_b = pair(ac, bc)
    if eps == 0 or eps * b != eps_b:
        raise InconsistentError(f"epsilon*b = {eps * b} but <ac,bc> = {eps_b}")
    if not (ab + bc + ca).is_zero():
        raise InconsistentError("ab + bc + ca is not zero")
    (p1, p2, p3), (q1, q2, q3), degree, self_int, genus, c = triple_invariants(ab, bc, ca, eps_b)
    if not (p2 + q1 == p3 + q2 == p1 + q3):
        raise InconsistentError("degree formulas disagree")
    if degree * degree != self_int:
        raise InconsistentError(f"degree^2 = {degree * degree} but self-intersection = {self_int}")
    if genus.denominator != 1 or genus < 0:
        raise InconsistentError(f"genus {genus} is not a nonnegative integer")
    g = int(genus)
    return InvariantReport(
        b=b, c1=c[0], c2=c[1], c3=c[2], epsilon=eps,
        ab=ab.in_basis(Basis.AB), bc=bc.in_basis(Basis.BG), ca=ca.in_basis(Basis.GA),
        degree=degree, self_int=self_int, genus=g,
        genus_minimal=(2 * g == (abs(degree) - 1) * (abs(degree) - 2)),
    )


def equivalent(d1: LatticeDiagram, d2: LatticeDiagram) -> bool:
    """Same (ac, bc) classes for some choice of orientations."""
    ab1, bc1, _ = ensure_oriented(d1).classes()
    ab2, bc2, _ = ensure_oriented(d2).classes()
    k1 = ((ab1 + bc1).ab(), bc1.ab())
    k2 = ((ab2 + bc2).ab(), bc2.ab())
    neg = ((-k2[0][0], -k2[0][1]), (-k2[1][0], -k2[1][1]))
    return k1 == k2 or k1 == neg


# ---------------------------------------------------------------------------
# transversality

# Sign of <leaf, arc> required of every segment of an f-arc, where the
# leaves of the f-foliation are straight curves in the class f.core.
CO_ORIENTATION = {Family.A: 1, Family.B: 1, Family.C: 1}


def _positively_transverse(d, co):
    for a in d.arcs:
        core = a.family.core.ab()
        for p, q in a.segments():
            if tg.sign(tg.cross(core, tg.sub(q, p))) != co[a.family]:
                return False
    return True


def check_transverse(d: LatticeDiagram, co_orientation=None) -> bool:
    """Whether the arcs, in one of the two orientations, cross every leaf positively.

    Requires the common bridge-point sign to be +1.
    """
    co = co_orientation or CO_ORIENTATION
    if d.sign != 1:
        return False
    od = ensure_oriented(d)
    return _positively_transverse(od, co) or _positively_transverse(od.reversed(), co)


# ---------------------------------------------------------------------------
# shadow slides


@dataclass
class SlideResult:
    diagram: LatticeDiagram
    shadow_report: ValidationReport
    lattice_report: ValidationReport

    @property
    def is_lattice(self):
        return self.lattice_report.ok


def shadow_slide(d: LatticeDiagram, family, arc_index: int, replacement) -> SlideResult:
    """Replace an arc by another with the same endpoints, sliding it over the core curve."""
    family = Family.parse(family)
    idx = d.family_arcs(family)
    if not 0 <= arc_index < len(idx):
        raise SlideConditionError(f"no {family.value}-arc with index {arc_index}")
    i = idx[arc_index]
    old = d.arcs[i]
    new = [tg.point(*v) for v in replacement]
    if len(new) < 2 or any(p == q for p, q in zip(new, new[1:])):
        raise SlideConditionError("replacement has a degenerate segment")
    if tg.reduce(new[0]) != tg.reduce(old.start) or tg.reduce(new[-1]) != tg.reduce(old.end):
        raise SlideConditionError("replacement does not share the arc's endpoints")
    k = tg.sub(old.start, new[0])
    new = [tg.add(v, k) for v in new]
    new_arc = Arc(family, tuple(new))
    # old followed by reversed new must be an embedded loop
    for kind, _, _, _ in scan_contacts([old, new_arc]):
        if kind != "bridge":
            raise SlideConditionError("loop formed by the old and new arc is not embedded")
    loop_cls = HomClass(*tg.sub(tg.sub(old.end, old.start), tg.sub(new[-1], new[0])))
    core = family.core
    if loop_cls != core and loop_cls != -core:
        raise SlideConditionError(f"loop class {loop_cls} is not homotopic to the core {core}")
    others = [d.arcs[j] for j in idx if j != i]
    for kind, a, b, _ in scan_contacts([new_arc] + others):
        if (a == 0) != (b == 0):
            raise SlideConditionError(f"replacement meets another {family.value}-arc")
    arcs = list(d.arcs)
    arcs[i] = new_arc
    out = LatticeDiagram(arcs, d.metadata)
    shadow = validate_shadow(out)
    if not shadow.ok:
        raise SlideConditionError(f"result is not a shadow diagram: {shadow}")
    return SlideResult(out, shadow, validate(out))

