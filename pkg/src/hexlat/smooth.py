"""Overlapping diagrams and their oriented smoothing.

Two diagrams drawn on the same torus, with disjoint bridge points and only
differently coloured arcs crossing, are merged by resolving every crossing.
A crossing of an f-arc with a g-arc, where g follows f in the cyclic order
a, b, c, is replaced by two new bridge points joined by a short arc of the
third family: both strands are cut, their upstream halves end at the new
positive point and their downstream halves start at the new negative point.
Paired classes add under this operation.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

from . import torus_geom as tg
from .diagram import Arc, Family, LatticeDiagram, scan_contacts, validate
from .errors import MismatchError, NotLatticeError, OverlapError, RangeError
from .synth import family


@dataclass(frozen=True)
class Crossing:
    point: tg.Point
    families: Tuple[Family, Family]
    sign: int
    # (arc index, segment index, parameter, point on that arc's lift) per strand
    first: tuple = field(repr=False)
    second: tuple = field(repr=False)


@dataclass
class OverlappingDiagram:
    first: LatticeDiagram
    second: LatticeDiagram
    offset: tg.Point
    crossings: List[Crossing]

    @property
    def arcs(self):
        return self.first.arcs + self.second.arcs


def overlay(d1: LatticeDiagram, d2: LatticeDiagram, offset=(0, 0)) -> OverlappingDiagram:
    offset = tg.point(*offset)
    for d in (d1, d2):
        if not d.is_oriented():
            raise OverlapError("both diagrams must be oriented")
    if d1.sign == 0 or d1.sign != d2.sign:
        raise OverlapError("the diagrams must share one bridge-point sign")
    moved = d2.translated(offset)
    shared = set(tg.reduce(p) for p in d1.bridge_points) & set(tg.reduce(p) for p in moved.bridge_points)
    if shared:
        raise OverlapError(f"shared bridge point at {min(shared)}")
    arcs = d1.arcs + moved.arcs
    n1 = len(d1.arcs)
    crossings = []
    for kind, i, j, c in scan_contacts(arcs):
        if (i < n1) == (j < n1):
            continue
        if kind == "bridge":
            raise OverlapError(f"shared bridge point at {tg.reduce(c.point)}")
        if kind == "overlap":
            raise OverlapError(f"arcs {i} and {j} overlap along a segment")
        if kind == "touch":
            raise OverlapError(f"tangency between arcs {i} and {j}")
        fi, fj = arcs[i].family, arcs[j].family
        if fi is fj:
            raise OverlapError(f"same-family crossing of {fi.value}-arcs at {tg.reduce(c.point)}")
        crossings.append(_crossing(arcs, i, j, c))
    crossings.sort(key=lambda x: (tg.reduce(x.point), x.families[0].value))
    return OverlappingDiagram(d1, moved, offset, crossings)


def _crossing(arcs, i, j, c):
    # find segment indices by re-running the contact per segment pair
    ai, aj = arcs[i], arcs[j]
    hit = None
    for ki, (p1, p2) in enumerate(ai.segments()):
        for kj, (q1, q2) in enumerate(aj.segments()):
            for o in tg.contacts(p1, p2, q1, q2):
                if isinstance(o, tg.Contact) and o.point == c.point and o.shift == c.shift:
                    hit = (ki, kj, o)
    ki, kj, o = hit
    pi = o.point
    pj = tg.sub(o.point, o.shift)
    si = (i, ki, o.t1, pi)
    sj = (j, kj, o.t2, pj)
    fi, fj = ai.family, aj.family
    if fj is not fi.succ:
        si, sj, fi, fj = sj, si, fj, fi
    u = _direction(arcs, si)
    v = _direction(arcs, sj)
    return Crossing(si[3], (fi, fj), tg.sign(tg.cross(u, v)), si, sj)


def _direction(arcs, strand):
    i, k, _, _ = strand
    p, q = arcs[i].segments()[k]
    return tg.sub(q, p)


def _gap_parameter(o: OverlappingDiagram) -> Fraction:
    """A quarter of the smallest parameter gap between cut points and segment ends."""
    cuts = defaultdict(list)
    for x in o.crossings:
        for st in (x.first, x.second):
            cuts[(st[0], st[1])].append(st[2])
    best = Fraction(1, 4)
    for ts in cuts.values():
        ts = sorted([Fraction(0)] + ts + [Fraction(1)])
        best = min(best, min(b - a for a, b in zip(ts, ts[1:])) / 4)
    return best


def _smooth_with(o: OverlappingDiagram, h: Fraction) -> LatticeDiagram:
    arcs = o.arcs
    # per arc: list of (segment, parameter, crossing index, strand point)
    cuts = defaultdict(list)
    new_points = []
    inserted = []
    for n, x in enumerate(o.crossings):
        u = _direction(arcs, x.first)
        v = _direction(arcs, x.second)
        half = tg.scale(h / 2, tg.add(u, v))
        new_points.append(half)
        third = ({Family.A, Family.B, Family.C} - set(x.families)).pop()
        inserted.append(Arc(third, (tg.add(x.point, half), tg.sub(x.point, half))))
        for st in (x.first, x.second):
            cuts[st[0]].append((st[1], st[2], n, st[3]))
    out = []
    for i, a in enumerate(arcs):
        if i not in cuts:
            out.append(a)
            continue
        path = list(a.path)
        current = [path[0]]
        done = 0
        for k, t, n, p in sorted(cuts[i]):
            current.extend(path[done + 1:k + 1])
            done = k
            w = tg.sub(path[k + 1], path[k])
            half = new_points[n]
            current += [tg.sub(p, tg.scale(h, w)), tg.sub(p, half)]
            out.append(Arc(a.family, current))
            current = [tg.add(p, half), tg.add(p, tg.scale(h, w))]
        current.extend(path[done + 1:])
        out.append(Arc(a.family, current))
    return LatticeDiagram(out + inserted)


def smooth_all(o: OverlappingDiagram, check: bool = True) -> LatticeDiagram:
    """Resolve every crossing.  Raises NotLatticeError if the result is not a lattice diagram."""
    h = _gap_parameter(o)
    for _ in range(24):
        d = _smooth_with(o, h)
        if not any(kind not in ("bridge",) for kind, *_ in scan_contacts(d.arcs)):
            break
        h /= 2
    meta = {"generator": "smooth"}
    d = LatticeDiagram(d.arcs, meta)
    if not check:
        return d
    report = validate(d)
    if not report.ok:
        raise NotLatticeError(f"smoothing is not a lattice diagram: {report}", report)
    expected = [x + y for x, y in zip(o.first.classes(), o.second.classes())]
    got = list(d.classes())
    if got != expected:
        raise MismatchError(f"paired classes {got} differ from the sums {expected}")
    return d


# ---------------------------------------------------------------------------
# recursions

# (X)_d is a cable of d copies of (X)_1, each step translating the previous
# cable by CABLE_STEP before overlaying a fresh (X)_1.
CABLE_STEP = (Fraction(1, 1009), Fraction(1, 1013))

# seed family, seed degree, cable family, offset of the cable over the seed
RECURSIONS = {
    "A": ("A", 3, "D", (Fraction(10, 29), Fraction(10, 29))),
    "B": ("B", 2, "D", (Fraction(14, 29), Fraction(5, 29))),
    "C": ("C", 2, "D", (Fraction(2, 29), Fraction(17, 29))),
    "E": ("E", 3, "H", (Fraction(19, 29), Fraction(19, 29))),
    "F": ("F", 2, "H", (Fraction(24, 29), Fraction(15, 29))),
    "G": ("G", 2, "H", (Fraction(13, 29), Fraction(27, 29))),
}

# crossings per copy of (X)_1 in the cable; D and H cross the cable 2 per copy
_PER_COPY = {"A": 3, "E": 3, "B": 2, "F": 2, "C": 3, "G": 3, "D": 2, "H": 2}


def expected_crossings(f: str, d: int) -> int:
    """Crossings of the overlay that produces (f)_d."""
    f = f.upper()
    if f in "DH":
        return 2 * (d - 1)
    _, k, _, _ = RECURSIONS[f]
    return _PER_COPY[f] * (d - k)


@dataclass(frozen=True)
class StepReport:
    target: str
    degree: int
    crossings: int
    expected: int
    bridge_points: int

    @property
    def ok(self) -> bool:
        return self.crossings == self.expected


def _smooth_checked(first, second, offset, target, degree, log):
    o = overlay(first, second, offset)
    out = smooth_all(o)
    b = out.bridge_number
    if b != first.bridge_number + second.bridge_number + len(o.crossings):
        raise MismatchError(f"bridge count {b} is not additive over {len(o.crossings)} crossings")
    step = StepReport(target, degree, len(o.crossings), expected_crossings(target, degree), b)
    if not step.ok:
        raise MismatchError(f"({target})_{degree}: {step.crossings} crossings, expected {step.expected}")
    if log is not None:
        log.append(step)
    return out.with_metadata(family_id=target, degree=degree, generator="recursion")


@lru_cache(maxsize=64)
def _cable_steps(x: str, m: int) -> Tuple[LatticeDiagram, Tuple[StepReport, ...]]:
    if m == 1:
        return family(x, 1), ()
    prev, steps = _cable_steps(x, m - 1)
    log: List[StepReport] = []
    cur = _smooth_checked(family(x, 1), prev, CABLE_STEP, x, m, log)
    return cur, steps + tuple(log)


def _cable(x: str, m: int, log=None) -> LatticeDiagram:
    cur, steps = _cable_steps(x, m)
    if log is not None:
        log.extend(steps)
    return cur


def build_by_recursion(f: str, d: int, log: Optional[List[StepReport]] = None) -> LatticeDiagram:
    """(f)_d from the smallest member by repeated overlay and smoothing.

    D and H stack copies of degree one; the other families overlay their
    seed with a D or H cable.  Pass a list as ``log`` to collect one
    StepReport per smoothing.
    """
    f = f.upper()
    if f in ("D", "H"):
        if d < 1:
            raise RangeError(f"({f})_d needs d >= 1")
        return _cable(f, d, log)
    if f not in RECURSIONS:
        raise RangeError(f"unknown family {f!r}")
    seed, k, x, offset = RECURSIONS[f]
    if d < k:
        raise RangeError(f"the ({f}) recursion starts at degree {k}")
    base = family(seed, k)
    if d == k:
        return base
    return _smooth_checked(base, _cable(x, d - k, log), offset, f, d, log)
