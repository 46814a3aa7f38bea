"""Family classification and the exhaustive case sweep behind it.

Every valid class triple has ab, bc and ca unknotted in their boundary
spheres, so ac, bc and ab each take one of six shapes.  Sweeping the two
free parameters of ac and bc over a box and keeping the genus-minimising
rows of degree at least 3 recovers 32 linear families of triples, which
fall into eight orbits under cyclic relabelling and orientation reversal.
"""

from __future__ import annotations

import csv
import io
import json
import os
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from .diagram import LatticeDiagram, ValidationReport, invariants, triple_invariants, validate
from .homology import Basis, HomClass, pair
from .synth import FAMILIES, coefficients, template

# ---------------------------------------------------------------------------
# verdicts


@dataclass(frozen=True)
class FamilyVerdict:
    family: str
    degree: int

    def __str__(self):
        return f"Family({self.family},{self.degree})"


@dataclass(frozen=True)
class SmallDegree:
    degree: int

    def __str__(self):
        return f"SmallDegree({self.degree})"


@dataclass(frozen=True)
class NonMinimal:
    genus: int
    degree: int

    def __str__(self):
        return f"NonMinimal(genus={self.genus},degree={self.degree})"


@dataclass(frozen=True)
class NotLattice:
    report: ValidationReport = field(compare=False)

    def __str__(self):
        return f"NotLattice({self.report})"


@dataclass(frozen=True)
class Unmatched:
    coefficients: tuple

    def __str__(self):
        return f"Unmatched({self.coefficients})"


def _images(coeffs):
    """The six images of a coefficient triple under relabelling and reversal."""
    pairs = [tuple(coeffs[0:2]), tuple(coeffs[2:4]), tuple(coeffs[4:6])]
    out = []
    for k in range(3):
        rot = pairs[k:] + pairs[:k]
        flat = tuple(x for pq in rot for x in pq)
        out.append(flat)
        out.append(tuple(-x for x in flat))
    return out


def normal_form(coeffs) -> tuple:
    return min(_images(coeffs))


def match_family(coeffs, degree: int) -> Optional[str]:
    """Letter of the template whose orbit contains the triple, at d = |degree|."""
    nf = normal_form(coeffs)
    d = abs(degree)
    hits = [f for f in FAMILIES if d >= 1 and normal_form(coefficients(*template(f, d))) == nf]
    return hits[0] if hits else None


def classify(d: LatticeDiagram):
    report = validate(d)
    if not report.ok:
        return NotLattice(report)
    inv = invariants(d)
    if abs(inv.degree) <= 2:
        return SmallDegree(inv.degree)
    if not inv.genus_minimal:
        return NonMinimal(inv.genus, inv.degree)
    coeffs = coefficients(inv.ab, inv.bc, inv.ca)
    f = match_family(coeffs, inv.degree)
    if f is None:
        return Unmatched(coeffs)
    return FamilyVerdict(f, abs(inv.degree))


# ---------------------------------------------------------------------------
# the case sweep

AC_SHAPES = {
    1: lambda n: (n, 1),
    2: lambda n: (n, -1),
    3: lambda n: (n, 0),
    4: lambda n: (n + 1, n),
    5: lambda n: (n - 1, n),
    6: lambda n: (n, n),
}
BC_SHAPES = {
    "a": lambda m: (1, m),
    "b": lambda m: (-1, m),
    "c": lambda m: (0, m),
    "d": lambda m: (m, m + 1),
    "e": lambda m: (m, m - 1),
    "f": lambda m: (m, m),
}
# shapes whose parameter must be nonzero
_NONZERO = {3, 6, "c", "f", "iii", "vi"}
AB_CASES = ("i", "ii", "iii", "iv", "v", "vi")
# shape pairs that only define diagrams for isolated parameter values
ISOLATED = {(4, "e"), (5, "d")}


def ab_shapes(x: int, y: int):
    """The ab shapes matched by the class x alpha + y beta, with their parameter."""
    out = []
    if x == 1:
        out.append(("i", y))
    if x == -1:
        out.append(("ii", y))
    if y == 0 and x != 0:
        out.append(("iii", x))
    if y == 1:
        out.append(("iv", x))
    if y == -1:
        out.append(("v", x))
    if x == 0 and y != 0:
        out.append(("vi", y))
    return out


@dataclass(frozen=True)
class CaseRow:
    ac_case: int
    bc_case: str
    ab_case: str
    n: int
    m: int
    ell: int
    ab: HomClass
    bc: HomClass
    ca: HomClass
    eps_b: int
    c1: int
    c2: int
    c3: int
    degree: int
    self_int: int
    genus: Fraction
    survives: bool
    flag: str = ""
    class_label: Optional[str] = None

    @property
    def label(self) -> str:
        return f"{self.ac_case}{self.bc_case}{self.ab_case}"

    @property
    def d(self) -> int:
        return abs(self.degree)

    @property
    def coefficients(self):
        return (self.ab.p, self.ab.q, self.bc.p, self.bc.q, self.ca.p, self.ca.q)

    def as_dict(self):
        return {
            "case": self.label, "ac_case": self.ac_case, "bc_case": self.bc_case, "ab_case": self.ab_case,
            "n": self.n, "m": self.m, "ell": self.ell,
            "p1": self.ab.p, "q1": self.ab.q, "p2": self.bc.p, "q2": self.bc.q, "p3": self.ca.p, "q3": self.ca.q,
            "eps_b": self.eps_b, "c1": self.c1, "c2": self.c2, "c3": self.c3,
            "degree": self.degree, "d": self.d, "self_int": self.self_int, "genus": str(self.genus),
            "survives": self.survives, "flag": self.flag, "class": self.class_label or "",
        }


def _rows_for(ac_case: int, N: int) -> List[CaseRow]:
    rows = []
    for n in range(-N, N + 1):
        if n == 0 and ac_case in _NONZERO:
            continue
        ac = HomClass(*AC_SHAPES[ac_case](n))
        for bc_case, shape in BC_SHAPES.items():
            for m in range(-N, N + 1):
                if m == 0 and bc_case in _NONZERO:
                    continue
                bc = HomClass(*shape(m))
                eps_b = pair(ac, bc)
                if eps_b == 0:
                    continue
                ab = ac - bc
                ca = -ac
                for ab_case, ell in ab_shapes(*ab.ab()):
                    rows.append(_row(ac_case, bc_case, ab_case, n, m, ell, ab, bc, ca, eps_b))
    return rows


def _row(ac_case, bc_case, ab_case, n, m, ell, ab, bc, ca, eps_b) -> CaseRow:
    (p1, p2, p3), (q1, q2, q3), degree, self_int, genus, c = triple_invariants(ab, bc, ca, eps_b)
    isolated = (ac_case, bc_case) in ISOLATED
    survives = (not isolated and abs(degree) >= 3 and 2 * genus == (abs(degree) - 1) * (abs(degree) - 2))
    coeffs = (p1, q1, p2, q2, p3, q3)
    return CaseRow(
        ac_case, bc_case, ab_case, n, m, ell,
        HomClass(p1, q1, Basis.AB), HomClass(p2, q2, Basis.BG), HomClass(p3, q3, Basis.GA),
        eps_b, c[0], c[1], c[2], degree, self_int, genus, survives,
        flag="isolated" if isolated else "",
        class_label=match_family(coeffs, degree) if survives else None,
    )


def threads() -> int:
    try:
        return max(1, int(os.environ.get("HEXLAT_THREADS", "1")))
    except ValueError:
        return 1


def enumerate_cases(N: int = 25, workers: Optional[int] = None) -> List[CaseRow]:
    """Every case row with parameters n, m in [-N, N], in lexicographic order."""
    if N < 5:
        raise ValueError("sweep bound must be at least 5")
    workers = workers or threads()
    cases = sorted(AC_SHAPES)
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=min(workers, len(cases))) as pool:
            parts = list(pool.map(_rows_for, cases, [N] * len(cases)))
    else:
        parts = [_rows_for(k, N) for k in cases]
    return [r for part in parts for r in part]


# ---------------------------------------------------------------------------
# the reference table of surviving types
#
# Each entry maps d > 0 to (m, n, (p1, q1), (p2, q2), (p3, q3)).  Entries are
# transcribed as printed; PRINTED_TYPOS lists the corrections applied.


PRINTED_TABLE = {
    "1di": lambda d: (-d + 1, -d + 2, (1, d - 1), (1, d - 1), (1, d - 1)),
    "1dvi": lambda d: (-d + 1, -d + 1, (0, d - 1), (1, d - 1), (1, d)),
    "1fi": lambda d: (-d + 1, -d + 2, (1, d), (0, d - 1), (1, d - 1)),
    "1fvi": lambda d: (-d + 1, -d + 1, (0, d), (0, d - 1), (1, d)),
    "2eii": lambda d: (d - 1, d - 2, (-1, -d + 1), (-1, -d + 1), (-1, -d + 1)),
    "2evi": lambda d: (d - 1, d - 1, (0, -d + 1), (-1, -d + 1), (-1, -d)),
    "2fii": lambda d: (d - 1, d - 2, (-1, -d), (0, -d + 1), (-1, -d + 1)),
    "2fvi": lambda d: (d - 1, d - 1, (0, -d), (0, -d + 1), (-1, -d)),
    "3di": lambda d: (-d, -d + 1, (1, d - 1), (1, d), (0, d - 1)),
    "3dvi": lambda d: (-d, -d, (0, d - 1), (1, d), (0, d)),
    "3eii": lambda d: (d, d - 1, (1, -d + 1), (-1, -d), (0, -d + 1)),
    "3evi": lambda d: (d, d, (0, -d + 1), (-1, -d), (0, -d)),
    "3fi": lambda d: (-d, -d + 1, (1, d), (0, d), (0, d - 1)),
    "3fii": lambda d: (d, d - 1, (-1, -d), (0, -d), (0, -d + 1)),
    "3fvi+": lambda d: (d, d, (0, -d), (0, -d), (0, -d)),
    "3fvi-": lambda d: (-d, -d, (0, d), (0, d), (0, d)),
    "4aiii": lambda d: (-d + 1, -d + 1, (-d + 1, 0), (-d, -1), (-d + 1, -1)),
    "4av": lambda d: (-d + 2, -d + 1, (-d + 1, -1), (-d + 1, -1), (-d + 1, -1)),
    "4ciii": lambda d: (-d, -d, (-d + 1, 0), (-d, 0), (-d, -1)),
    "4cv": lambda d: (-d + 1, -d, (-d + 1, -1), (-d + 1, 0), (-d, -1)),
    "5biii": lambda d: (d - 1, d - 1, (d - 1, 0), (d, 1), (d - 1, 1)),
    "5biv": lambda d: (d - 2, d - 1, (d - 1, 1), (d - 1, 1), (d - 1, 1)),
    "5ciii": lambda d: (d, d, (d - 1, 0), (d, 0), (d, 1)),
    "5civ": lambda d: (d - 1, d, (d - 1, 1), (d - 1, 0), (d, 1)),
    "6aiii": lambda d: (-d + 1, -d + 1, (-d, 0), (-d, -1), (-d + 1, 0)),
    "6av": lambda d: (-d + 2, -d + 1, (-d, -1), (-d + 1, -1), (-d + 1, 0)),
    "6biii": lambda d: (d - 1, d - 1, (d, 0), (d, 1), (d - 1, 0)),
    "6biv": lambda d: (d - 2, d - 1, (d, 1), (d - 1, 1), (d - 1, 0)),
    "6ciii+": lambda d: (d, d, (d, 0), (d, 0), (d, 0)),
    "6ciii-": lambda d: (-d, -d, (-d, 0), (-d, 0), (-d, 0)),
    "6civ": lambda d: (d - 1, d, (d, 1), (d - 1, 0), (d, 0)),
    "6cv": lambda d: (-d + 1, -d, (-d, -1), (-d + 1, 0), (-d, 0)),
}

# label -> (index of the printed class pair, corrected value as a function of d)
PRINTED_TYPOS = {
    "3eii": (0, lambda d: (-1, -d + 1)),
}

CLASS_MEMBERS = {
    "A": ["1di", "2eii"],
    "B": ["1dvi", "1fi", "2evi", "2fii", "3di", "3eii"],
    "C": ["1fvi", "2fvi", "3dvi", "3evi", "3fi", "3fii"],
    "D": ["3fvi+", "3fvi-"],
    "E": ["4av", "5biv"],
    "F": ["4aiii", "4cv", "5biii", "5civ", "6av", "6biv"],
    "G": ["4ciii", "5ciii", "6aiii", "6biii", "6civ", "6cv"],
    "H": ["6ciii+", "6ciii-"],
}


def table_entry(label: str, d: int):
    """Corrected reference entry (m, n, coefficient triple) for a type at d."""
    m, n, *pairs = PRINTED_TABLE[label](d)
    if label in PRINTED_TYPOS:
        k, fix = PRINTED_TYPOS[label]
        pairs[k] = fix(d)
    return m, n, tuple(x for pq in pairs for x in pq)


def printed_sum_defects(d: int = 5):
    """Printed entries whose three classes fail to sum to zero."""
    bad = []
    for label, fn in PRINTED_TABLE.items():
        _, _, ab, bc, ca = fn(d)
        total = HomClass(*ab, Basis.AB) + HomClass(*bc, Basis.BG) + HomClass(*ca, Basis.GA)
        if not total.is_zero():
            bad.append(label)
    return bad


# ---------------------------------------------------------------------------
# summarising the sweep


@dataclass
class SurvivingType:
    """A linear family of surviving rows: m = sm*d + tm, n = sn*d + tn."""

    label: str
    name: str
    sm: int
    tm: int
    sn: int
    tn: int
    rows: List[CaseRow]
    coefficients: Dict[int, tuple]
    class_label: Optional[str] = None

    def m_expr(self):
        return _linear(self.sm, self.tm)

    def n_expr(self):
        return _linear(self.sn, self.tn)


def _linear(s, t):
    head = {1: "d", -1: "-d", 0: ""}[s]
    if t == 0:
        return head or "0"
    return f"{head}{t:+d}" if head else str(t)


@dataclass
class Summary:
    N: int
    types: List[SurvivingType]
    classes: Dict[str, List[str]]
    sporadic: List[CaseRow]
    problems: List[str]

    @property
    def ok(self):
        return not self.problems


def summarize(rows: List[CaseRow], N: int) -> Summary:
    """Group surviving rows into linear types and compare with the reference table."""
    lo, hi = 3, N - 2
    by_label = defaultdict(list)
    for r in rows:
        if r.survives:
            by_label[r.label].append(r)
    types, sporadic = [], []
    for label in sorted(by_label):
        todo = list(by_label[label])
        found = []
        while todo:
            keys = defaultdict(list)
            for r in todo:
                for sm in (1, -1):
                    for sn in (1, -1):
                        keys[(sm, r.m - sm * r.d, sn, r.n - sn * r.d)].append(r)
            key, members = max(keys.items(), key=lambda kv: (len({r.d for r in kv[1]}), kv[0]))
            ds = {r.d for r in members}
            if not all(x in ds for x in range(lo, hi + 1)):
                sporadic.extend(todo)
                break
            found.append((key, members))
            ids = {id(r) for r in members}
            todo = [r for r in todo if id(r) not in ids]
        for key, members in found:
            sm, tm, sn, tn = key
            name = label if len(found) == 1 else label + ("+" if sm > 0 else "-")
            coeffs = {}
            for r in members:
                if coeffs.setdefault(r.d, r.coefficients) != r.coefficients:
                    sporadic.append(r)
            types.append(SurvivingType(label, name, sm, tm, sn, tn, members, coeffs,
                                       class_label=members[0].class_label))
    problems = []
    names = {t.name for t in types}
    for missing in sorted(set(PRINTED_TABLE) - names):
        problems.append(f"missing type {missing}")
    for extra in sorted(names - set(PRINTED_TABLE)):
        problems.append(f"extra type {extra}")
    for t in types:
        if t.name not in PRINTED_TABLE:
            continue
        for d in range(lo, hi + 1):
            m, n, coeffs = table_entry(t.name, d)
            if (t.sm * d + t.tm, t.sn * d + t.tn) != (m, n):
                problems.append(f"{t.name}: parameters differ at d={d}")
                break
            if t.coefficients.get(d) != coeffs:
                problems.append(f"{t.name}: classes differ at d={d}: {t.coefficients.get(d)} vs {coeffs}")
                break
        if len({r.class_label for r in t.rows}) != 1:
            problems.append(f"{t.name}: rows fall in several classes")
    if sporadic:
        problems.append(f"{len(sporadic)} surviving rows outside the linear types")
    classes = defaultdict(list)
    for t in types:
        classes[t.class_label or "?"].append(t.name)
    classes = {k: sorted(v) for k, v in sorted(classes.items())}
    expected = {k: sorted(v) for k, v in CLASS_MEMBERS.items()}
    if classes != expected:
        problems.append(f"class membership differs: {classes}")
    return Summary(N, types, classes, sporadic, problems)


def rows_to_csv(rows: List[CaseRow]) -> str:
    buf = io.StringIO()
    fields = list(rows[0].as_dict()) if rows else ["case"]
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r.as_dict())
    return buf.getvalue()


def summary_to_json(s: Summary) -> str:
    return json.dumps({
        "range": s.N,
        "types": [{"case": t.name, "m": t.m_expr(), "n": t.n_expr(), "class": t.class_label,
                   "rows": len(t.rows)} for t in s.types],
        "classes": s.classes,
        "problems": s.problems,
        "match": s.ok,
    }, indent=2)
