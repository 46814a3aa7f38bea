"""Exact JSON serialisation of lattice diagrams.

Files look like::

    {"format": "hexlat-diagram/1", "sign": 1,
     "arcs": [{"family": "a", "points": [["0", "1/3"], ["2/3", "1"]]}, ...],
     "metadata": {"family_id": "D", "degree": 1, "generator": "synth"}}

Coordinates are cover lifts in turn units, written as rational strings.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Union

from .diagram import Arc, Family, LatticeDiagram, validate
from .errors import ParseError, ValidationError

FORMAT = "hexlat-diagram/1"
EXTENSION = ".hexlat.json"
_META_KEYS = ("family_id", "degree", "generator")


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s, field: str = "") -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise ParseError(f"expected a rational string, got {type(s).__name__} {s!r}", field=field)
    try:
        text = str(s).strip()
        if any(ch in text for ch in ".eE"):
            raise ValueError
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {s!r}", field=field) from None


def canonicalize(d: LatticeDiagram) -> LatticeDiagram:
    """Arcs shifted to start in the unit square and sorted by family, then first point."""
    arcs = sorted((a.normalized() for a in d.arcs), key=lambda a: (a.family.value, a.path))
    return LatticeDiagram(arcs, d.metadata)


def to_dict(d: LatticeDiagram) -> dict:
    c = canonicalize(d)
    out = {
        "format": FORMAT,
        "sign": d.sign,
        "arcs": [
            {"family": a.family.value, "points": [[format_rational(x), format_rational(y)] for x, y in a.path]}
            for a in c.arcs
        ],
    }
    meta = {k: d.metadata[k] for k in _META_KEYS if k in d.metadata}
    if meta:
        out["metadata"] = meta
    return out


def dumps(d: LatticeDiagram) -> str:
    return json.dumps(to_dict(d), indent=1) + "\n"


def save(d: LatticeDiagram, path=None, check: bool = True) -> bytes:
    """Serialise a valid diagram; writes to ``path`` when given."""
    if check:
        report = validate(d)
        if not report.ok:
            raise ValidationError(f"refusing to save an invalid diagram: {report}", report)
    data = dumps(d).encode()
    if path is not None:
        Path(path).write_bytes(data)
    return data


def from_dict(obj, check: bool = True) -> LatticeDiagram:
    if not isinstance(obj, dict):
        raise ParseError("top level must be an object")
    if obj.get("format") != FORMAT:
        raise ParseError(f"unsupported format {obj.get('format')!r}", field="format")
    arcs_in = obj.get("arcs")
    if not isinstance(arcs_in, list):
        raise ParseError("missing arc list", field="arcs")
    arcs = []
    for i, item in enumerate(arcs_in):
        where = f"arcs[{i}]"
        if not isinstance(item, dict):
            raise ParseError("arc must be an object", field=where)
        try:
            fam = Family.parse(item.get("family"))
        except (KeyError, ValueError):
            raise ParseError(f"bad family {item.get('family')!r}", field=where + ".family") from None
        pts = item.get("points")
        if not isinstance(pts, list) or len(pts) < 2:
            raise ParseError("an arc needs at least two points", field=where + ".points")
        path = []
        for k, pt in enumerate(pts):
            f = f"{where}.points[{k}]"
            if not isinstance(pt, list) or len(pt) != 2:
                raise ParseError("a point is a pair of rationals", field=f)
            path.append((parse_rational(pt[0], f), parse_rational(pt[1], f)))
        arcs.append(Arc(fam, tuple(path)))
    meta = obj.get("metadata") or {}
    if not isinstance(meta, dict):
        raise ParseError("metadata must be an object", field="metadata")
    d = LatticeDiagram(arcs, meta)
    if check:
        report = validate(d)
        if not report.ok:
            raise ValidationError(f"diagram does not validate: {report}", report)
        sign = obj.get("sign")
        if sign is not None and sign != d.sign:
            raise ValidationError(f"declared sign {sign} but bridge points have sign {d.sign}", report)
    return d


def load(data: Union[bytes, str], check: bool = True) -> LatticeDiagram:
    if isinstance(data, bytes):
        try:
            data = data.decode()
        except UnicodeDecodeError as e:
            raise ParseError(f"not UTF-8: {e}") from None
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno) from None
    return from_dict(obj, check=check)


def load_file(path, check: bool = True) -> LatticeDiagram:
    return load(Path(path).read_bytes(), check=check)
