"""SVG drawings of diagrams in a fundamental domain of the torus.

Arcs are cut wherever they leave the domain and the pieces are translated
back, so each arc becomes ``1 + (number of boundary crossings)`` polylines.
In hexagon mode the torus is drawn with alpha, beta, gamma at 120 degrees to
one another and the domain is the Voronoi cell of that lattice.
"""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from . import torus_geom as tg
from .diagram import Family, LatticeDiagram

COLORS = {Family.A: "#d62728", Family.B: "#1f77b4", Family.C: "#2ca02c"}
_ZERO, _ONE = Fraction(0), Fraction(1)

# Domain boundaries lie on the lines where one of these functionals of the
# lattice coordinates is an integer.  For the hexagon (the Voronoi cell of
# the lattice with |alpha| = |beta| = 1 at 120 degrees) these are the
# perpendicular bisectors towards the six nearest lattice points.
_FUNCTIONALS = {"square": [(1, 0), (0, 1)], "hexagon": [(2, -1), (-1, 2), (1, 1)]}
_GRAM = ((_ONE, Fraction(-1, 2)), (Fraction(-1, 2), _ONE))


def _gram(u, v):
    return sum(u[i] * _GRAM[i][j] * v[j] for i in range(2) for j in range(2))


def _shift_square(v):
    return tg.lattice_shift(v)


def _shift_hex(v):
    """Nearest lattice point in the hexagonal metric, ties broken towards the smaller one."""
    k = (math.floor(v[0]), math.floor(v[1]))
    best = None
    for dx in (-1, 0, 1, 2):
        for dy in (-1, 0, 1, 2):
            c = (k[0] + dx, k[1] + dy)
            w = (v[0] - c[0], v[1] - c[1])
            q = _gram(w, w)
            if best is None or q < best[0] or (q == best[0] and c < best[1]):
                best = (q, c)
    return best[1]


_SHIFT = {"square": _shift_square, "hexagon": _shift_hex}


def split_segment(p, q, domain: str = "square") -> List[Tuple[tg.Point, tg.Point, Tuple[int, int]]]:
    """Pieces (start, end, shift) of the cover segment pq; each piece minus shift lies in the domain."""
    r = tg.sub(q, p)
    ts = {_ZERO, _ONE}
    for n in _FUNCTIONALS[domain]:
        a = n[0] * p[0] + n[1] * p[1]
        rate = n[0] * r[0] + n[1] * r[1]
        if rate == 0:
            continue
        lo, hi = sorted((a, a + rate))
        for m in range(math.ceil(lo), math.floor(hi) + 1):
            t = (m - a) / rate
            if 0 < t < 1:
                ts.add(t)
    ts = sorted(ts)
    out = []
    for t0, t1 in zip(ts, ts[1:]):
        k = _SHIFT[domain](tg.add(p, tg.scale((t0 + t1) / 2, r)))
        a, b = tg.add(p, tg.scale(t0, r)), tg.add(p, tg.scale(t1, r))
        if out and out[-1][2] == k:
            out[-1] = (out[-1][0], b, k)
        else:
            out.append((a, b, k))
    return out


def arc_pieces(path: Sequence[tg.Point], domain: str = "square") -> List[List[tg.Point]]:
    """Polylines of one arc inside the domain, cut at the domain boundary."""
    pieces: List[List[tg.Point]] = []
    current: List[tg.Point] = []
    last = None
    for p, q in zip(path, path[1:]):
        for a, b, k in split_segment(p, q, domain):
            a, b = tg.sub(a, k), tg.sub(b, k)
            if current and k == last:
                current.append(b)
            else:
                if current:
                    pieces.append(current)
                current = [a, b]
            last = k
    if current:
        pieces.append(current)
    return pieces


@dataclass
class RenderOptions:
    domain: str = "square"
    show_foliation: bool = False
    scale: float = 400.0
    show_signs: bool = True
    leaves: int = 6


def _to_screen(v, opts: RenderOptions):
    x, y = float(v[0]), float(v[1])
    s, m = opts.scale, opts.scale * 0.1
    if opts.domain == "square":
        return (m + s * x, m + s * (1 - y))
    # alpha -> (1, 0), beta -> (-1/2, sqrt3/2); the cell spans about 1.16 wide
    X = x - y / 2
    Y = y * math.sqrt(3) / 2
    c = s * 0.6
    return (m + c + s * X, m + c - s * Y)


def _canvas(opts):
    s, m = opts.scale, opts.scale * 0.1
    if opts.domain == "square":
        return s + 2 * m, s + 2 * m
    return 1.2 * s + 2 * m, 1.2 * s + 2 * m


def _points_attr(pts, opts):
    return " ".join(f"{x:.3f},{y:.3f}" for x, y in (_to_screen(p, opts) for p in pts))


def _outline(opts):
    if opts.domain == "square":
        corners = [(0, 0), (1, 0), (1, 1), (0, 1), (0, 0)]
    else:
        F = Fraction
        corners = [(F(2, 3), F(1, 3)), (F(1, 3), F(2, 3)), (F(-1, 3), F(1, 3)),
                   (F(-2, 3), F(-1, 3)), (F(-1, 3), F(-2, 3)), (F(1, 3), F(-1, 3)), (F(2, 3), F(1, 3))]
    return corners


def _leaves(opts):
    """Straight leaves of the three foliations as cover segments."""
    out = []
    n = opts.leaves
    for fam in Family:
        core = fam.core.ab()
        normal = (Fraction(-core[1]), Fraction(core[0]))
        for k in range(n):
            base = tg.scale(Fraction(2 * k + 1, 2 * n), normal)
            # one full period of the leaf
            out.append((fam, base, tg.add(base, core)))
    return out


def render_svg(d: LatticeDiagram, domain: str = "square", show_foliation: bool = False,
               scale: float = 400.0, show_signs: bool = True) -> bytes:
    if domain not in ("square", "hexagon"):
        raise ValueError(f"unknown domain {domain!r}")
    opts = RenderOptions(domain, show_foliation, scale, show_signs)
    w, h = _canvas(opts)
    svg = ET.Element("svg", xmlns="http://www.w3.org/2000/svg", version="1.1",
                     width=f"{w:.0f}", height=f"{h:.0f}", viewBox=f"0 0 {w:.0f} {h:.0f}")
    ET.SubElement(svg, "path", {
        "class": "domain", "fill": "none", "stroke": "#999", "stroke-width": "1",
        "d": "M " + " L ".join(f"{x:.3f},{y:.3f}" for x, y in (_to_screen(p, opts) for p in _outline(opts))) + " Z",
    })
    if show_foliation:
        for fam, p, q in _leaves(opts):
            for pts in arc_pieces([p, q], domain):
                ET.SubElement(svg, "path", {
                    "class": f"leaf leaf-{fam.value}", "fill": "none", "stroke": COLORS[fam],
                    "stroke-opacity": "0.2", "stroke-dasharray": "4,4", "stroke-width": "1",
                    "d": "M " + _points_attr(pts, opts).replace(" ", " L "),
                })
    for i, a in enumerate(d.arcs):
        for pts in arc_pieces(a.path, domain):
            ET.SubElement(svg, "path", {
                "class": f"arc arc-{a.family.value}", "data-arc": str(i), "fill": "none",
                "stroke": COLORS[a.family], "stroke-width": "2",
                "d": "M " + _points_attr(pts, opts).replace(" ", " L "),
            })
    orient = d.orientation if d.is_oriented() else None
    shift = _SHIFT[domain]
    for p in d.bridge_points:
        q = tg.sub(p, shift(p))
        x, y = _to_screen(q, opts)
        ET.SubElement(svg, "circle", {"class": "bridge", "cx": f"{x:.3f}", "cy": f"{y:.3f}", "r": "3", "fill": "black"})
        if show_signs and orient:
            t = ET.SubElement(svg, "text", {"class": "sign", "x": f"{x + 4:.3f}", "y": f"{y - 4:.3f}", "font-size": "10"})
            t.text = orient[p]
    label = _caption(d.metadata)
    if label:
        t = ET.SubElement(svg, "text", {"class": "caption", "x": "8", "y": "16", "font-size": "14"})
        t.text = label
    return ET.tostring(svg, encoding="utf-8", xml_declaration=True) + b"\n"


def _caption(meta) -> str:
    fam, deg = meta.get("family_id"), meta.get("degree")
    if fam and deg is not None:
        return f"({fam})_{deg}"
    if meta.get("generator"):
        return str(meta["generator"])
    return ""


def element_count(d: LatticeDiagram, domain: str = "square") -> int:
    return sum(len(arc_pieces(a.path, domain)) for a in d.arcs)
