"""Floating-point checks of the analytic picture behind the exact variety diagrams.

Near the torus |z1| = |z2| = |z3| the curve z1 z2^(d-1) + z2 + z1^(d-1) = 0
(chart z3 = 1) reduces, after the substitution nu = (d-1) theta - psi and
omega = theta + (d-2) psi, to the two-term relation

    r^t e^{i nu} + r e^{i omega} = -1,    t = d - 1,

whose solutions for r in [r0, 1] form one arc.  Everything here is sampled
and compared against the closed forms of ``variety_exact``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import ConvergenceError, MismatchError, RangeError, SeparationError
from .variety_exact import VarietyKind, endpoints, sheet_count

TAU = 2 * math.pi


@dataclass(frozen=True)
class ToleranceConfig:
    root_tol: float = 1e-12
    match_tol: float = 1e-6
    grad_floor: float = 1e-1
    samples: int = 512
    separation: float = 1e-3
    seed: int = 0

    def __post_init__(self):
        for name in ("root_tol", "match_tol", "grad_floor", "separation"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if self.samples < 2:
            raise ValueError("need at least two samples per arc")


DEFAULT = ToleranceConfig()


@dataclass
class TraceResult:
    points: np.ndarray            # complex, shape (n, 2): samples (z1, z2)
    r: np.ndarray
    nu: np.ndarray
    omega: np.ndarray
    endpoint_deviation: float
    max_residual: float
    injectivity_violations: int
    j: Optional[int] = None
    theta: Optional[np.ndarray] = None
    psi: Optional[np.ndarray] = None
    r0: float = float("nan")

    @property
    def ok(self) -> bool:
        return self.injectivity_violations == 0


def bisect(fn, lo: float, hi: float, tol: float = 1e-15, max_iter: int = 200) -> float:
    """Root of fn in [lo, hi]; the endpoints must bracket a sign change."""
    flo, fhi = fn(lo), fn(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise ConvergenceError(f"no sign change on [{lo}, {hi}]")
    for _ in range(max_iter):
        mid = (lo + hi) / 2
        fm = fn(mid)
        if fm == 0 or hi - lo < tol:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def r_zero(t: float) -> float:
    """The unique r in (0, 1) with r^t + r = 1."""
    if t < 1:
        raise RangeError("exponent must be at least 1")
    return bisect(lambda r: r ** t + r - 1, 0.0, 1.0)


def _branch(r: np.ndarray, t: float, sign: int):
    """(nu, omega) on the branch with nu in [pi/2, pi] (sign +1) or [pi, 3pi/2] (sign -1)."""
    a = r ** t
    c = np.clip((r * r - a * a - 1) / (2 * a), -1.0, 1.0)
    nu = np.arccos(c) if sign > 0 else TAU - np.arccos(c)
    w = (-1 - a * np.exp(1j * nu)) / r
    omega = np.mod(np.angle(w), TAU)
    return nu, omega


def _injectivity(points: np.ndarray, tol: float = 1e-9) -> int:
    """Pairs of non-adjacent samples that coincide."""
    diff = points[:, None, :] - points[None, :, :]
    dist = np.sqrt((np.abs(diff) ** 2).sum(axis=2))
    n = len(points)
    idx = np.arange(n)
    far = np.abs(idx[:, None] - idx[None, :]) > 1
    return int(np.count_nonzero(np.triu(far & (dist < tol))))


def arc_solution(t: float, cfg: ToleranceConfig = DEFAULT) -> TraceResult:
    """Sample the arc r^t e^{i nu} + r e^{i omega} = -1 in D^2 x S^1.

    The arc runs from (e^{2 pi i/3}, e^{4 pi i/3}) at r = 1 down the first
    branch to (-r0, -1) and back up the second branch to (e^{4 pi i/3}, e^{2 pi i/3}).
    """
    r0 = r_zero(t)
    n = cfg.samples
    r_down = np.linspace(1.0, r0, n)
    r_up = r_down[::-1][1:]
    nu1, om1 = _branch(r_down, t, +1)
    nu2, om2 = _branch(r_up, t, -1)
    r = np.concatenate([r_down, r_up])
    nu = np.concatenate([nu1, nu2])
    omega = np.concatenate([om1, om2])
    z1 = r * np.exp(1j * nu)
    z2 = np.exp(1j * omega)
    pts = np.stack([z1, z2], axis=1)
    residual = np.abs(r ** t * np.exp(1j * nu) + r * np.exp(1j * omega) + 1)
    e1, e2 = np.exp(TAU * 1j / 3), np.exp(2 * TAU * 1j / 3)
    dev = max(
        abs(pts[0, 0] - e1), abs(pts[0, 1] - e2),
        abs(pts[-1, 0] - e2), abs(pts[-1, 1] - e1),
        abs(pts[n - 1, 0] + r0), abs(pts[n - 1, 1] + 1),
    )
    return TraceResult(pts, r, nu, omega, float(dev), float(residual.max()), _injectivity(pts), r0=r0)


# ---------------------------------------------------------------------------
# the region R_d


def rd_slice(d: int, s0: float, cfg: ToleranceConfig = DEFAULT) -> Tuple[float, float]:
    """The slice R_d(s0) = [r0, r0'] of {r^(d-1) - r s^(d-1) <= s <= r^(d-1) + r s^(d-1)}."""
    if d < 2:
        raise RangeError("need d >= 2")
    if not 0 < s0 <= 1:
        raise RangeError("s0 must lie in (0, 1]")
    k = s0 ** (d - 1)
    f = lambda r: r ** (d - 1) + r * k - s0  # noqa: E731
    g = lambda r: r ** (d - 1) - r * k - s0  # noqa: E731
    r0 = bisect(f, 0.0, 1.0)
    if g(1.0) <= 0:
        r1 = 1.0
    else:
        lo = 0.0 if d == 2 else s0 ** ((d - 1) / (d - 2))
        r1 = bisect(g, lo, 1.0)
    if not r0 < r1:
        raise ConvergenceError(f"empty slice at s0={s0}")
    return r0, r1


def in_region(d: int, r: float, s: float, margin: float = 0.0) -> bool:
    F = r ** (d - 1) - r * s ** (d - 1) - s
    G = r ** (d - 1) + r * s ** (d - 1) - s
    return F < -margin and G > margin


# ---------------------------------------------------------------------------
# torus solutions


def _torus_equation(d, r, s, theta, psi):
    """f(r e^{i theta}, s e^{i psi}) divided by e^{i psi}, and its theta/psi derivatives."""
    nu = (d - 1) * theta - psi
    om = theta + (d - 2) * psi
    A = r * s ** (d - 1) * np.exp(1j * om)
    C = r ** (d - 1) * np.exp(1j * nu)
    val = A + s + C
    d_theta = 1j * (A + (d - 1) * C)
    d_psi = 1j * ((d - 2) * A - C)
    return val, d_theta, d_psi


def _newton_torus(d, r, s, theta, psi, tol, iters=60):
    for _ in range(iters):
        v, dt, dp = _torus_equation(d, r, s, theta, psi)
        # real 2x2 system [Re dt, Re dp; Im dt, Im dp] [x; y] = -[Re v; Im v]
        a, b, c, e = dt.real, dp.real, dt.imag, dp.imag
        det = a * e - b * c
        det = np.where(np.abs(det) < 1e-300, 1e-300, det)
        x = -(e * v.real - b * v.imag) / det
        y = -(-c * v.real + a * v.imag) / det
        step = np.maximum(1.0, np.hypot(x, y) / 0.5)
        theta = theta + x / step
        psi = psi + y / step
        if np.all(np.abs(v) < tol):
            break
    v, _, _ = _torus_equation(d, r, s, theta, psi)
    return np.mod(theta, TAU), np.mod(psi, TAU), np.abs(v)


def _dedupe(theta, psi, tol):
    out: List[Tuple[float, float]] = []
    for t, p in sorted(zip(theta.tolist(), psi.tolist())):
        if not any(_torus_dist((t, p), q) < tol for q in out):
            out.append((t, p))
    return out


def _torus_dist(a, b, period=TAU):
    dx = abs(a[0] - b[0]) % period
    dy = abs(a[1] - b[1]) % period
    return math.hypot(min(dx, period - dx), min(dy, period - dy))


def torus_solutions(d: int, r: float, s: float, cfg: ToleranceConfig = DEFAULT, grid: Optional[int] = None):
    """All (theta, psi) in [0, 2pi)^2 with f(r e^{i theta}, s e^{i psi}) = 0, by seeded Newton."""
    n = grid or max(24, 6 * sheet_count(d))
    ts = (np.arange(n) + 0.5) * TAU / n
    th, ps = np.meshgrid(ts, ts, indexing="ij")
    th, ps, res = _newton_torus(d, r, s, th.ravel(), ps.ravel(), cfg.root_tol)
    keep = res < 1e3 * cfg.root_tol
    return _dedupe(th[keep], ps[keep], 1e-7)


def exact_sigma_points(d: int, kind: VarietyKind = VarietyKind.V) -> List[Tuple[float, float]]:
    """The 2(d^2-3d+3) bridge points in turn units, from the closed forms."""
    pts = []
    for j in range(1, sheet_count(d) + 1):
        for p in endpoints(kind, d, j):
            pts.append((float(p[0]), float(p[1])))
    return pts


def _match(numeric, exact, tol):
    """Match points (turn units) one to one; returns (max deviation, unmatched numeric, unmatched exact)."""
    left = list(exact)
    worst = 0.0
    unmatched = []
    for p in numeric:
        best = min(range(len(left)), key=lambda k: _torus_dist(p, left[k], 1.0), default=None)
        if best is None or _torus_dist(p, left[best], 1.0) > tol:
            unmatched.append(p)
            continue
        worst = max(worst, _torus_dist(p, left[best], 1.0))
        left.pop(best)
    return worst, unmatched, left


@dataclass
class SigmaReport:
    d: int
    numeric: List[Tuple[float, float]]
    exact: List[Tuple[float, float]]
    max_deviation: float

    @property
    def count(self):
        return len(self.numeric)


def sigma_points(d: int, cfg: ToleranceConfig = DEFAULT) -> SigmaReport:
    """Solutions on the central torus (r = s = 1), matched against the exact bridge points."""
    if d < 1:
        raise RangeError("need d >= 1")
    sols = torus_solutions(d, 1.0, 1.0, cfg)
    numeric = [(t / TAU, p / TAU) for t, p in sols]
    exact = exact_sigma_points(d)
    worst, extra, missing = _match(numeric, exact, cfg.match_tol)
    if extra or missing or len(numeric) != 2 * sheet_count(d):
        raise MismatchError(f"d={d}: {len(extra)} unmatched numeric points {extra[:3]}, "
                            f"{len(missing)} unmatched exact points {missing[:3]}")
    return SigmaReport(d, numeric, exact, worst)


def cone_slice_counts(d: int, grid: int = 50, cfg: ToleranceConfig = DEFAULT, margin: float = 1e-3):
    """Solution counts on the tori (r e^{i theta}, s e^{i psi}) for (r, s) in a grid inside R_d."""
    counts = {}
    vals = (np.arange(grid) + 0.5) / grid
    for r in vals:
        for s in vals:
            if in_region(d, r, s, margin):
                counts[(float(r), float(s))] = len(torus_solutions(d, float(r), float(s), cfg))
    return counts


# ---------------------------------------------------------------------------
# solution arcs in the solid torus


def _polish_fixed_r(d, r, theta, psi, tol):
    """Newton at fixed r; near the fold at r0 the system is singular, so keep
    the unpolished sample wherever polishing does not help."""
    ones = np.ones_like(r)
    v0 = np.abs(_torus_equation(d, r, ones, theta, psi)[0])
    th, ps, res = _newton_torus(d, r, ones, theta, psi, tol, iters=8)
    moved = np.hypot(np.angle(np.exp(1j * (th - theta))), np.angle(np.exp(1j * (ps - psi))))
    better = (res < v0) & (moved < 1e-6)
    th = np.where(better, th, np.mod(theta, TAU))
    ps = np.where(better, ps, np.mod(psi, TAU))
    return th, ps, np.where(better, res, v0)


def trace_h1_arcs(d: int, cfg: ToleranceConfig = DEFAULT) -> List[TraceResult]:
    """The d^2-3d+3 solution arcs of V_d in the solid torus |z1| <= |z2| = |z3|."""
    if d < 2:
        raise RangeError("need d >= 2")
    N = sheet_count(d)
    base = arc_solution(d - 1, cfg)
    traces = []
    for j in range(1, N + 1):
        theta = ((d - 2) * base.nu + base.omega + TAU * j) / N
        psi = (d - 1) * theta - base.nu
        th, ps, res = _polish_fixed_r(d, base.r, theta, psi, cfg.root_tol)
        # unwrap to follow the lift of the arc
        th = np.unwrap(th)
        ps = np.unwrap(ps)
        z1 = base.r * np.exp(1j * th)
        z2 = np.exp(1j * ps)
        pts = np.stack([z1, z2], axis=1)
        lo, hi = endpoints(VarietyKind.V, d, j)
        start = (th[0] / TAU, ps[0] / TAU)
        end = (th[-1] / TAU, ps[-1] / TAU)
        # the first branch ends at x+, the second at x-
        dev = max(_torus_dist(start, (float(hi[0]), float(hi[1])), 1.0),
                  _torus_dist(end, (float(lo[0]), float(lo[1])), 1.0))
        traces.append(TraceResult(pts, base.r, base.nu, base.omega, dev, float(res.max()),
                                  _injectivity(pts), j=j, theta=th, psi=ps, r0=base.r0))
    worst = max(t.endpoint_deviation for t in traces)
    if worst > cfg.match_tol:
        raise MismatchError(f"trace endpoints deviate by {worst:.3g} from the exact bridge points")
    sep = min_separation(traces)
    if sep < cfg.separation:
        raise SeparationError(f"two traces come within {sep:.3g}")
    return traces


def min_separation(traces: Sequence[TraceResult]) -> float:
    best = math.inf
    for i in range(len(traces)):
        for k in range(i + 1, len(traces)):
            a, b = traces[i].points, traces[k].points
            diff = a[:, None, :] - b[None, :, :]
            best = min(best, float(np.sqrt((np.abs(diff) ** 2).sum(axis=2)).min()))
    return best


def traces_to_csv(traces: Sequence[TraceResult], d: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["j", "sample", "r", "theta", "psi", "residual"])
    for tr in traces:
        z1, z2 = tr.points[:, 0], tr.points[:, 1]
        res = np.abs(f_and_grad(d, z1, z2)[0])
        for k in range(len(tr.r)):
            w.writerow([tr.j, k, f"{tr.r[k]:.15g}", f"{tr.theta[k]:.15g}", f"{tr.psi[k]:.15g}",
                        f"{res[k]:.3g}"])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# regular value check


def f_and_grad(d: int, z1, z2):
    val = z1 * z2 ** (d - 1) + z2 + z1 ** (d - 1)
    g1 = z2 ** (d - 1) + (d - 1) * z1 ** (d - 2)
    g2 = (d - 1) * z1 * z2 ** (d - 2) + 1
    return val, g1, g2


@dataclass
class SmoothnessReport:
    d: int
    samples: int
    points: int
    min_gradient: float
    max_residual: float
    critical_min_value: float

    @property
    def ok(self):
        return self.points > 0


def smoothness_check(d: int, cfg: ToleranceConfig = DEFAULT, samples: int = 10_000,
                     seed: Optional[int] = None) -> SmoothnessReport:
    """Minimum of |df| over sampled points of {f = 0} in the bidisk."""
    if d < 2:
        raise RangeError("need d >= 2")
    rng = np.random.default_rng(cfg.seed if seed is None else seed)
    rad = np.sqrt(rng.random(samples))
    ang = rng.random(samples) * TAU
    z1s = rad * np.exp(1j * ang)
    best, worst_res, count = math.inf, 0.0, 0
    for z1 in z1s:
        if abs(z1) < 1e-12:
            continue
        # z1 z2^(d-1) + z2 + z1^(d-1) as a polynomial in z2
        coeffs = np.zeros(d, dtype=complex)
        coeffs[0] = z1
        coeffs[-2] += 1
        coeffs[-1] += z1 ** (d - 1)
        for z2 in np.roots(coeffs):
            for _ in range(3):
                v, _, g2 = f_and_grad(d, z1, z2)
                if g2 != 0:
                    z2 = z2 - v / g2
            if abs(z2) > 1:
                continue
            v, g1, g2 = f_and_grad(d, z1, z2)
            worst_res = max(worst_res, abs(v))
            best = min(best, math.hypot(abs(g1), abs(g2)))
            count += 1
    return SmoothnessReport(d, samples, count, best, worst_res, critical_values(d))


def critical_points(d: int):
    """Common zeros of both partial derivatives of f."""
    N = sheet_count(d)
    target = (-1) ** (d - 1) * float(d - 1) ** (3 - d)
    mod = abs(target) ** (1 / N)
    arg = 0.0 if target > 0 else math.pi
    out = []
    for k in range(N):
        z2 = mod * np.exp(1j * (arg + TAU * k) / N)
        z1 = -1 / ((d - 1) * z2 ** (d - 2))
        out.append((complex(z1), complex(z2)))
    return out


def critical_values(d: int) -> float:
    """Smallest |f| over the critical points; positive exactly when 0 is a regular value."""
    if d == 2:
        z1, z2 = -1.0, -1.0
        return abs(f_and_grad(2, z1, z2)[0])
    return min(abs(f_and_grad(d, z1, z2)[0]) for z1, z2 in critical_points(d))
