import math

import numpy as np
import pytest

from hexlat import variety_numeric as vn
from hexlat.errors import RangeError


def test_t2_root_is_golden():
    assert abs(vn.r_zero(2) - (math.sqrt(5) - 1) / 2) < 1e-12


def test_t1_is_cosine_curve():
    r = vn.arc_solution(1)
    assert abs(r.r0 - 0.5) < 1e-12
    nu = r.nu
    mask = np.abs(np.cos(nu)) > 1e-9
    assert np.allclose(r.r[mask], -1 / (2 * np.cos(nu[mask])), atol=1e-9)
    assert np.all((nu >= 2 * math.pi / 3 - 1e-9) & (nu <= 4 * math.pi / 3 + 1e-9))


@pytest.mark.parametrize("t", [1, 1.5, 2, 3, 6])
def test_arc_endpoints_and_residuals(t):
    r = vn.arc_solution(t)
    assert r.endpoint_deviation < 1e-6
    assert r.max_residual < 1e-12
    assert r.injectivity_violations == 0


def test_rd_slice_closed_forms():
    s = 0.5
    lo, hi = vn.rd_slice(3, s)
    disc = math.sqrt(s ** 4 + 4 * s)
    assert abs(lo - (-s * s + disc) / 2) < 1e-9
    assert abs(hi - (s * s + disc) / 2) < 1e-9
    assert vn.rd_slice(2, 1.0) == pytest.approx((0.5, 1.0), abs=1e-12)


@pytest.mark.parametrize("d,n", [(3, 6), (4, 14), (5, 26)])
def test_sigma_counts(d, n):
    rep = vn.sigma_points(d)
    assert rep.count == n
    assert rep.max_deviation < 1e-6


@pytest.mark.parametrize("d", [3, 4, 5])
def test_traces_match_exact_endpoints(d):
    tr = vn.trace_h1_arcs(d)
    assert len(tr) == d * d - 3 * d + 3
    assert max(t.endpoint_deviation for t in tr) < 1e-6
    assert max(t.max_residual for t in tr) < 1e-10
    assert vn.min_separation(tr) > 1e-3


def test_trace_d3_endpoint_pattern():
    t = vn.trace_h1_arcs(3)[0]
    end = (t.theta[-1] / (2 * math.pi) % 1, t.psi[-1] / (2 * math.pi) % 1)
    assert end == pytest.approx((2 / 3, 2 / 3), abs=1e-9)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_regular_value(d):
    rep = vn.smoothness_check(d, samples=500)
    assert rep.points > 0
    assert rep.min_gradient > 0.1
    assert rep.critical_min_value > 0


def test_critical_points_solve_gradient_system():
    for d in (3, 4, 5):
        for z1, z2 in vn.critical_points(d):
            _, g1, g2 = vn.f_and_grad(d, z1, z2)
            assert abs(g1) < 1e-9 and abs(g2) < 1e-9


def test_cone_slices():
    counts = vn.cone_slice_counts(3, grid=8)
    assert counts and set(counts.values()) == {6}


def test_config_validation():
    with pytest.raises(ValueError):
        vn.ToleranceConfig(match_tol=0)
    with pytest.raises(RangeError):
        vn.rd_slice(3, 1.5)


def test_csv_dump():
    tr = vn.trace_h1_arcs(3)
    text = vn.traces_to_csv(tr, 3)
    lines = text.splitlines()
    assert lines[0] == "j,sample,r,theta,psi,residual"
    assert len(lines) == 1 + sum(len(t.r) for t in tr)
