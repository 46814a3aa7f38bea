import math

import pytest
from hypothesis import given, strategies as st

from hexlat.homology import ALPHA, BETA, GAMMA, Basis, HomClass, component_count, is_unlink, pair

ints = st.integers(-30, 30)


def test_basis_conversion_examples():
    assert HomClass(1, 0, Basis.AB).ab() == (1, 0)
    assert HomClass(1, 2, Basis.BG).ab() == (-2, -1)
    for d in range(1, 8):
        assert HomClass(1, d, Basis.GA).ab() == (d - 1, -1)


def test_gamma_is_minus_alpha_minus_beta():
    assert ALPHA + BETA + GAMMA == HomClass(0, 0)


def test_pairing_examples():
    assert pair(ALPHA, BETA) == 1
    assert pair(HomClass(-1, 1), HomClass(-2, -1)) == 3


def test_sum_example():
    assert HomClass(1, 2) + HomClass(-2, -1) == HomClass(-1, 1)


@pytest.mark.parametrize("cls,n", [((0, 7), 7), ((1, 6), 1), ((6, 4), 2), ((0, 0), 0)])
def test_component_count(cls, n):
    assert component_count(HomClass(*cls)) == n


@pytest.mark.parametrize("cls,expected", [((0, 5), True), ((1, 7), True), ((7, 1), True),
                                          ((2, 3), False), ((3, 5), False), ((0, 0), True)])
def test_unlink(cls, expected):
    assert is_unlink(HomClass(*cls)) is expected


@given(ints, ints, ints, ints)
def test_pairing_antisymmetric_and_bilinear(a, b, c, d):
    u, v = HomClass(a, b), HomClass(c, d)
    assert pair(u, v) == -pair(v, u)
    assert pair(u, u) == 0
    assert pair(u + v, v) == pair(u, v)


@given(ints, ints, st.sampled_from(list(Basis)), st.sampled_from(list(Basis)))
def test_basis_round_trip(p, q, b1, b2):
    c = HomClass(p, q, b1)
    assert c.in_basis(b2).in_basis(b1) == c
    assert c.in_basis(b2) == c


@given(ints, ints)
def test_component_count_is_gcd(a, b):
    assert component_count(HomClass(a, b)) == math.gcd(a, b)
