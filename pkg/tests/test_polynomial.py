"""Exact polynomial ring tests: arithmetic against direct evaluation,
rising factorials against Pochhammer values."""

from hypothesis import given, settings
from hypothesis import strategies as st

from hyperforge.backend import MPQ
from hyperforge.gammafn import poch
from hyperforge.polynomial import DensePoly, rising_linear

small_rationals = st.fractions(
    min_value=-5, max_value=5, max_denominator=4
).map(MPQ)

polys = st.lists(small_rationals, min_size=1, max_size=5).map(
    lambda cs: DensePoly(tuple(cs))
)


def test_construction_trims_trailing_zeros():
    p = DensePoly((MPQ(1), MPQ(2), MPQ(0), MPQ(0)))
    assert p.degree == 1
    assert DensePoly((MPQ(0), MPQ(0))).is_zero()


def test_linear_and_eval():
    p = DensePoly.linear(MPQ(3), MPQ(-2))  # 3 - 2t
    assert p(MPQ(1, 2)) == 2
    assert p(0) == 3


@settings(max_examples=200)
@given(polys, polys, small_rationals)
def test_ring_ops_commute_with_evaluation(p, q, t):
    assert (p + q)(t) == p(t) + q(t)
    assert (p * q)(t) == p(t) * q(t)
    assert (p - q)(t) == p(t) - q(t)


@settings(max_examples=200)
@given(polys, small_rationals, small_rationals, small_rationals)
def test_linear_substitution(p, a, b, t):
    assert p.substitute_linear(a, b)(t) == p(a + b * t)


@settings(max_examples=200)
@given(small_rationals, small_rationals, st.integers(0, 6), small_rationals)
def test_rising_linear_matches_pochhammer(c, s, k, t):
    # (c + s t)_k evaluated at rational t equals the scalar Pochhammer
    assert rising_linear(c, s, k)(t) == poch(c + s * t, k)


def test_rising_of_x_is_stirling_like():
    # (t)_3 = t(t+1)(t+2) = 2t + 3t^2 + t^3
    p = DensePoly.x().rising(3)
    assert p.coeffs == (MPQ(0), MPQ(2), MPQ(3), MPQ(1))


def test_monic():
    p = DensePoly((MPQ(2), MPQ(0), MPQ(4)))
    assert p.monic().coeffs == (MPQ(1, 2), MPQ(0), MPQ(1))
