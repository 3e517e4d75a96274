"""Series evaluation tests.

Oracles: mpmath.hyper for generic arguments, the Gauss and Kummer
closed forms for unit-argument values (these exercise the accelerated
boundary path against independently known gamma expressions), and
Chu-Vandermonde for exact terminating sums.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp

from hyperforge.backend import MPQ
from hyperforge.gammafn import poch
from hyperforge.numeric import to_mpf, working_dps
from hyperforge.polynomial import DensePoly
from hyperforge.series import (
    Convergence,
    DivergentSeries,
    HyperSpec,
    LowerPole,
    check_convergence,
    coefficient,
    eval_convergent,
    eval_terminating,
)

params = st.fractions(min_value=-4, max_value=4, max_denominator=4).map(MPQ)
positive_params = st.fractions(
    min_value="1/4", max_value=4, max_denominator=4
).map(MPQ)


def mp_hyper(spec, x, dps=40):
    with working_dps(dps):
        return mp.hyper(
            [to_mpf(a) for a in spec.upper],
            [to_mpf(b) for b in spec.lower],
            to_mpf(x),
        )


def test_termination_index():
    assert HyperSpec((MPQ(-3), MPQ(2)), (MPQ(5),)).termination_index() == 3
    assert HyperSpec((MPQ(-3), MPQ(-1)), (MPQ(5),)).termination_index() == 1
    assert HyperSpec((MPQ(1, 2),), (MPQ(5),)).termination_index() is None


def test_chu_vandermonde_exact():
    # 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
    for n in range(6):
        b, c = MPQ(1, 3), MPQ(7, 2)
        spec = HyperSpec((MPQ(-n), b), (c,))
        assert eval_terminating(spec, MPQ(1)) == poch(c - b, n) / poch(c, n)


def test_terminating_matches_mpmath():
    spec = HyperSpec((MPQ(-5), MPQ(3, 2), MPQ(2)), (MPQ(7, 3), MPQ(1, 2)))
    exact = eval_terminating(spec, MPQ(2, 3))
    oracle = mp_hyper(spec, MPQ(2, 3))
    with working_dps(40):
        assert abs(to_mpf(exact) - oracle) < mp.mpf("1e-35")


def test_lower_pole_detection():
    # lower -2 poles at n = 3 <= N = 4
    spec = HyperSpec((MPQ(-4), MPQ(1)), (MPQ(-2),))
    with pytest.raises(LowerPole):
        eval_terminating(spec, MPQ(1))
    # lower -4 survives a sum that stops at n = 3
    spec_ok = HyperSpec((MPQ(-3), MPQ(1)), (MPQ(-4),))
    eval_terminating(spec_ok, MPQ(1))
    # boundary: lower -3 also survives, (-3)_3 = -6 is the last factor
    spec_edge = HyperSpec((MPQ(-3), MPQ(1)), (MPQ(-3),))
    assert eval_terminating(spec_edge, MPQ(1)) == sum(
        coefficient(spec_edge, n) for n in range(4)
    )


def test_truncated_partial_sum():
    spec = HyperSpec((MPQ(1), MPQ(2)), (MPQ(3),))
    got = eval_terminating(spec, MPQ(1, 2), truncate_at=4)
    want = sum(coefficient(spec, n) * MPQ(1, 2) ** n for n in range(5))
    assert got == want


def test_coefficient_weighted():
    w = DensePoly.linear(MPQ(1), MPQ(2))  # 1 + 2n
    spec = HyperSpec((MPQ(1, 2),), (MPQ(3, 2),), weight=w)
    assert coefficient(spec, 0) == 1
    assert coefficient(spec, 2) == poch(MPQ(1, 2), 2) / (
        poch(MPQ(3, 2), 2) * 2
    ) * 5


@settings(max_examples=100, deadline=None)
@given(
    st.lists(positive_params, min_size=1, max_size=2),
    st.lists(positive_params, min_size=1, max_size=2),
    st.integers(1, 8),
)
def test_weight_pair_equals_explicit_parameter_pair(upper, lower, zeta):
    # weight (n + zeta)/zeta is the same series as appending the
    # parameter pair (zeta+1, zeta)
    zeta = MPQ(zeta)
    x = MPQ(1, 3)
    w = DensePoly.linear(MPQ(1), 1 / zeta)
    weighted = HyperSpec(tuple(upper), tuple(lower) + (MPQ(10),), weight=w)
    paired = HyperSpec(
        tuple(upper) + (zeta + 1,), tuple(lower) + (MPQ(10), zeta)
    )
    with working_dps(30):
        a = eval_convergent(weighted, x, target_dps=25)
        b = eval_convergent(paired, x, target_dps=25)
        assert abs(a - b) < mp.mpf("1e-20")


@settings(max_examples=60, deadline=None)
@given(positive_params, positive_params, st.integers(0, 5))
def test_weight_linearity_exact(a, b, n):
    # F(W1 + W2) = F(W1) + F(W2) on terminating sums
    w1 = DensePoly.linear(MPQ(2), MPQ(3))
    w2 = DensePoly((MPQ(0), MPQ(0), MPQ(1)))
    up = (MPQ(-n), a)
    lo = (b + 5,)
    x = MPQ(3, 7)
    s1 = eval_terminating(HyperSpec(up, lo, weight=w1), x)
    s2 = eval_terminating(HyperSpec(up, lo, weight=w2), x)
    s12 = eval_terminating(HyperSpec(up, lo, weight=w1 + w2), x)
    assert s12 == s1 + s2


def test_direct_summation_against_mpmath():
    spec = HyperSpec((MPQ(1, 3), MPQ(5, 4)), (MPQ(7, 2),))
    for x in (MPQ(1, 2), MPQ(-9, 10), MPQ(7, 8)):
        got = eval_convergent(spec, x, target_dps=45)
        oracle = mp_hyper(spec, x, dps=60)
        with working_dps(60):
            assert abs(got - oracle) < mp.mpf("1e-40")


def test_gauss_value_at_unity():
    # 2F1(a, b; c; 1) = Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b))
    a, b, c = MPQ(1, 3), MPQ(1, 4), MPQ(7, 2)
    spec = HyperSpec((a, b), (c,))
    got = eval_convergent(spec, MPQ(1), target_dps=50)
    with working_dps(70):
        oracle = (
            mp.gamma(to_mpf(c))
            * mp.gamma(to_mpf(c - a - b))
            / mp.gamma(to_mpf(c - a))
            / mp.gamma(to_mpf(c - b))
        )
        assert abs(got - oracle) < mp.mpf("1e-45") * abs(oracle)


def test_kummer_value_at_minus_one():
    # 2F1(a, b; 1+a-b; -1) = Gamma(1+a-b)Gamma(1+a/2)
    #                          / (Gamma(1+a)Gamma(1+a/2-b))
    a, b = MPQ(2, 3), MPQ(1, 5)
    spec = HyperSpec((a, b), (1 + a - b,))
    got = eval_convergent(spec, MPQ(-1), target_dps=50)
    with working_dps(70):
        oracle = (
            mp.gamma(to_mpf(1 + a - b))
            * mp.gamma(to_mpf(1 + a / 2))
            / mp.gamma(to_mpf(1 + a))
            / mp.gamma(to_mpf(1 + a / 2 - b))
        )
        assert abs(got - oracle) < mp.mpf("1e-45") * abs(oracle)


def test_weighted_series_at_unity():
    # weight (n+2)/2 <-> parameter pair (3, 2); compare both routes at 1
    a, b, c = MPQ(1, 4), MPQ(1, 5), MPQ(4)
    w = DensePoly.linear(MPQ(1), MPQ(1, 2))
    weighted = HyperSpec((a, b), (c,), weight=w)
    paired = HyperSpec((a, b, MPQ(3)), (c, MPQ(2)))
    got = eval_convergent(weighted, MPQ(1), target_dps=45)
    ref = eval_convergent(paired, MPQ(1), target_dps=45)
    with working_dps(60):
        assert abs(got - ref) < mp.mpf("1e-40")


class TestConvergenceClassification:
    def test_terminating_wins(self):
        spec = HyperSpec((MPQ(-2), MPQ(9)), (MPQ(1, 2),))
        assert check_convergence(spec, MPQ(5)) is Convergence.TERMINATES

    def test_inside_disk(self):
        spec = HyperSpec((MPQ(1, 2), MPQ(1)), (MPQ(3),))
        assert check_convergence(spec, MPQ(9, 10)) is Convergence.INSIDE_DISK

    def test_divergent_outside(self):
        spec = HyperSpec((MPQ(1, 2), MPQ(1)), (MPQ(3),))
        assert check_convergence(spec, MPQ(3, 2)) is Convergence.DIVERGENT
        with pytest.raises(DivergentSeries):
            eval_convergent(spec, MPQ(3, 2))

    def test_excess_rule_at_plus_one(self):
        # excess 3 - 3/2 = 3/2 > 0: converges at 1
        spec = HyperSpec((MPQ(1), MPQ(1, 2)), (MPQ(3),))
        assert check_convergence(spec, MPQ(1)) is Convergence.AT_UNITY
        # excess 0: diverges at 1 but converges at -1
        flat = HyperSpec((MPQ(1), MPQ(2)), (MPQ(3),))
        assert check_convergence(flat, MPQ(1)) is Convergence.DIVERGENT
        assert check_convergence(flat, MPQ(-1)) is Convergence.AT_UNITY

    def test_weight_degree_raises_the_bar(self):
        # excess 3/2 but weight degree 2: diverges at unity
        w = DensePoly((MPQ(1), MPQ(0), MPQ(1)))
        spec = HyperSpec((MPQ(1), MPQ(1, 2)), (MPQ(3),), weight=w)
        assert check_convergence(spec, MPQ(1)) is Convergence.DIVERGENT

    def test_low_order_always_converges(self):
        spec = HyperSpec((MPQ(1, 2),), (MPQ(3), MPQ(4)))
        assert check_convergence(spec, MPQ(10)) is Convergence.INSIDE_DISK
