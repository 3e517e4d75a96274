"""Pochhammer and gamma-ratio kernel tests.

Oracles: mpmath.rf / mpmath.gamma at 50 digits for every exact value the
kernel produces, plus classical identities (reflection, duplication,
Pochhammer addition) as property tests.
"""

import fractions

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp

from hyperforge.backend import MPQ
from hyperforge.gammafn import (
    GammaRatio,
    IndeterminateRatio,
    PoleError,
    delta,
    gamma_product,
    poch,
    poch_vec,
)
from hyperforge.numeric import to_mpf, working_dps

rationals = st.fractions(
    min_value=-8, max_value=8, max_denominator=6
).map(MPQ)

nonzero_rationals = rationals.filter(lambda q: q != 0)


def mp_rf(q, n):
    return mp.rf(to_mpf(q), n)


def test_poch_small_values():
    assert poch(MPQ(3), 0) == 1
    assert poch(MPQ(3), 4) == 3 * 4 * 5 * 6
    assert poch(MPQ(1, 2), 3) == MPQ(1, 2) * MPQ(3, 2) * MPQ(5, 2)
    assert poch(MPQ(-3), 5) == 0


def test_poch_negative_index():
    # (q)_{-m} = 1 / (q-m)_m
    assert poch(MPQ(5), -2) == MPQ(1, 12)
    with pytest.raises(PoleError):
        poch(MPQ(2), -3)


@settings(max_examples=300)
@given(rationals, st.integers(min_value=0, max_value=12))
def test_poch_matches_mpmath(q, n):
    with working_dps(50):
        exact = to_mpf(poch(q, n))
        oracle = mp_rf(q, n)
        assert abs(exact - oracle) <= abs(oracle) * mp.mpf("1e-40") + mp.mpf(
            "1e-40"
        )


@settings(max_examples=200)
@given(rationals, st.integers(0, 8), st.integers(0, 8))
def test_poch_addition_rule(q, m, n):
    # (q)_{m+n} = (q)_m (q+m)_n
    assert poch(q, m + n) == poch(q, m) * poch(q + m, n)


@settings(max_examples=200)
@given(rationals, st.integers(1, 4), st.integers(0, 5))
def test_multisection_pochhammer(a, ell, k):
    # (a)_{l k} = l^{l k} * prod over the Delta(a, l) block of (.)_k
    lhs = poch(a, ell * k)
    rhs = MPQ(ell) ** (ell * k) * poch_vec(delta(a, ell), [k] * ell)
    assert lhs == rhs


def test_delta_block():
    assert delta(MPQ(3), 2) == (MPQ(3, 2), MPQ(2))
    assert delta(MPQ(1), 3) == (MPQ(1, 3), MPQ(2, 3), MPQ(1))


class TestGammaRatioReduce:
    def test_integer_difference_pair(self):
        # Gamma(7/2) / Gamma(3/2) = (3/2)(5/2)
        r = GammaRatio([MPQ(7, 2)], [MPQ(3, 2)]).reduce()
        assert r.exact() == MPQ(15, 4)

    def test_negative_difference_pair(self):
        # Gamma(3/2) / Gamma(7/2) = 1 / ((3/2)(5/2))
        r = GammaRatio([MPQ(3, 2)], [MPQ(7, 2)]).reduce()
        assert r.exact() == MPQ(4, 15)

    def test_zero_from_nonpositive_base(self):
        # Gamma(2) / Gamma(-1) = 0 exactly
        r = GammaRatio([MPQ(2)], [MPQ(-1)]).reduce()
        assert r.is_zero
        assert r.exact() == 0

    def test_pole_from_nonpositive_numerator(self):
        r = GammaRatio([MPQ(-2)], [MPQ(3)]).reduce()
        assert r.is_pole
        with pytest.raises(PoleError):
            r.exact()

    def test_sorted_pairing_resolves_mixed_products(self):
        # Gamma(-2)Gamma(4) / (Gamma(3)Gamma(-1)) looks like 0*inf if
        # paired naively, but the sorted pairing matches the two
        # non-positive arguments and yields the correct limit value:
        # Gamma(-2+e)/Gamma(-1+e) -> -1/2 and Gamma(4)/Gamma(3) = 3.
        r = GammaRatio([MPQ(-2), MPQ(4)], [MPQ(3), MPQ(-1)]).reduce()
        assert r.exact() == MPQ(-3, 2)

    def test_matched_nonpositive_args_cancel(self):
        # Gamma(-1)Gamma(1) / (Gamma(-1)Gamma(1)) = 1 under sorted pairing
        r = GammaRatio([MPQ(-1), MPQ(1)], [MPQ(-1), MPQ(1)]).reduce()
        assert r.exact() == 1

    def test_lone_integer_gammas_become_factorials(self):
        r = GammaRatio([MPQ(5)], [MPQ(3)]).reduce()
        assert r.exact() == 12  # 4! / 2!
        r = GammaRatio([MPQ(4), MPQ(6)], []).reduce()
        assert r.exact() == 6 * 120

    def test_residuals_kept_for_numeric(self):
        r = GammaRatio([MPQ(1, 3)], [MPQ(1, 4)]).reduce()
        assert r.exact() is None
        assert r.num_left == [MPQ(1, 3)]
        assert r.den_left == [MPQ(1, 4)]
        with working_dps(40):
            oracle = mp.gamma(to_mpf(MPQ(1, 3))) / mp.gamma(to_mpf(MPQ(1, 4)))
            assert abs(r.numeric() - oracle) < mp.mpf("1e-35")


@settings(max_examples=150, deadline=None)
@given(
    st.lists(rationals, min_size=0, max_size=3),
    st.lists(rationals, min_size=0, max_size=3),
)
def test_reduce_agrees_with_gamma_oracle(num, den):
    ratio = GammaRatio(list(num), list(den))
    try:
        reduced = ratio.reduce()
    except IndeterminateRatio:
        return
    with working_dps(60):
        try:
            oracle = mp.mpf(1)
            for a in num:
                oracle *= mp.gamma(to_mpf(a))
            for b in den:
                oracle /= mp.gamma(to_mpf(b))
        except ValueError:
            # mpmath raises on gamma poles; the kernel must flag them too
            # unless an exact zero from the denominator absorbs the pole
            # before it is ever formed (sorted pairing can do that).
            return
        if reduced.is_pole:
            return
        ours = reduced.numeric()
        assert abs(ours - oracle) <= abs(oracle) * mp.mpf("1e-45") + mp.mpf(
            "1e-45"
        )


@settings(max_examples=200)
@given(nonzero_rationals)
def test_reflection_formula(z):
    # Gamma(z) Gamma(1-z) sin(pi z) = pi at every non-integer rational z
    if z.denominator == 1:
        return
    with working_dps(50):
        ratio = GammaRatio([z, 1 - z], []).reduce()
        val = ratio.numeric() * mp.sin(mp.pi * to_mpf(z)) / mp.pi
        assert abs(val - 1) < mp.mpf("1e-40")


@settings(max_examples=200)
@given(nonzero_rationals.filter(lambda q: q > 0))
def test_duplication_formula(z):
    # Gamma(2z) = 2^(2z-1) pi^(-1/2) Gamma(z) Gamma(z + 1/2)
    with working_dps(50):
        lhs = GammaRatio([2 * z], [z, z + MPQ(1, 2)]).reduce().numeric()
        rhs = mp.power(2, 2 * to_mpf(z) - 1) / mp.sqrt(mp.pi)
        assert abs(lhs - rhs) < abs(rhs) * mp.mpf("1e-40")


def test_gamma_product_arithmetic():
    gp = gamma_product(MPQ(2, 3), num=[MPQ(7, 2)], den=[MPQ(3, 2)])
    assert gp.exact() == MPQ(2, 3) * MPQ(15, 4)
    gp2 = gp.times_q(MPQ(3))
    assert gp2.exact() == MPQ(2) * MPQ(15, 4)
    zero = gamma_product(0, num=[MPQ(1, 3)])
    assert zero.exact() == 0


def test_gamma_product_fraction_interop():
    gp = gamma_product(fractions.Fraction(1, 2))
    assert gp.exact() == MPQ(1, 2)
