"""Characteristic polynomial tests.

Oracles, in increasing strength:
* hand-computed small cases (degree 1 closed forms, known roots);
* structural reductions (the e = d+1 collapse, the single-pair linear
  form of the IPD kernel);
* the transformations themselves: each weight polynomial is plugged
  into the quadratic or linear transformation it parametrizes and both
  sides are evaluated numerically at an interior point.
"""

from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp

from hyperforge.backend import MPQ
from hyperforge.charpoly import (
    euler_weight_poly,
    hyper_at_unity,
    ipd_numerator_poly,
    kummer1_weight_poly,
    kummer2_weight_poly,
    pfaff_weight_poly,
    poly_roots,
    root_product_weight,
    whipple_weight_poly,
    whipple_weight_poly_ext,
)
from hyperforge.gammafn import poch, poch_vec
from hyperforge.numeric import to_mpf, working_dps
from hyperforge.polynomial import DensePoly
from hyperforge.series import HyperSpec, eval_convergent

simple = st.fractions(min_value="1/3", max_value=4, max_denominator=3).map(MPQ)


def test_hyper_at_unity_vandermonde():
    # 2F1(-3, 2; 5; 1) = (3)_3/(5)_3 = 60/210
    assert hyper_at_unity((MPQ(-3), MPQ(2)), (MPQ(5),)) == MPQ(2, 7)


def test_ipd_kernel_worked_instance():
    # (u,v)=(1,0), lam=1, d=1, e=5/2, h=3, p=1:
    # scaled kernel is -t/2 - 7/2
    y = ipd_numerator_poly(1, 0, MPQ(1), MPQ(5, 2), MPQ(1), (MPQ(3),), (1,))
    assert y.coeffs == (MPQ(-7, 2), MPQ(-1, 2))
    assert y(0) == MPQ(-7, 2)


@settings(max_examples=150)
@given(
    st.integers(-2, 2),
    st.integers(-2, 2),
    simple,
    simple,
    simple,
    simple,
)
def test_ipd_kernel_single_pair_linear_form(u, v, d, e, lam, h):
    # for one pair with unit shift the scaled kernel is
    # [v(h-d) - u(e-d-1)] t - [(h-d) lam + (e-d-1) h]
    if h == d:
        return
    got = ipd_numerator_poly(u, v, d, e, lam, (h,), (1,))
    slope = v * (h - d) - u * (e - d - 1)
    const = -((h - d) * lam + (e - d - 1) * h)
    want = DensePoly.linear(const, slope)
    assert got.coeffs == want.coeffs


@settings(max_examples=100)
@given(
    st.integers(-2, 2),
    st.integers(-2, 2),
    simple,
    simple,
    st.lists(simple, min_size=1, max_size=2),
    st.lists(st.integers(1, 2), min_size=1, max_size=2),
)
def test_ipd_kernel_collapses_when_e_is_d_plus_one(u, v, d, lam, h, p):
    # at e = d+1 the kernel is (h-d)_p (v t - lam)_p
    p = p[: len(h)]
    h = h[: len(p)]
    # integer h-d puts an inner lower parameter at a non-positive
    # integer, a degenerate region the kernel formula excludes
    if any((hi - d).denominator == 1 for hi in h):
        return
    got = ipd_numerator_poly(u, v, d, d + 1, lam, tuple(h), tuple(p))
    want = DensePoly.linear(-lam, v).rising(sum(p)).scale(
        poch_vec([hi - d for hi in h], p)
    )
    assert got.coeffs == want.coeffs


def test_pfaff_poly_degree_one_root():
    # one pair, unit shift: root at f(c-b-1)/(f-b)
    b, c, f = MPQ(1, 2), MPQ(4), MPQ(3)
    q = pfaff_weight_poly(b, c, (f,), (1,))
    assert q.degree == 1
    root = -q.coeffs[0] / q.coeffs[1]
    assert root == f * (c - b - 1) / (f - b)


def test_euler_poly_degree_one_root():
    a, b, c, f = MPQ(1, 3), MPQ(1, 2), MPQ(4), MPQ(3)
    q = euler_weight_poly(a, b, c, (f,), (1,))
    assert q.degree == 1
    root = -q.coeffs[0] / q.coeffs[1]
    assert root == f * (c - a - 1) * (c - b - 1) / (
        f * (c - a - b - 1) + a * b
    )


def test_whipple_poly_single_step_coefficients():
    # k=1: P(t) = 1 + t(t+alpha)/(beta delta)
    alpha, beta, delta = MPQ(2, 3), MPQ(3, 2), MPQ(5, 4)
    p = whipple_weight_poly(1, alpha, beta, delta)
    bd = beta * delta
    assert p.coeffs == (MPQ(1), alpha / bd, 1 / bd)


def _weighted(upper, lower, weight):
    return HyperSpec(tuple(upper), tuple(lower), weight=weight)


def _val(spec, x, dps=45):
    return eval_convergent(spec, MPQ(x), target_dps=dps)


def _prefactor(x, exponent, dps=60):
    with working_dps(dps):
        return mp.power(to_mpf(MPQ(1) - MPQ(x)), to_mpf(exponent))


def test_euler_poly_drives_its_transformation():
    # F(a,b,f+m; c,f | x) = (1-x)^(c-a-b-m) F(c-a-m, c-b-m; c; W | x)
    # with W(n) = Q(-n)/Q(0) for the degree-m polynomial built here.
    a, b, c, f, m = MPQ(1, 3), MPQ(2, 5), MPQ(7, 2), MPQ(5, 4), 2
    q = euler_weight_poly(a, b, c, (f,), (m,))
    w = q.substitute_linear(0, -1).scale(1 / q(0))
    lhs = _val(HyperSpec((a, b, f + m), (c, f)), MPQ(1, 3))
    rhs_series = _val(
        _weighted((c - a - m, c - b - m), (c,), w), MPQ(1, 3)
    )
    with working_dps(60):
        rhs = _prefactor(MPQ(1, 3), c - a - b - m) * rhs_series
        assert abs(lhs - rhs) < mp.mpf("1e-38") * abs(lhs)


def test_pfaff_poly_drives_its_transformation():
    # F(a,b,f+m; c,f | x) = (1-x)^(-a) F(a, c-b-m; c; W | x/(x-1))
    a, b, c, f, m = MPQ(1, 4), MPQ(2, 3), MPQ(4), MPQ(3, 2), 2
    q = pfaff_weight_poly(b, c, (f,), (m,))
    w = q.substitute_linear(0, -1).scale(1 / q(0))
    x = MPQ(2, 5)
    lhs = _val(HyperSpec((a, b, f + m), (c, f)), x)
    rhs_series = _val(_weighted((a, c - b - m), (c,), w), x / (x - 1))
    with working_dps(60):
        rhs = _prefactor(x, -a) * rhs_series
        assert abs(lhs - rhs) < mp.mpf("1e-38") * abs(lhs)


def test_kummer1_poly_drives_its_transformation():
    # F(alpha, beta, W- | -x)
    #   = (1-x)^(-alpha) F(alpha/2, alpha/2+1/2, f+m; 1-beta+alpha, f | y)
    # with y = -4x/(1-x)^2 and LHS weight W(n) = R(-n)/R(0).
    alpha, beta, f, m = MPQ(2, 3), MPQ(1, 5), MPQ(7, 4), 1
    r = kummer1_weight_poly(alpha, beta, (f,), (m,))
    w = r.substitute_linear(0, -1).scale(1 / r(0))
    x = MPQ(1, 8)
    lhs = _val(_weighted((alpha, beta), (1 - beta + alpha,), w), -x)
    y = MPQ(-4) * x / (1 - x) ** 2
    rhs_series = _val(
        HyperSpec(
            (alpha / 2, alpha / 2 + MPQ(1, 2), f + m),
            (1 - beta + alpha, f),
        ),
        y,
    )
    with working_dps(60):
        rhs = _prefactor(x, -alpha) * rhs_series
        assert abs(lhs - rhs) < mp.mpf("1e-38") * abs(lhs)


def test_kummer2_poly_drives_its_transformation():
    # F(alpha, beta-m, W- | 2x)
    #   = (1-x)^(-alpha) F(alpha/2, alpha/2+1/2, f+m; beta+1/2, f | y)
    # with y = x^2/(1-x)^2.
    alpha, beta, f, m = MPQ(1, 2), MPQ(9, 4), MPQ(6, 5), 1
    r = kummer2_weight_poly(beta, (f,), (m,))
    w = r.substitute_linear(0, -1).scale(1 / r(0))
    x = MPQ(1, 8)
    lhs = _val(_weighted((alpha, beta - m), (2 * beta,), w), 2 * x)
    y = x**2 / (1 - x) ** 2
    rhs_series = _val(
        HyperSpec(
            (alpha / 2, alpha / 2 + MPQ(1, 2), f + m), (beta + MPQ(1, 2), f)
        ),
        y,
    )
    with working_dps(60):
        rhs = _prefactor(x, -alpha) * rhs_series
        assert abs(lhs - rhs) < mp.mpf("1e-38") * abs(lhs)


def test_whipple_poly_drives_its_transformation():
    # F(alpha, beta, delta, W+ | x) = (1-x)^(-alpha)
    #   3F2(alpha/2, alpha/2+1/2, alpha-beta-delta-k+1;
    #       1+alpha-beta, 1+alpha-delta | -4x/(1-x)^2)
    # with LHS weight W(n) = P(n)/P(0) (positive-root convention).
    alpha, beta, delta, k = MPQ(3, 4), MPQ(4, 3), MPQ(5, 2), 1
    p = whipple_weight_poly(k, alpha, beta, delta)
    w = p.scale(1 / p(0))
    x = MPQ(1, 9)
    lhs = _val(
        _weighted(
            (alpha, beta, delta), (1 + alpha - beta, 1 + alpha - delta), w
        ),
        x,
    )
    y = MPQ(-4) * x / (1 - x) ** 2
    rhs_series = _val(
        HyperSpec(
            (alpha / 2, alpha / 2 + MPQ(1, 2), alpha - beta - delta - k + 1),
            (1 + alpha - beta, 1 + alpha - delta),
        ),
        y,
    )
    with working_dps(60):
        rhs = _prefactor(x, -alpha) * rhs_series
        assert abs(lhs - rhs) < mp.mpf("1e-38") * abs(lhs)


def test_whipple_ext_poly_drives_its_transformation():
    alpha, beta, delta, gamma, k = MPQ(3, 4), MPQ(4, 3), MPQ(5, 2), MPQ(7, 5), 1
    p = whipple_weight_poly_ext(k, alpha, beta, delta, gamma)
    w = p.scale(1 / p(0))
    x = MPQ(1, 9)
    lhs = _val(
        _weighted(
            (alpha, beta, delta), (1 + alpha - beta, 1 + alpha - delta), w
        ),
        x,
    )
    y = MPQ(-4) * x / (1 - x) ** 2
    rhs_series = _val(
        HyperSpec(
            (
                alpha / 2,
                alpha / 2 + MPQ(1, 2),
                alpha - beta - delta - k + 1,
                gamma + k,
            ),
            (1 + alpha - beta, 1 + alpha - delta, gamma),
        ),
        y,
    )
    with working_dps(60):
        rhs = _prefactor(x, -alpha) * rhs_series
        assert abs(lhs - rhs) < mp.mpf("1e-38") * abs(lhs)


def test_poly_roots_known_cubic():
    # (t-1)(t-2)(t+1/2)
    p = (
        DensePoly.linear(MPQ(-1), MPQ(1))
        * DensePoly.linear(MPQ(-2), MPQ(1))
        * DensePoly.linear(MPQ(1, 2), MPQ(1))
    )
    roots = poly_roots(p, dps=40)
    with working_dps(40):
        expected = [mp.mpf("-0.5"), mp.mpf(1), mp.mpf(2)]
        for r, e in zip(roots, expected):
            assert abs(r - e) < mp.mpf("1e-35")


def test_root_product_matches_exact_weight():
    alpha, beta, delta = MPQ(2, 3), MPQ(3, 2), MPQ(5, 4)
    p = whipple_weight_poly(2, alpha, beta, delta)
    with working_dps(70):
        for n in range(5):
            exact = to_mpf(p(MPQ(n)) / p(0))
            via_roots = root_product_weight(p, n, dps=55)
            assert abs(exact - via_roots) < mp.mpf("1e-48")
