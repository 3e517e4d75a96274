"""Characteristic polynomials of weighted transformations.

A parameter pair (z+1, z) appended to a hypergeometric series multiplies
the n-th term by (n+z)/z; a vector of such pairs multiplies by a
polynomial in n whose roots sit at the negated upper-shift parameters.
The transformations implemented in this package move between a series
with integer-shifted parameter pairs (f+m, f) and a series weighted by
the characteristic polynomial built here.  Working with the polynomial
itself (exact rational coefficients) instead of its generally irrational
roots keeps the whole pipeline exact; roots are extracted numerically
only for display and for cross-checking the root-product form of the
weight.

Also here: the degree-p kernel polynomial entering the closed form for
series with integral parameter differences (IPD).  It is returned scaled
by Gamma(e-d) so that its coefficients are rational; consumers account
for the scaling by adding e-d to their denominator gamma list.
"""

from mpmath import mp

from .backend import MPQ
from .gammafn import poch, poch_vec
from .numeric import default_dps, to_mpf, working_dps
from .polynomial import DensePoly
from .series import HyperSpec, eval_terminating


def hyper_at_unity(upper, lower):
    """Exact value of a terminating hypergeometric sum at argument 1."""
    return eval_terminating(HyperSpec(tuple(upper), tuple(lower)), MPQ(1))


def _shift_coeff(f, m, k):
    """F(-k, f+m; f) at unity: the k-th coefficient of the pair-shift
    expansion for the parameter-pair vector (f+m, f)."""
    upper = (MPQ(-k),) + tuple(MPQ(fi) + mi for fi, mi in zip(f, m))
    return hyper_at_unity(upper, tuple(MPQ(fi) for fi in f))


def ipd_numerator_poly(u, v, d, e, lam, h=(), p=()):
    """Degree-p polynomial in the termination variable entering the IPD
    closed form, scaled by Gamma(e-d).

    h is the vector of shifted lower parameters, p the vector of
    positive integer shifts; p_total = sum(p) is the polynomial degree.
    """
    d, e, lam = MPQ(d), MPQ(e), MPQ(lam)
    h = tuple(MPQ(hi) for hi in h)
    p = tuple(int(pi) for pi in p)
    p_total = sum(p)
    lead = poch_vec([hi - d for hi in h], p)
    out = DensePoly.const(0)
    for j in range(p_total + 1):
        coeff = poch(d - e + 1, j) / poch(1, j)
        inner = hyper_at_unity(
            (MPQ(-j),) + tuple(1 - hi + d for hi in h),
            tuple(1 - hi + d - pi for hi, pi in zip(h, p)),
        )
        term = DensePoly.linear(d, u).rising(j) * DensePoly.linear(
            d - e - lam + j + 1, v
        ).rising(p_total - j)
        out = out + term.scale(coeff * inner)
    return out.scale(lead)


def euler_weight_poly(a, b, c, f, m):
    """Characteristic polynomial of the Euler-type weighted
    transformation (argument kept, prefactor exponent c-a-b-m).

    Degree m = sum(m); its roots z give the parameter pairs (z+1, z) of
    the transformed series.
    """
    a, b, c = MPQ(a), MPQ(b), MPQ(c)
    f = tuple(MPQ(fi) for fi in f)
    m = tuple(int(mi) for mi in m)
    m_total = sum(m)
    out = DensePoly.const(0)
    for k in range(m_total + 1):
        coeff = (
            _shift_coeff(f, m, k)
            * poch(a, k)
            * poch(b, k)
            / (poch(c - a - m_total, k) * poch(c - b - m_total, k) * poch(1, k))
        )
        inner = DensePoly.const(0)
        for j in range(m_total - k + 1):
            cj = (
                poch(-m_total + k, j)
                * poch(c - a - b - m_total, j)
                / (
                    poch(c - a - m_total + k, j)
                    * poch(c - b - m_total + k, j)
                    * poch(1, j)
                )
            )
            inner = inner + DensePoly.linear(k, 1).rising(j).scale(cj)
        out = out + (DensePoly.x().rising(k) * inner).scale(coeff)
    return out


def pfaff_weight_poly(b, c, f, m):
    """Characteristic polynomial of the Pfaff-type weighted
    transformation (argument x -> x/(x-1), prefactor exponent -a)."""
    b, c = MPQ(b), MPQ(c)
    f = tuple(MPQ(fi) for fi in f)
    m = tuple(int(mi) for mi in m)
    m_total = sum(m)
    out = DensePoly.const(0)
    for k in range(m_total + 1):
        coeff = (
            MPQ(-1) ** k / poch(1, k) * _shift_coeff(f, m, k) * poch(b, k)
        )
        term = DensePoly.x().rising(k) * DensePoly.linear(
            c - b - m_total, -1
        ).rising(m_total - k)
        out = out + term.scale(coeff)
    return out.scale(1 / poch(c - b - m_total, m_total))


def kummer1_weight_poly(alpha, beta, f, m):
    """Degree-2m characteristic polynomial of the weighted extension of
    Kummer's first quadratic transformation (argument -x on the left,
    -4x/(1-x)^2 on the right)."""
    alpha, beta = MPQ(alpha), MPQ(beta)
    f = tuple(MPQ(fi) for fi in f)
    m = tuple(int(mi) for mi in m)
    m_total = sum(m)
    lead = poch_vec(f, m)
    out = DensePoly.const(0)
    for k in range(m_total + 1):
        coeff = _shift_coeff(f, m, k) / (poch(beta, k) * poch(1, k))
        term = DensePoly.x().rising(k) * DensePoly.linear(alpha, -1).rising(k)
        out = out + term.scale(coeff)
    return out.scale(lead)


def kummer2_weight_poly(beta, f, m):
    """Degree-2m characteristic polynomial of the weighted extension of
    Kummer's second quadratic transformation (argument 2x on the left,
    x^2/(1-x)^2 on the right)."""
    beta = MPQ(beta)
    f = tuple(MPQ(fi) for fi in f)
    m = tuple(int(mi) for mi in m)
    m_total = sum(m)
    lead = poch_vec(f, m)
    out = DensePoly.const(0)
    for k in range(m_total + 1):
        coeff = (
            MPQ(-1) ** k
            * _shift_coeff(f, m, k)
            / (MPQ(4) ** k * poch(1, k))
        )
        term = DensePoly.x().rising(2 * k) * DensePoly.linear(
            beta - m_total, -1
        ).rising(m_total - k)
        out = out + term.scale(coeff)
    return out.scale(lead)


def whipple_weight_poly(k, alpha, beta, delta):
    """Degree-2k characteristic polynomial of the weighted extension of
    Whipple's quadratic transformation."""
    alpha, beta, delta = MPQ(alpha), MPQ(beta), MPQ(delta)
    k = int(k)
    out = DensePoly.const(0)
    for j in range(k + 1):
        cj = poch(-k, j) / (poch(beta, j) * poch(delta, j) * poch(1, j))
        term = DensePoly.linear(0, -1).rising(j) * DensePoly.linear(
            alpha, 1
        ).rising(j)
        out = out + term.scale(cj)
    return out


def whipple_weight_poly_ext(k, alpha, beta, delta, gamma):
    """Whipple-type characteristic polynomial extended by one parameter
    pair (gamma+k, gamma) on the transformed side."""
    alpha, beta, delta, gamma = MPQ(alpha), MPQ(beta), MPQ(delta), MPQ(gamma)
    k = int(k)
    out = DensePoly.const(0)
    for j in range(k + 1):
        cj = (
            poch(-k, j)
            * poch(beta + delta + gamma + k - alpha - 1, j)
            / (poch(beta, j) * poch(delta, j) * poch(gamma, j) * poch(1, j))
        )
        term = DensePoly.linear(0, -1).rising(j) * DensePoly.linear(
            alpha, 1
        ).rising(j)
        out = out + term.scale(cj)
    return out


def poly_roots(poly, dps=None):
    """Numeric roots of an exact polynomial, sorted by (Re, Im).

    Roots of characteristic polynomials are generally irrational or
    complex; they are needed only for display and for validating the
    root-product form of a weight, so numeric at working precision is
    the right representation.
    """
    if dps is None:
        dps = default_dps()
    with working_dps(dps + 15):
        coeffs = [to_mpf(c) for c in reversed(poly.coeffs)]
        roots = mp.polyroots(coeffs, maxsteps=200, extraprec=60)
        return sorted(roots, key=lambda r: (mp.re(r), mp.im(r)))


def root_product_weight(poly, n, dps=None):
    """Evaluate poly(n)/poly(0) through the root product
    prod_r (n - r)/(-r); cross-validates roots against the exact form."""
    if dps is None:
        dps = default_dps()
    roots = poly_roots(poly, dps)
    with working_dps(dps + 15):
        out = mp.mpf(1)
        for r in roots:
            out *= (n - r) / (-r)
        return out
