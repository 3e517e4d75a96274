"""Argument transformations of weighted hypergeometric series.

Every entry states an identity of the shape

    F(upper; lower | M x^w) = (1-x)^lam * F(upper'; lower' | D x^u / (1-x)^v)

between two (possibly weighted) series, valid on an open rational
interval of x.  The (u, v) pair of the right-hand argument decides
which family of unit-argument summation rules applies when the right
side is expanded term by term, so the catalog is grouped by it.

Shifted parameter pairs come in two flavors.  Pairs with rational bases
(like f+m over f, or delta+1 over delta) stay explicit parameters.
Pairs whose bases are the roots of a characteristic polynomial are
carried as the equivalent polynomial weight instead, which keeps all
arithmetic rational: a block [zeta+1 over zeta] with zeta the roots of
Q contributes the weight Q(-n)/Q(0), and a block [1-rho over -rho]
with rho the roots of P contributes P(n)/P(0).

The characteristic polynomial builders accept whole vectors of
shifted pairs; the catalog samples a single (f, m) block, which already
exercises every code path the vector case touches.
"""

from mpmath import mp

from .backend import MPQ, is_integer
from .charpoly import (
    euler_weight_poly,
    kummer1_weight_poly,
    kummer2_weight_poly,
    pfaff_weight_poly,
    whipple_weight_poly,
    whipple_weight_poly_ext,
)
from .numeric import default_dps, rel_discrepancy, to_mpf, working_dps
from .polynomial import DensePoly
from .sampling import rand_distinct, rand_q
from .series import HyperSpec, eval_convergent


def shifted_pair_weight(q):
    """Weight of a [zeta+1 over zeta] block, zeta the roots of q:
    W(n) = q(-n)/q(0)."""
    return q.substitute_linear(MPQ(0), MPQ(-1)).scale(1 / q(MPQ(0)))


def root_pair_weight(p):
    """Weight of a [1-rho over -rho] block, rho the roots of p:
    W(n) = p(n)/p(0)."""
    return p.scale(1 / p(MPQ(0)))


def _centered_square_weight(center, square):
    """Weight ((n+center)^2 - square) / (center^2 - square) of a
    conjugate pair [1+center-s, 1+center+s over center-s, center+s]
    with s^2 = square; rational even when s itself is not."""
    const = center * center - square
    return DensePoly([MPQ(1), 2 * center / const, 1 / const])


def _require(cond, msg):
    if not cond:
        raise ValueError(msg)


def _nonint(*qs):
    return all(not is_integer(q) for q in qs)


class BaseTransform:
    """One argument transformation; subclasses fill in the data."""

    name = ""
    uv = (1, 0)
    w = 1
    m_const = MPQ(1)
    d_const = MPQ(1)
    x_domain = (MPQ(0), MPQ(1))

    def sample(self, rng):
        for _ in range(300):
            params = self._draw(rng)
            try:
                self.validate(params)
            except (ValueError, ZeroDivisionError):
                continue
            return params
        raise RuntimeError(f"{self.name}: sampling failed")

    def _draw(self, rng):
        raise NotImplementedError

    def validate(self, params):
        for spec in (self.lhs_spec(params), self.rhs_spec(params)):
            for b in spec.lower:
                _require(
                    not (is_integer(b) and b <= 0),
                    f"{self.name}: lower parameter {b} is a pole",
                )

    def lam(self, params):
        raise NotImplementedError

    def lhs_spec(self, params):
        raise NotImplementedError

    def rhs_spec(self, params):
        raise NotImplementedError

    def lhs_argument(self, x):
        return self.m_const * MPQ(x) ** self.w

    def rhs_argument(self, x):
        u, v = self.uv
        x = MPQ(x)
        return self.d_const * x**u / (1 - x) ** v


# ---------------------------------------------------------------- (1, 0)


class EulerSecond(BaseTransform):
    """2F1 at x equals (1-x)^(c-a-b) times 2F1 with both upper
    parameters reflected in c."""

    name = "euler_second"
    uv = (1, 0)
    x_domain = (MPQ(0), MPQ(1))

    def _draw(self, rng):
        return {
            "a": rand_q(rng, MPQ(1, 4), 2),
            "b": rand_q(rng, MPQ(1, 4), 2),
            "c": rand_q(rng, MPQ(1, 2), 3),
        }

    def lam(self, params):
        return params["c"] - params["a"] - params["b"]

    def lhs_spec(self, params):
        return HyperSpec((params["a"], params["b"]), (params["c"],))

    def rhs_spec(self, params):
        a, b, c = params["a"], params["b"], params["c"]
        return HyperSpec((c - a, c - b), (c,))


class MillerParisSecond(BaseTransform):
    """The integral-parameter-difference extension of euler_second: the
    f+m over f block on the left becomes a root block on the right."""

    name = "miller_paris_second"
    uv = (1, 0)
    x_domain = (MPQ(0), MPQ(1))

    def _draw(self, rng):
        a, b = rand_distinct(rng, 2, MPQ(1, 4), 2)
        return {
            "a": a,
            "b": b,
            "c": rand_q(rng, MPQ(3, 2), 4),
            "f": rand_q(rng, MPQ(1, 3), 3),
            "m": rng.randint(1, 2),
        }

    def validate(self, params):
        a, b, c = params["a"], params["b"], params["c"]
        _require(
            _nonint(c - a, c - b, c - a - b),
            f"{self.name}: differences with c must be non-integer",
        )
        super().validate(params)

    def lam(self, params):
        return (
            params["c"] - params["a"] - params["b"] - params["m"]
        )

    def lhs_spec(self, params):
        a, b, c = params["a"], params["b"], params["c"]
        f, m = params["f"], params["m"]
        return HyperSpec((a, b, f + m), (c, f))

    def rhs_spec(self, params):
        a, b, c = params["a"], params["b"], params["c"]
        f, m = params["f"], params["m"]
        q = euler_weight_poly(a, b, c, (f,), (m,))
        return HyperSpec(
            (c - a - m, c - b - m), (c,), weight=shifted_pair_weight(q)
        )


# ---------------------------------------------------------------- (1, 1)


class EulerFirst(BaseTransform):
    """2F1 at x equals (1-x)^(-a) times 2F1 at x/(x-1)."""

    name = "euler_first"
    uv = (1, 1)
    d_const = MPQ(-1)
    x_domain = (MPQ(0), MPQ(1, 2))

    def _draw(self, rng):
        return {
            "a": rand_q(rng, MPQ(1, 4), 2),
            "b": rand_q(rng, MPQ(1, 4), 2),
            "c": rand_q(rng, MPQ(1, 2), 3),
        }

    def lam(self, params):
        return -params["a"]

    def lhs_spec(self, params):
        return HyperSpec((params["a"], params["b"]), (params["c"],))

    def rhs_spec(self, params):
        a, b, c = params["a"], params["b"], params["c"]
        return HyperSpec((a, c - b), (c,))


class MillerParisFirst(BaseTransform):
    """The integral-parameter-difference extension of euler_first."""

    name = "miller_paris_first"
    uv = (1, 1)
    d_const = MPQ(-1)
    x_domain = (MPQ(0), MPQ(1, 2))

    def _draw(self, rng):
        a, b = rand_distinct(rng, 2, MPQ(1, 4), 2)
        return {
            "a": a,
            "b": b,
            "c": rand_q(rng, MPQ(3, 2), 4),
            "f": rand_q(rng, MPQ(1, 3), 3),
            "m": rng.randint(1, 2),
        }

    def validate(self, params):
        b, c, f = params["b"], params["c"], params["f"]
        _require(
            _nonint(c - b, b - f),
            f"{self.name}: c-b and b-f must be non-integer",
        )
        super().validate(params)

    def lam(self, params):
        return -params["a"]

    def lhs_spec(self, params):
        a, b, c = params["a"], params["b"], params["c"]
        f, m = params["f"], params["m"]
        return HyperSpec((a, b, f + m), (c, f))

    def rhs_spec(self, params):
        a, b, c = params["a"], params["b"], params["c"]
        f, m = params["f"], params["m"]
        q = pfaff_weight_poly(b, c, (f,), (m,))
        return HyperSpec(
            (a, c - b - m), (c,), weight=shifted_pair_weight(q)
        )


class QuadUpperHalfPair(BaseTransform):
    """Square-argument 2F1 with upper pair (alpha, alpha+1/2) opened
    into a linear-argument series."""

    name = "quad_upper_halfpair"
    uv = (1, 1)
    w = 2
    d_const = MPQ(-2)
    x_domain = (MPQ(0), MPQ(1, 3))

    def _draw(self, rng):
        return {
            "alpha": rand_q(rng, MPQ(1, 4), 2),
            "beta": rand_q(rng, 1, 3, max_den=5),
        }

    def validate(self, params):
        _require(
            _nonint(2 * params["beta"]),
            f"{self.name}: 2 beta must be non-integer",
        )
        super().validate(params)

    def lam(self, params):
        return -2 * params["alpha"]

    def lhs_spec(self, params):
        alpha, beta = params["alpha"], params["beta"]
        return HyperSpec((alpha, alpha + MPQ(1, 2)), (beta,))

    def rhs_spec(self, params):
        alpha, beta = params["alpha"], params["beta"]
        return HyperSpec(
            (2 * alpha, beta - MPQ(1, 2)), (2 * beta - 1,)
        )


# --------------------------------------------------------------- (1, -1)


class GaussQuadratic(BaseTransform):
    """2F1 at x with lower parameter (alpha+beta+1)/2 equals the same
    function of halved upper parameters at 4x(1-x)."""

    name = "gauss_quadratic"
    uv = (1, -1)
    d_const = MPQ(4)
    x_domain = (MPQ(0), MPQ(1, 2))

    def _draw(self, rng):
        return {
            "alpha": rand_q(rng, MPQ(1, 4), 2),
            "beta": rand_q(rng, MPQ(1, 4), 2),
        }

    def validate(self, params):
        _require(
            _nonint((params["alpha"] + params["beta"] + 1) / 2),
            f"{self.name}: lower parameter must be non-integer",
        )
        super().validate(params)

    def lam(self, params):
        return MPQ(0)

    def lhs_spec(self, params):
        alpha, beta = params["alpha"], params["beta"]
        return HyperSpec((alpha, beta), ((alpha + beta + 1) / 2,))

    def rhs_spec(self, params):
        alpha, beta = params["alpha"], params["beta"]
        return HyperSpec(
            (alpha / 2, beta / 2), ((alpha + beta + 1) / 2,)
        )


class ReflectionQuadratic(BaseTransform):
    """2F1 with reflected upper pair (alpha, 1-alpha) at x against a
    series at 4x(1-x) with prefactor (1-x)^(beta-1)."""

    name = "reflection_quadratic"
    uv = (1, -1)
    d_const = MPQ(4)
    x_domain = (MPQ(0), MPQ(1, 2))

    def _draw(self, rng):
        return {
            "alpha": rand_q(rng, MPQ(1, 4), 2),
            "beta": rand_q(rng, MPQ(1, 2), 3),
        }

    def validate(self, params):
        alpha, beta = params["alpha"], params["beta"]
        _require(
            _nonint((beta - alpha) / 2, (alpha + beta - 1) / 2),
            f"{self.name}: halved parameters must be non-integer",
        )
        super().validate(params)

    def lam(self, params):
        return params["beta"] - 1

    def lhs_spec(self, params):
        alpha, beta = params["alpha"], params["beta"]
        return HyperSpec((alpha, 1 - alpha), (beta,))

    def rhs_spec(self, params):
        alpha, beta = params["alpha"], params["beta"]
        return HyperSpec(
            ((beta - alpha) / 2, (alpha + beta - 1) / 2), (beta,)
        )


# ---------------------------------------------------------------- (1, 2)


class KummerFirstQuadratic(BaseTransform):
    """Kummer's first quadratic transformation: 2F1 at -x against a
    halved-parameter series at -4x/(1-x)^2."""

    name = "kummer_first_quadratic"
    uv = (1, 2)
    m_const = MPQ(-1)
    d_const = MPQ(-4)
    x_domain = (MPQ(0), MPQ(1, 7))

    def _draw(self, rng):
        return {
            "alpha": rand_q(rng, MPQ(1, 4), 2),
            "beta": rand_q(rng, MPQ(1, 4), 2),
        }

    def validate(self, params):
        _require(
            _nonint(params["alpha"] - params["beta"]),
            f"{self.name}: alpha - beta must be non-integer",
        )
        super().validate(params)

    def lam(self, params):
        return -params["alpha"]

    def lhs_spec(self, params):
        alpha, beta = params["alpha"], params["beta"]
        return HyperSpec((alpha, beta), (1 - beta + alpha,))

    def rhs_spec(self, params):
        alpha, beta = params["alpha"], params["beta"]
        return HyperSpec(
            (alpha / 2, alpha / 2 + MPQ(1, 2)), (1 - beta + alpha,)
        )


class PoisedSquareQuadratic(BaseTransform):
    """Square-argument companion of kummer_first_quadratic with doubled
    exponent and doubled lower parameter on the right."""

    name = "poised_square_quadratic"
    uv = (1, 2)
    w = 2
    d_const = MPQ(-4)
    x_domain = (MPQ(0), MPQ(1, 7))

    def _draw(self, rng):
        return {
            "alpha": rand_q(rng, MPQ(1, 4), 2),
            "beta": rand_q(rng, MPQ(1, 4), 2),
        }

    def validate(self, params):
        diff = params["alpha"] - params["beta"]
        _require(
            _nonint(diff, 2 * diff),
            f"{self.name}: alpha - beta and its double must be non-integer",
        )
        super().validate(params)

    def lam(self, params):
        return -2 * params["alpha"]

    def lhs_spec(self, params):
        alpha, beta = params["alpha"], params["beta"]
        return HyperSpec((alpha, beta), (1 - beta + alpha,))

    def rhs_spec(self, params):
        alpha, beta = params["alpha"], params["beta"]
        return HyperSpec(
            (alpha, alpha - beta + MPQ(1, 2)),
            (1 - 2 * beta + 2 * alpha,),
        )


class WhippleQuadratic(BaseTransform):
    """Whipple's quadratic transformation of a well-poised 3F2."""

    name = "whipple_quadratic"
    uv = (1, 2)
    d_const = MPQ(-4)
    x_domain = (MPQ(0), MPQ(1, 7))

    def _draw(self, rng):
        return {
            "alpha": rand_q(rng, MPQ(1, 4), 2),
            "beta": rand_q(rng, MPQ(1, 4), 2),
            "delta": rand_q(rng, MPQ(1, 4), 2),
        }

    def validate(self, params):
        alpha, beta, delta = (
            params["alpha"],
            params["beta"],
            params["delta"],
        )
        _require(
            _nonint(alpha - beta, alpha - delta),
            f"{self.name}: alpha offsets must be non-integer",
        )
        super().validate(params)

    def lam(self, params):
        return -params["alpha"]

    def lhs_spec(self, params):
        alpha, beta, delta = (
            params["alpha"],
            params["beta"],
            params["delta"],
        )
        return HyperSpec(
            (alpha, beta, delta),
            (1 - beta + alpha, 1 - delta + alpha),
        )

    def rhs_spec(self, params):
        alpha, beta, delta = (
            params["alpha"],
            params["beta"],
            params["delta"],
        )
        return HyperSpec(
            (alpha / 2, (alpha + 1) / 2, 1 + alpha - beta - delta),
            (1 - beta + alpha, 1 - delta + alpha),
        )


class ChoiRathieFirst(BaseTransform):
    """2F1 with the inverse unit-shift pair (alpha, beta; beta+1)
    against a 3F2 at -4x/(1-x)^2 with prefactor (1-x)^(-2 beta)."""

    name = "choi_rathie_first"
    uv = (1, 2)
    d_const = MPQ(-4)
    x_domain = (MPQ(0), MPQ(1, 7))

    def _draw(self, rng):
        return {
            "alpha": rand_q(rng, MPQ(1, 4), 2),
            "beta": rand_q(rng, MPQ(1, 4), 2),
        }

    def validate(self, params):
        alpha, beta = params["alpha"], params["beta"]
        _require(
            _nonint(2 * beta - alpha, beta - alpha / 2),
            f"{self.name}: 2 beta - alpha must be non-integer",
        )
        super().validate(params)

    def lam(self, params):
        return -2 * params["beta"]

    def lhs_spec(self, params):
        alpha, beta = params["alpha"], params["beta"]
        return HyperSpec((alpha, beta), (beta + 1,))

    def rhs_spec(self, params):
        alpha, beta = params["alpha"], params["beta"]
        return HyperSpec(
            (beta, beta - alpha / 2 + 1, beta - alpha / 2 + MPQ(1, 2)),
            (beta + 1, 2 * beta - alpha + 1),
        )


class ChoiRathieSecond(BaseTransform):
    """Companion of choi_rathie_first whose left side carries the
    explicit (alpha+1, alpha) shifted pair."""

    name = "choi_rathie_second"
    uv = (1, 2)
    d_const = MPQ(-4)
    x_domain = (MPQ(0), MPQ(1, 7))

    def _draw(self, rng):
        return {
            "alpha": rand_q(rng, MPQ(1, 4), 2),
            "beta": rand_q(rng, MPQ(1, 4), 2),
        }

    def validate(self, params):
        alpha, beta = params["alpha"], params["beta"]
        diff = beta - alpha
        _require(
            _nonint(diff, 2 * diff),
            f"{self.name}: beta - alpha and its double must be non-integer",
        )
        super().validate(params)

    def lam(self, params):
        return -2 * params["beta"]

    def lhs_spec(self, params):
        alpha, beta = params["alpha"], params["beta"]
        return HyperSpec((alpha + 1, 2 * alpha, beta), (alpha, beta + 1))

    def rhs_spec(self, params):
        alpha, beta = params["alpha"], params["beta"]
        return HyperSpec(
            (beta, beta - alpha, beta - alpha + MPQ(1, 2)),
            (beta + 1, 2 * beta - 2 * alpha + 1),
        )


class RakhaRathieQuadratic(BaseTransform):
    """Quadratic transformation whose left side carries a conjugate
    pair with square sigma^2 fixed by (alpha, beta, delta); the pair
    enters only through its rational square, as a polynomial weight."""

    name = "rakha_rathie_quadratic"
    uv = (1, 2)
    d_const = MPQ(-4)
    x_domain = (MPQ(0), MPQ(1, 7))

    def _draw(self, rng):
        return {
            "alpha": rand_q(rng, MPQ(1, 4), 2),
            "beta": rand_q(rng, MPQ(1, 4), 2),
            "delta": rand_q(rng, MPQ(1, 4), 2),
        }

    @staticmethod
    def sigma_square(params):
        alpha, beta, delta = (
            params["alpha"],
            params["beta"],
            params["delta"],
        )
        if beta == delta:
            raise ValueError(
                "rakha_rathie_quadratic: beta = delta degenerates sigma"
            )
        return (
            alpha * alpha * beta
            - alpha * beta * delta
            - beta * delta / 2
            - delta / 4
        ) / (beta - delta)

    def validate(self, params):
        alpha = params["alpha"]
        s2 = self.sigma_square(params)
        _require(
            alpha * alpha != s2,
            f"{self.name}: sigma pair collapses onto alpha",
        )
        super().validate(params)

    def lam(self, params):
        return -2 * params["alpha"]

    def lhs_spec(self, params):
        alpha, beta = params["alpha"], params["beta"]
        weight = _centered_square_weight(
            alpha, self.sigma_square(params)
        )
        return HyperSpec(
            (2 * alpha, alpha - beta - MPQ(1, 2)),
            (alpha + beta + MPQ(3, 2),),
            weight=weight,
        )

    def rhs_spec(self, params):
        alpha, beta, delta = (
            params["alpha"],
            params["beta"],
            params["delta"],
        )
        return HyperSpec(
            (alpha, beta, delta + 1),
            (alpha + beta + MPQ(3, 2), delta),
        )


class WangRathieQuadratic(BaseTransform):
    """Extension of rakha_rathie_quadratic with two free lower
    parameters; the conjugate pair square omega^2 is rational in the
    inputs and enters as a polynomial weight."""

    name = "wang_rathie_quadratic"
    uv = (1, 2)
    d_const = MPQ(-4)
    x_domain = (MPQ(0), MPQ(1, 7))

    def _draw(self, rng):
        return {
            "alpha": rand_q(rng, MPQ(1, 2), 2),
            "beta": rand_q(rng, MPQ(1, 4), 2),
            "gamma": rand_q(rng, MPQ(1, 4), 2),
            "delta": rand_q(rng, MPQ(1, 4), 2),
        }

    @staticmethod
    def omega_square(params):
        alpha, beta, gamma, delta = (
            params["alpha"],
            params["beta"],
            params["gamma"],
            params["delta"],
        )
        den = beta + gamma - 2 * alpha - delta
        if den == 0:
            raise ValueError(
                "wang_rathie_quadratic: omega denominator vanishes"
            )
        half = alpha - MPQ(1, 2)
        return half * half - delta * (gamma - 2 * alpha) * (
            2 * alpha - beta - 1
        ) / den

    def validate(self, params):
        half = params["alpha"] - MPQ(1, 2)
        o2 = self.omega_square(params)
        _require(
            half * half != o2,
            f"{self.name}: omega pair collapses onto alpha - 1/2",
        )
        super().validate(params)

    def lam(self, params):
        return 1 - 2 * params["alpha"]

    def lhs_spec(self, params):
        alpha, beta, gamma = (
            params["alpha"],
            params["beta"],
            params["gamma"],
        )
        weight = _centered_square_weight(
            alpha - MPQ(1, 2), self.omega_square(params)
        )
        return HyperSpec(
            (2 * alpha - 1, 2 * alpha - beta - 1, 2 * alpha - gamma),
            (beta + 1, gamma),
            weight=weight,
        )

    def rhs_spec(self, params):
        alpha, beta, gamma, delta = (
            params["alpha"],
            params["beta"],
            params["gamma"],
            params["delta"],
        )
        return HyperSpec(
            (alpha, alpha - MPQ(1, 2), beta + gamma - 2 * alpha, delta + 1),
            (beta + 1, gamma, delta),
        )


class MillerParisKummer(BaseTransform):
    """Integral-parameter-difference extension of
    kummer_first_quadratic; the root block sits on the left."""

    name = "miller_paris_kummer"
    uv = (1, 2)
    m_const = MPQ(-1)
    d_const = MPQ(-4)
    x_domain = (MPQ(0), MPQ(1, 7))

    def _draw(self, rng):
        return {
            "alpha": rand_q(rng, MPQ(1, 4), 2),
            "beta": rand_q(rng, MPQ(1, 4), 2),
            "f": rand_q(rng, MPQ(1, 3), 3),
            "m": rng.randint(1, 2),
        }

    def validate(self, params):
        _require(
            _nonint(params["alpha"] - params["beta"]),
            f"{self.name}: alpha - beta must be non-integer",
        )
        super().validate(params)

    def lam(self, params):
        return -params["alpha"]

    def lhs_spec(self, params):
        alpha, beta = params["alpha"], params["beta"]
        f, m = params["f"], params["m"]
        q = kummer1_weight_poly(alpha, beta, (f,), (m,))
        return HyperSpec(
            (alpha, beta),
            (1 - beta + alpha,),
            weight=shifted_pair_weight(q),
        )

    def rhs_spec(self, params):
        alpha, beta = params["alpha"], params["beta"]
        f, m = params["f"], params["m"]
        return HyperSpec(
            (alpha / 2, alpha / 2 + MPQ(1, 2), f + m),
            (1 - beta + alpha, f),
        )


class MaierWhipple(BaseTransform):
    """Extension of whipple_quadratic by a degree-2k root block on the
    left, built from the well-poised characteristic polynomial."""

    name = "maier_whipple"
    uv = (1, 2)
    d_const = MPQ(-4)
    x_domain = (MPQ(0), MPQ(1, 7))

    def _draw(self, rng):
        return {
            "alpha": rand_q(rng, MPQ(1, 4), 2),
            "beta": rand_q(rng, MPQ(1, 4), 2),
            "delta": rand_q(rng, MPQ(1, 4), 2),
            "k": rng.randint(1, 2),
        }

    def validate(self, params):
        alpha, beta, delta = (
            params["alpha"],
            params["beta"],
            params["delta"],
        )
        _require(
            _nonint(alpha - beta, alpha - delta),
            f"{self.name}: alpha offsets must be non-integer",
        )
        super().validate(params)

    def lam(self, params):
        return -params["alpha"]

    def lhs_spec(self, params):
        alpha, beta, delta = (
            params["alpha"],
            params["beta"],
            params["delta"],
        )
        p = whipple_weight_poly(params["k"], alpha, beta, delta)
        return HyperSpec(
            (alpha, beta, delta),
            (1 + alpha - beta, 1 + alpha - delta),
            weight=root_pair_weight(p),
        )

    def rhs_spec(self, params):
        alpha, beta, delta = (
            params["alpha"],
            params["beta"],
            params["delta"],
        )
        k = params["k"]
        return HyperSpec(
            (alpha / 2, alpha / 2 + MPQ(1, 2), alpha - beta - delta - k + 1),
            (1 + alpha - beta, 1 + alpha - delta),
        )


class MaierWhippleExt(BaseTransform):
    """maier_whipple with one extra explicit (gamma+k, gamma) pair on
    the right and the correspondingly extended root block."""

    name = "maier_whipple_ext"
    uv = (1, 2)
    d_const = MPQ(-4)
    x_domain = (MPQ(0), MPQ(1, 7))

    def _draw(self, rng):
        return {
            "alpha": rand_q(rng, MPQ(1, 4), 2),
            "beta": rand_q(rng, MPQ(1, 4), 2),
            "delta": rand_q(rng, MPQ(1, 4), 2),
            "gamma": rand_q(rng, MPQ(1, 3), 3),
            "k": rng.randint(1, 2),
        }

    def validate(self, params):
        alpha, beta, delta = (
            params["alpha"],
            params["beta"],
            params["delta"],
        )
        _require(
            _nonint(alpha - beta, alpha - delta),
            f"{self.name}: alpha offsets must be non-integer",
        )
        super().validate(params)

    def lam(self, params):
        return -params["alpha"]

    def lhs_spec(self, params):
        alpha, beta, delta, gamma = (
            params["alpha"],
            params["beta"],
            params["delta"],
            params["gamma"],
        )
        p = whipple_weight_poly_ext(
            params["k"], alpha, beta, delta, gamma
        )
        return HyperSpec(
            (alpha, beta, delta),
            (1 + alpha - beta, 1 + alpha - delta),
            weight=root_pair_weight(p),
        )

    def rhs_spec(self, params):
        alpha, beta, delta, gamma = (
            params["alpha"],
            params["beta"],
            params["delta"],
            params["gamma"],
        )
        k = params["k"]
        return HyperSpec(
            (
                alpha / 2,
                alpha / 2 + MPQ(1, 2),
                alpha - beta - delta - k + 1,
                gamma + k,
            ),
            (1 + alpha - beta, 1 + alpha - delta, gamma),
        )


# ---------------------------------------------------------------- (2, 2)


class KummerSecondQuadratic(BaseTransform):
    """Kummer's second quadratic transformation: 2F1 at 2x against a
    halved-parameter series at x^2/(1-x)^2."""

    name = "kummer_second_quadratic"
    uv = (2, 2)
    m_const = MPQ(2)
    x_domain = (MPQ(0), MPQ(1, 2))

    def _draw(self, rng):
        return {
            "alpha": rand_q(rng, MPQ(1, 4), 2),
            "beta": rand_q(rng, 1, 3, max_den=5),
        }

    def validate(self, params):
        _require(
            _nonint(2 * params["beta"]),
            f"{self.name}: 2 beta must be non-integer",
        )
        super().validate(params)

    def lam(self, params):
        return -params["alpha"]

    def lhs_spec(self, params):
        alpha, beta = params["alpha"], params["beta"]
        return HyperSpec((alpha, beta), (2 * beta,))

    def rhs_spec(self, params):
        alpha, beta = params["alpha"], params["beta"]
        return HyperSpec(
            (alpha / 2, alpha / 2 + MPQ(1, 2)), (beta + MPQ(1, 2),)
        )


class MillerParisKummerSecond(BaseTransform):
    """Integral-parameter-difference extension of
    kummer_second_quadratic; note the shifted second parameter beta-m
    on the left."""

    name = "miller_paris_kummer_second"
    uv = (2, 2)
    m_const = MPQ(2)
    x_domain = (MPQ(0), MPQ(1, 2))

    def _draw(self, rng):
        return {
            "alpha": rand_q(rng, MPQ(1, 4), 2),
            "beta": rand_q(rng, 1, 3, max_den=5),
            "f": rand_q(rng, MPQ(1, 3), 3),
            "m": rng.randint(1, 2),
        }

    def validate(self, params):
        _require(
            _nonint(2 * params["beta"]),
            f"{self.name}: 2 beta must be non-integer",
        )
        super().validate(params)

    def lam(self, params):
        return -params["alpha"]

    def lhs_spec(self, params):
        alpha, beta = params["alpha"], params["beta"]
        f, m = params["f"], params["m"]
        q = kummer2_weight_poly(beta, (f,), (m,))
        return HyperSpec(
            (alpha, beta - m),
            (2 * beta,),
            weight=shifted_pair_weight(q),
        )

    def rhs_spec(self, params):
        alpha, beta = params["alpha"], params["beta"]
        f, m = params["f"], params["m"]
        return HyperSpec(
            (alpha / 2, alpha / 2 + MPQ(1, 2), f + m),
            (beta + MPQ(1, 2), f),
        )


# ---------------------------------------------------------------- (2, 1)


class QuarterSquareQuadratic(BaseTransform):
    """2F1 at x against a series at -x^2/(4(1-x)) with prefactor
    (1-x)^(-alpha/2)."""

    name = "quarter_square_quadratic"
    uv = (2, 1)
    d_const = MPQ(-1, 4)
    x_domain = (MPQ(0), MPQ(3, 4))

    def _draw(self, rng):
        return {
            "alpha": rand_q(rng, MPQ(1, 4), 2),
            "beta": rand_q(rng, 1, 3, max_den=5),
        }

    def validate(self, params):
        _require(
            _nonint(2 * params["beta"], params["beta"] - params["alpha"] / 2),
            f"{self.name}: 2 beta and beta - alpha/2 must be non-integer",
        )
        super().validate(params)

    def lam(self, params):
        return -params["alpha"] / 2

    def lhs_spec(self, params):
        alpha, beta = params["alpha"], params["beta"]
        return HyperSpec((alpha, beta), (2 * beta,))

    def rhs_spec(self, params):
        alpha, beta = params["alpha"], params["beta"]
        return HyperSpec(
            (alpha / 2, beta - alpha / 2), (beta + MPQ(1, 2),)
        )


TRANSFORMS = {
    tf.name: tf
    for tf in (
        EulerSecond(),
        MillerParisSecond(),
        EulerFirst(),
        MillerParisFirst(),
        QuadUpperHalfPair(),
        GaussQuadratic(),
        ReflectionQuadratic(),
        KummerFirstQuadratic(),
        PoisedSquareQuadratic(),
        WhippleQuadratic(),
        ChoiRathieFirst(),
        ChoiRathieSecond(),
        RakhaRathieQuadratic(),
        WangRathieQuadratic(),
        MillerParisKummer(),
        MaierWhipple(),
        MaierWhippleExt(),
        KummerSecondQuadratic(),
        MillerParisKummerSecond(),
        QuarterSquareQuadratic(),
    )
}


def grid_points(tf, count=10):
    """count interior rational points of tf's validity interval."""
    lo, hi = tf.x_domain
    step = (MPQ(hi) - MPQ(lo)) / (count + 1)
    return [MPQ(lo) + j * step for j in range(1, count + 1)]


def transform_discrepancy(tf, params, x, target_dps=None):
    """Relative discrepancy between the two sides at rational x."""
    dps = default_dps() if target_dps is None else target_dps
    x = MPQ(x)
    lhs = eval_convergent(tf.lhs_spec(params), tf.lhs_argument(x), dps)
    rhs = eval_convergent(tf.rhs_spec(params), tf.rhs_argument(x), dps)
    with working_dps(dps + 10):
        pref = mp.power(to_mpf(1 - x), to_mpf(tf.lam(params)))
        return rel_discrepancy(lhs, pref * rhs)
