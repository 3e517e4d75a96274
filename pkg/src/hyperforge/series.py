"""Weighted generalized hypergeometric series evaluation.

A series spec is a list of upper parameters, a list of lower parameters,
and an optional polynomial weight:

    F(a; b; W | x) = sum_n  [prod_i (a_i)_n / (prod_j (b_j)_n n!)] W(n) x^n.

Three evaluation regimes:

* terminating (some upper parameter is a non-positive integer): the sum
  is finite and computed exactly over rationals;
* |x| < 1 with unit parameter excess: direct summation in mpf arithmetic
  with a consecutive-small-terms stopping rule;
* |x| = 1: convergence is decided from the parametric excess against the
  weight degree, then the partial sums are fed to Levin's u-transform,
  which squeezes dozens of digits out of a few hundred terms where
  direct summation would need astronomically many.
"""

import enum
from dataclasses import dataclass

from mpmath import mp, mpf

from .backend import MPQ, as_int, is_integer
from .numeric import default_dps, to_mpf, working_dps
from .polynomial import DensePoly


class LowerPole(ArithmeticError):
    """A lower parameter produced a vanishing Pochhammer inside the sum."""


class DivergentSeries(ArithmeticError):
    """The series does not converge at the requested argument."""


class ZeroConstantTerm(ValueError):
    """A weight polynomial with W(0) = 0 has no parameter-pair form."""


class RootAtNonnegativeInteger(ValueError):
    """A weight root sits on a non-negative integer, so the equivalent
    parameter pair would put a pole among the lower parameters."""


class SlowConvergence(ArithmeticError):
    """The term budget ran out before the target accuracy was reached."""


TERM_BUDGET = 100_000
LEVIN_TERM_BUDGET = 20_000
GUARD_DIGITS = 10
CONSECUTIVE_SMALL = 5


class Convergence(enum.Enum):
    TERMINATES = "terminates"
    INSIDE_DISK = "inside-disk"
    AT_UNITY = "at-unity"
    DIVERGENT = "divergent"


@dataclass(frozen=True)
class HyperSpec:
    """Parameters of a weighted hypergeometric series.

    ``argument`` is the point the series is taken at; identities that pin
    their series to a fixed rational argument (1, -1, 2, ...) carry it here
    so a (prefactor, spec) pair is self-contained.
    """

    upper: tuple
    lower: tuple
    weight: DensePoly = None
    argument: object = 1

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(MPQ(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(MPQ(b) for b in self.lower))
        object.__setattr__(self, "argument", MPQ(self.argument))

    def weight_degree(self):
        return 0 if self.weight is None else self.weight.degree

    def weight_at(self, n):
        return MPQ(1) if self.weight is None else self.weight(MPQ(n))

    def parametric_excess(self):
        """sum(lower) - sum(upper); governs behaviour on |x| = 1."""
        return sum(self.lower, MPQ(0)) - sum(self.upper, MPQ(0))

    def termination_index(self):
        """Smallest N >= 0 with -N among the upper parameters, else None."""
        candidates = [
            -as_int(a) for a in self.upper if is_integer(a) and a <= 0
        ]
        return min(candidates) if candidates else None

    def describe(self):
        from .backend import format_q

        up = ", ".join(format_q(a) for a in self.upper)
        lo = ", ".join(format_q(b) for b in self.lower)
        w = "" if self.weight is None else f"; weight deg {self.weight.degree}"
        arg = "" if self.argument == 1 else f" | {format_q(self.argument)}"
        return f"F({up}; {lo}{w}{arg})"


def coefficient(spec, n):
    """Exact n-th Taylor coefficient prod(a)_n / (prod(b)_n n!) * W(n)."""
    from .gammafn import poch

    num = MPQ(1)
    for a in spec.upper:
        num *= poch(a, n)
    den = MPQ(1)
    for b in spec.lower:
        pb = poch(b, n)
        if pb == 0:
            raise LowerPole(f"({b})_{n} = 0 in {spec.describe()}")
        den *= pb
    for j in range(1, n + 1):
        den *= j
    return num / den * spec.weight_at(n)


def _check_lower_poles(spec, n_max):
    for b in spec.lower:
        if is_integer(b) and b <= 0 and -as_int(b) < n_max:
            raise LowerPole(
                f"lower parameter {b} poles before term {n_max} "
                f"in {spec.describe()}"
            )


def eval_terminating(spec, x, truncate_at=None):
    """Exact rational value of a terminating (or truncated) series.

    truncate_at sums only terms 0..truncate_at even when the series does
    not terminate on its own; identities stated for partial sums use it.
    """
    x = MPQ(x)
    if truncate_at is not None:
        n_stop = int(truncate_at)
    else:
        n_stop = spec.termination_index()
        if n_stop is None:
            raise ValueError(f"{spec.describe()} does not terminate")
    # the deepest Pochhammer used is (b)_{n_stop}, which is nonzero as
    # long as b <= -n_stop, so the threshold is n_stop, not n_stop + 1
    _check_lower_poles(spec, n_stop)

    total = spec.weight_at(0)
    base = MPQ(1)
    for n in range(n_stop):
        ratio = x / (n + 1)
        for a in spec.upper:
            ratio *= a + n
        for b in spec.lower:
            ratio /= b + n
        base *= ratio
        total += base * spec.weight_at(n + 1)
    return total


def check_convergence(spec, x):
    """Classify the behaviour of the series at rational argument x."""
    x = MPQ(x)
    if spec.termination_index() is not None:
        return Convergence.TERMINATES
    p, q = len(spec.upper), len(spec.lower)
    if p <= q:
        return Convergence.INSIDE_DISK
    if p > q + 1:
        return Convergence.DIVERGENT
    ax = abs(x)
    if ax < 1:
        return Convergence.INSIDE_DISK
    if ax > 1:
        return Convergence.DIVERGENT
    s = spec.parametric_excess()
    g = spec.weight_degree()
    if x == 1:
        return Convergence.AT_UNITY if s > g else Convergence.DIVERGENT
    return Convergence.AT_UNITY if s > g - 1 else Convergence.DIVERGENT


def _sum_direct(spec, x, target_dps):
    working = target_dps + GUARD_DIGITS
    with working_dps(working):
        xf = to_mpf(x)
        tiny = mpf(10) ** (-(target_dps + GUARD_DIGITS // 2))
        total = to_mpf(spec.weight_at(0))
        base = mpf(1)
        small_run = 0
        n = 0
        while n < TERM_BUDGET:
            ratio = xf / (n + 1)
            for a in spec.upper:
                ratio *= to_mpf(a) + n
            for b in spec.lower:
                ratio /= to_mpf(b) + n
            base *= ratio
            term = base * to_mpf(spec.weight_at(n + 1))
            total += term
            if abs(term) <= tiny * max(mpf(1), abs(total)):
                small_run += 1
                if small_run >= CONSECUTIVE_SMALL:
                    return +total
            else:
                small_run = 0
            n += 1
    raise SlowConvergence(
        f"direct summation of {spec.describe()} at x={x} did not settle "
        f"within {TERM_BUDGET} terms"
    )


def _sum_levin(spec, x, target_dps):
    working = 2 * target_dps + 30
    with working_dps(working):
        xf = to_mpf(x)
        eps = mpf(10) ** (-target_dps - 2)
        levin = mp.levin(method="levin", variant="u")
        psums = []
        total = to_mpf(spec.weight_at(0))
        psums.append(total)
        base = mpf(1)
        best = None
        good_run = 0
        for n in range(LEVIN_TERM_BUDGET):
            ratio = xf / (n + 1)
            for a in spec.upper:
                ratio *= to_mpf(a) + n
            for b in spec.lower:
                ratio /= to_mpf(b) + n
            base *= ratio
            total += base * to_mpf(spec.weight_at(n + 1))
            psums.append(total)
            if len(psums) < 6:
                continue
            value, err = levin.update_psum(psums)
            best = value
            if err < eps * max(mpf(1), abs(value)):
                good_run += 1
                if good_run >= 3:
                    return +best
            else:
                good_run = 0
    raise SlowConvergence(
        f"sequence acceleration for {spec.describe()} at x={x} stalled "
        f"before reaching {target_dps} digits"
    )


def eval_convergent(spec, x, target_dps=None):
    """Numeric value of the series at rational x, as mpf at target_dps.

    Dispatches on the convergence classification; terminating series are
    summed exactly first and then rounded once.
    """
    x = MPQ(x)
    if target_dps is None:
        target_dps = default_dps()
    kind = check_convergence(spec, x)
    if kind is Convergence.TERMINATES:
        exact = eval_terminating(spec, x)
        with working_dps(target_dps + GUARD_DIGITS):
            return to_mpf(exact)
    if kind is Convergence.DIVERGENT:
        raise DivergentSeries(f"{spec.describe()} diverges at x={x}")
    _check_lower_poles(spec, TERM_BUDGET)
    if kind is Convergence.INSIDE_DISK:
        return _sum_direct(spec, x, target_dps)
    return _sum_levin(spec, x, target_dps)


def weight_to_root_shift(weight, dps=None):
    """Rewrite a weight polynomial as parameter-pair shifts.

    A weight W with W(0) = 1 factors over its roots r_i as
    prod_i (n - r_i) / (-r_i), which is exactly the term ratio of the
    parameter pairs (1 - r_i; -r_i).  Returns (upper_shifts, lower_shifts)
    as tuples of mpmath numbers (complex roots come in conjugate pairs and
    are kept complex).

    Raises ZeroConstantTerm when W(0) = 0 and RootAtNonnegativeInteger when
    some -r_i would pole as a lower parameter.
    """
    from mpmath import mp

    from .charpoly import poly_roots

    if dps is None:
        dps = default_dps()
    if weight is None or weight.degree == 0:
        return (), ()
    if weight(MPQ(0)) == 0:
        raise ZeroConstantTerm("weight vanishes at 0; no pair form exists")
    roots = poly_roots(weight, dps=dps)
    with working_dps(dps):
        tol = mp.mpf(10) ** (-dps // 2)
        for r in roots:
            if abs(mp.im(r)) < tol and mp.re(r) > -0.5:
                nearest = mp.nint(mp.re(r))
                if abs(mp.re(r) - nearest) < tol:
                    raise RootAtNonnegativeInteger(
                        f"weight root at {mp.nstr(r, 8)} makes the lower "
                        "shift a non-positive integer"
                    )
        upper = tuple(1 - r for r in roots)
        lower = tuple(-r for r in roots)
    return upper, lower
