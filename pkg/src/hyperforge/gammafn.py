"""Pochhammer symbols and exact gamma-ratio reduction.

Closed forms produced by the summation rules are ratios of gamma
functions times a rational.  Whenever a numerator argument differs from
a denominator argument by an integer, the pair collapses to a Pochhammer
symbol, which is an exact rational.  ``GammaRatio.reduce`` performs this
collapse greedily so that closed forms evaluate exactly whenever
possible, falling back to high-precision numerics only for genuinely
transcendental leftovers like a lone Gamma(1/3).

Pole and zero bookkeeping matters: a reduced ratio may be exactly zero
(a Pochhammer of a non-positive integer base) or infinite (a gamma pole
in the numerator).  A zero and a pole in the same product is an
indeterminate 0*inf and raises; callers are expected to sample
parameters away from such degeneracies.
"""

import math
from dataclasses import dataclass, field

from mpmath import mp, mpf

from .backend import MPQ, as_int, frac_part, is_integer, rational
from .numeric import to_mpf


class PoleError(ArithmeticError):
    """A gamma pole (or Pochhammer zero in a denominator) was hit."""


class IndeterminateRatio(ArithmeticError):
    """Zero and pole factors met in one product; the value is 0*inf."""


def poch(q, n):
    """Pochhammer symbol (q)_n for integer n of either sign, exact.

    Negative n uses (q)_{-m} = 1/(q-m)_m and raises PoleError when that
    denominator vanishes.
    """
    q = MPQ(q)
    n = int(n)
    if n >= 0:
        out = MPQ(1)
        for j in range(n):
            out *= q + j
        return out
    m = -n
    den = MPQ(1)
    for j in range(m):
        den *= q - 1 - j
    if den == 0:
        raise PoleError(f"({q})_{n} has a zero denominator")
    return 1 / den


def poch_vec(qs, ns):
    """Product of Pochhammers over paired vectors: prod_i (qs[i])_{ns[i]}."""
    out = MPQ(1)
    for q, n in zip(qs, ns, strict=True):
        out *= poch(q, n)
    return out


def delta(a, w):
    """Parameter block Delta(a, w) = (a/w, (a+1)/w, ..., (a+w-1)/w)."""
    a = MPQ(a)
    return tuple((a + j) / w for j in range(w))


def falling_factorial(q, n):
    """Falling factorial q(q-1)...(q-n+1), exact, n >= 0."""
    q = MPQ(q)
    out = MPQ(1)
    for j in range(int(n)):
        out *= q - j
    return out


@dataclass
class GammaRatio:
    """Formal product prod Gamma(num_i) / prod Gamma(den_j), args rational."""

    num: list = field(default_factory=list)
    den: list = field(default_factory=list)

    def __post_init__(self):
        self.num = [MPQ(a) for a in self.num]
        self.den = [MPQ(a) for a in self.den]

    def times(self, other):
        return GammaRatio(self.num + other.num, self.den + other.den)

    def inverse(self):
        return GammaRatio(list(self.den), list(self.num))

    def reduce(self):
        """Collapse integer-difference pairs into an exact rational factor.

        Returns a ReducedGamma carrying the rational factor, zero/pole
        flags, and any unpaired non-integer arguments left for numeric
        evaluation.  Raises IndeterminateRatio when both a zero and a
        pole occur.
        """
        groups = {}
        for a in self.num:
            groups.setdefault(frac_part(a), [[], []])[0].append(a)
        for b in self.den:
            groups.setdefault(frac_part(b), [[], []])[1].append(b)

        factor = MPQ(1)
        zero_order = 0
        pole_order = 0
        num_left = []
        den_left = []

        for _, (nums, dens) in sorted(groups.items()):
            nums.sort()
            dens.sort()
            pairs = list(zip(nums, dens))
            extra_nums = nums[len(pairs):]
            extra_dens = dens[len(pairs):]
            for x, y in pairs:
                n = as_int(x - y)
                if n >= 0:
                    base, shifts = y, n
                    invert = False
                else:
                    base, shifts = x, -n
                    invert = True
                part = MPQ(1)
                hit_zero = False
                for j in range(shifts):
                    term = base + j
                    if term == 0:
                        hit_zero = True
                        break
                    part *= term
                if hit_zero:
                    if invert:
                        pole_order += 1
                    else:
                        zero_order += 1
                elif invert:
                    factor /= part
                else:
                    factor *= part
            for a in extra_nums:
                if is_integer(a):
                    k = as_int(a)
                    if k > 0:
                        factor *= math.factorial(k - 1)
                    else:
                        pole_order += 1
                else:
                    num_left.append(a)
            for b in extra_dens:
                if is_integer(b):
                    k = as_int(b)
                    if k > 0:
                        factor /= math.factorial(k - 1)
                    else:
                        zero_order += 1
                else:
                    den_left.append(b)

        if zero_order and pole_order:
            raise IndeterminateRatio(
                f"gamma ratio mixes {zero_order} zero factor(s) with "
                f"{pole_order} pole(s)"
            )
        return ReducedGamma(factor, zero_order, pole_order, num_left, den_left)


@dataclass
class ReducedGamma:
    factor: object
    zero_order: int
    pole_order: int
    num_left: list
    den_left: list

    @property
    def is_zero(self):
        return self.zero_order > 0

    @property
    def is_pole(self):
        return self.pole_order > 0

    def exact(self):
        """Exact rational value, or None when residual gammas remain."""
        if self.is_pole:
            raise PoleError("gamma ratio is infinite")
        if self.is_zero:
            return MPQ(0)
        if self.num_left or self.den_left:
            return None
        return self.factor

    def numeric(self):
        """mpf value at the current mpmath precision."""
        if self.is_pole:
            raise PoleError("gamma ratio is infinite")
        if self.is_zero:
            return mpf(0)
        out = to_mpf(self.factor)
        for a in self.num_left:
            out *= mp.gamma(to_mpf(a))
        for b in self.den_left:
            out /= mp.gamma(to_mpf(b))
        return out


@dataclass
class GammaProduct:
    """rational coefficient times a formal gamma ratio.

    The common currency of closed-form right hand sides: arithmetic
    stays exact whenever the ratio fully reduces, and otherwise the
    residual gammas are evaluated with mpmath.
    """

    coeff: object
    gammas: GammaRatio = field(default_factory=GammaRatio)

    def __post_init__(self):
        self.coeff = MPQ(self.coeff)

    @classmethod
    def from_rational(cls, q):
        return cls(MPQ(q))

    def times_q(self, q):
        return GammaProduct(self.coeff * MPQ(q), self.gammas)

    def times(self, other):
        return GammaProduct(
            self.coeff * other.coeff, self.gammas.times(other.gammas)
        )

    def exact(self):
        """Exact rational value or None when gammas do not fully cancel."""
        if self.coeff == 0:
            return MPQ(0)
        reduced = self.gammas.reduce()
        val = reduced.exact()
        return None if val is None else self.coeff * val

    def numeric(self):
        if self.coeff == 0:
            return mpf(0)
        return to_mpf(self.coeff) * self.gammas.reduce().numeric()


def gamma_product(coeff=1, num=(), den=()):
    """Convenience constructor for GammaProduct."""
    return GammaProduct(MPQ(coeff), GammaRatio(list(num), list(den)))


__all__ = [
    "PoleError",
    "IndeterminateRatio",
    "poch",
    "poch_vec",
    "delta",
    "falling_factorial",
    "GammaRatio",
    "ReducedGamma",
    "GammaProduct",
    "gamma_product",
    "rational",
]
