"""Dense univariate polynomials with exact rational coefficients.

Used for the polynomial weights multiplying hypergeometric terms and
for the characteristic polynomials whose roots parametrize weighted
transformations.  Coefficients are backend rationals, stored low degree
first.  Only the small-degree operations the package needs are
implemented: ring arithmetic, rising factorials of a polynomial
argument, evaluation, and linear substitution t -> a + b*t.
"""

from dataclasses import dataclass

from .backend import MPQ


def _trim(coeffs):
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class DensePoly:
    coeffs: tuple

    @classmethod
    def const(cls, q):
        return cls((MPQ(q),))

    @classmethod
    def x(cls):
        return cls((MPQ(0), MPQ(1)))

    @classmethod
    def linear(cls, const, slope):
        """The polynomial const + slope * t."""
        return cls(_trim((MPQ(const), MPQ(slope))))

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", _trim(MPQ(c) for c in self.coeffs)
        )

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return self.coeffs == (MPQ(0),)

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [MPQ(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [MPQ(0)] * (n - len(other.coeffs))
        return DensePoly(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return DensePoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        out = [MPQ(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return DensePoly(tuple(out))

    __rmul__ = __mul__

    def scale(self, q):
        q = MPQ(q)
        return DensePoly(tuple(c * q for c in self.coeffs))

    def __call__(self, t):
        """Evaluate at a rational (or any ring element) via Horner."""
        out = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            out = out * t + c
        return out

    def substitute_linear(self, const, slope):
        """P(const + slope * t) as a new polynomial."""
        arg = DensePoly.linear(const, slope)
        out = DensePoly.const(self.coeffs[-1])
        for c in reversed(self.coeffs[:-1]):
            out = out * arg + DensePoly.const(c)
        return out

    def rising(self, k):
        """Rising factorial prod_{j=0}^{k-1} (P + j) of this polynomial."""
        out = DensePoly.const(1)
        for j in range(int(k)):
            out = out * (self + DensePoly.const(j))
        return out

    def monic(self):
        lead = self.coeffs[-1]
        if lead == 0:
            raise ZeroDivisionError("zero polynomial has no monic form")
        return DensePoly(tuple(c / lead for c in self.coeffs))


def _coerce(v):
    if isinstance(v, DensePoly):
        return v
    return DensePoly.const(v)


def rising_linear(const, slope, k):
    """(const + slope*t)_k as a polynomial in t."""
    return DensePoly.linear(const, slope).rising(k)
