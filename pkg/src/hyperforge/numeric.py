"""Arbitrary-precision floating point helpers on top of mpmath.

The package does as much as possible in exact rational arithmetic; this
module is the single gateway for the remaining numeric work (gamma
functions at non-integer-difference arguments, nonterminating series,
discrepancy measurement).  Precision is expressed in decimal digits and
defaults to ``HYPERFORGE_PRECISION`` (64 when unset).
"""

import os
from contextlib import contextmanager

from mpmath import mp, mpf

PRECISION_ENV = "HYPERFORGE_PRECISION"
DEFAULT_DPS = 64


def default_dps():
    """Working decimal precision: HYPERFORGE_PRECISION or 64."""
    raw = os.environ.get(PRECISION_ENV)
    if raw is None:
        return DEFAULT_DPS
    dps = int(raw)
    if dps < 10:
        raise ValueError(f"{PRECISION_ENV} must be at least 10, got {dps}")
    return dps


@contextmanager
def working_dps(dps):
    """Temporarily set mpmath decimal precision."""
    old = mp.dps
    mp.dps = dps
    try:
        yield mp
    finally:
        mp.dps = old


def to_mpf(q):
    """Convert an exact rational (Fraction or gmpy2.mpq) or int to mpf at
    the current precision."""
    if isinstance(q, int):
        return mpf(q)
    return mpf(int(q.numerator)) / mpf(int(q.denominator))


def rel_discrepancy(a, b):
    """Scaled discrepancy |a-b| / max(1, |a|, |b|).

    The max(1, ...) floor keeps the measure meaningful when both values
    are tiny, while matching relative error when they are large.
    """
    a = mpf(a) if not hasattr(a, "imag") else a
    diff = abs(a - b)
    scale = max(mpf(1), abs(a), abs(b))
    return diff / scale


def agrees(a, b, tol):
    """True when the scaled discrepancy of a and b is at most tol."""
    return rel_discrepancy(a, b) <= mpf(tol)
