"""Exact rational arithmetic backend.

All kernel computations run over exact rationals.  When gmpy2 is
installed its C-implemented ``mpq`` type is used for a large speedup on
long Pochhammer products and series recurrences; otherwise we fall back
to ``fractions.Fraction`` from the standard library.  Both types expose
``.numerator`` / ``.denominator`` and support mixed arithmetic with
Python ints, so the rest of the package is backend-agnostic.

Set ``HYPERFORGE_PUREPYTHON=1`` to force the pure-Python fallback even
when gmpy2 is available (useful for benchmarking and debugging).
"""

import fractions
import os

BACKEND = "fractions"
HAVE_GMPY2 = False

if not os.environ.get("HYPERFORGE_PUREPYTHON"):
    try:
        import gmpy2

        HAVE_GMPY2 = True
        BACKEND = "gmpy2"
    except ImportError:
        pass

if HAVE_GMPY2:
    MPQ = gmpy2.mpq
    MPZ = gmpy2.mpz
else:
    MPQ = fractions.Fraction
    MPZ = int


def rational(num, den=1):
    """Build a backend rational from ints, strings like ``"3/4"``,
    Fractions, or another backend rational."""
    if isinstance(num, str):
        return MPQ(fractions.Fraction(num)) if HAVE_GMPY2 else MPQ(num)
    if isinstance(num, float):
        raise TypeError("refusing to build an exact rational from a float")
    return MPQ(num, den) if den != 1 else MPQ(num)


def as_fraction(q):
    """Convert a backend rational to ``fractions.Fraction`` (for JSON
    serialization and interop)."""
    return fractions.Fraction(int(q.numerator), int(q.denominator))


def is_integer(q):
    """True when the rational ``q`` is an integer."""
    return q.denominator == 1


def as_int(q):
    """Exact integer value of ``q``; raises ValueError when not integral."""
    if q.denominator != 1:
        raise ValueError(f"{q} is not an integer")
    return int(q.numerator)


def floor_q(q):
    """Floor of a rational as a Python int."""
    return int(q.numerator) // int(q.denominator)


def frac_part(q):
    """Fractional part ``q - floor(q)`` as a backend rational in [0, 1)."""
    return q - floor_q(q)


def format_q(q):
    """Render a rational as ``"n"`` or ``"n/d"`` for reports."""
    if q.denominator == 1:
        return str(int(q.numerator))
    return f"{int(q.numerator)}/{int(q.denominator)}"
