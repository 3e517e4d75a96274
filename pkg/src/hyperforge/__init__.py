"""hyperforge: exact and arbitrary-precision verification of weighted
hypergeometric summation and transformation identities.

The package evaluates generalized hypergeometric series with polynomial
term weights, reduces gamma-function closed forms to exact rationals,
expands argument-transformation formulas through a master series
rearrangement, and mechanically checks a catalog of identities built
from those pieces.  Everything exact runs over rationals (gmpy2-backed
when available); everything numeric runs through mpmath at configurable
precision.
"""

from .backend import BACKEND, HAVE_GMPY2, MPQ, rational
from .numeric import default_dps, working_dps

__version__ = "1.0.0"

__all__ = [
    "BACKEND",
    "HAVE_GMPY2",
    "MPQ",
    "rational",
    "default_dps",
    "working_dps",
    "__version__",
]
