"""Expansion bases with parameter-pair blocks.

Scalar transformations already carry everything the expansion needs, so
their bases come straight from ``basis_from_transform``.  The two
families below take a whole vector block (f, m) of pairs and are shared
by several catalog entries.
"""

from ..backend import MPQ
from ..charpoly import euler_weight_poly, pfaff_weight_poly
from ..transforms import shifted_pair_weight
from .master import ExpansionBasis


def _vector(f, m):
    f = tuple(MPQ(fi) for fi in f)
    m = tuple(int(mi) for mi in m)
    if len(f) != len(m):
        raise ValueError("pair block vectors must have equal length")
    return f, m


def reflect_pair_basis(a, b, c, f, m):
    """Euler-type reflection with an (f, m) pair block; argument kept."""
    a, b, c = MPQ(a), MPQ(b), MPQ(c)
    f, m = _vector(f, m)
    mt = sum(m)
    weight = None
    if mt:
        weight = shifted_pair_weight(euler_weight_poly(a, b, c, f, m))
    return ExpansionBasis(
        lhs_upper=(a, b) + tuple(fi + mi for fi, mi in zip(f, m)),
        lhs_lower=(c,) + f,
        lhs_weight=None,
        rhs_upper=(c - a - mt, c - b - mt),
        rhs_lower=(c,),
        rhs_weight=weight,
        lam=c - a - b - mt,
        u=1,
        v=0,
        m_const=MPQ(1),
        d_const=MPQ(1),
    )


def pfaff_pair_basis(a, b, c, f, m):
    """Pfaff-type reflection with an (f, m) pair block; argument moves
    from x to x/(x-1)."""
    a, b, c = MPQ(a), MPQ(b), MPQ(c)
    f, m = _vector(f, m)
    mt = sum(m)
    weight = None
    if mt:
        weight = shifted_pair_weight(pfaff_weight_poly(b, c, f, m))
    return ExpansionBasis(
        lhs_upper=(a, b) + tuple(fi + mi for fi, mi in zip(f, m)),
        lhs_lower=(c,) + f,
        lhs_weight=None,
        rhs_upper=(a, c - b - mt),
        rhs_lower=(c,),
        rhs_weight=weight,
        lam=-a,
        u=1,
        v=1,
        m_const=MPQ(1),
        d_const=MPQ(-1),
    )
