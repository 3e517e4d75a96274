"""Shared sampling and validation helpers for the identity catalog."""

from ..backend import MPQ, is_integer
from ..gammafn import IndeterminateRatio, PoleError
from ..numeric import working_dps
from ..polynomial import DensePoly
from ..sampling import rand_distinct, rand_q
from ..series import (
    Convergence,
    LowerPole,
    RootAtNonnegativeInteger,
    ZeroConstantTerm,
    check_convergence,
)
from ..summations import spec_is_admissible
from .model import as_prefactor_q, prefactor_numeric

_BUILD_ERRORS = (
    PoleError,
    IndeterminateRatio,
    LowerPole,
    ZeroConstantTerm,
    RootAtNonnegativeInteger,
    ZeroDivisionError,
)


def unit_pair_weight(*zetas):
    """Weight polynomial of explicit unit-shift pairs: each pair
    (zeta+1, zeta) contributes the factor (zeta+1)_n/(zeta)_n = 1+n/zeta."""
    out = DensePoly.const(1)
    for z in zetas:
        z = MPQ(z)
        if z == 0:
            raise ZeroDivisionError("unit pair at zero")
        out = out * DensePoly([MPQ(1), 1 / z])
    return out


def draw_q(rng, lo, hi, den=6):
    return rand_q(rng, MPQ(lo), MPQ(hi), max_den=den)


def draw_block(rng, width=2, shift=2):
    """One (f, m) pair block: f distinct rationals, m positive shifts."""
    r = rng.randint(1, width)
    f = tuple(rand_distinct(rng, r, MPQ(1, 3), MPQ(3), max_den=6))
    m = tuple(rng.randint(1, shift) for _ in range(r))
    return f, m


def draw_distinct(rng, count, lo, hi, den=6):
    return rand_distinct(rng, count, MPQ(lo), MPQ(hi), max_den=den)


def nonint(*values):
    return all(not is_integer(MPQ(v)) for v in values)


def kernel_ok(d, h):
    """Validity of the shifted-kernel closed forms: every h_i - d must
    stay away from the integers."""
    return all(not is_integer(MPQ(hi) - MPQ(d)) for hi in h)


def admissible(lhs, prefactor, rhs):
    """Both sides terminate without lower poles and the prefactor is a
    nonzero exact rational."""
    if not (spec_is_admissible(lhs) and spec_is_admissible(rhs)):
        return False
    try:
        pq = as_prefactor_q(prefactor)
    except _BUILD_ERRORS:
        return False
    return pq is not None and pq != 0


def make_sampler(draw, lhs, rhs, extra=None, tries=600):
    """Rejection sampler: keeps drawing until the built identity
    instance admits exact verification."""

    def sampler(rng):
        for _ in range(tries):
            try:
                params = draw(rng)
            except ZeroDivisionError:
                continue
            if params is None:
                continue
            if extra is not None and not extra(params):
                continue
            try:
                lhs_spec = lhs(params)
                prefactor, rhs_spec = rhs(params)
            except _BUILD_ERRORS:
                continue
            if not admissible(lhs_spec, prefactor, rhs_spec):
                continue
            return params
        raise RuntimeError(f"no admissible draw after {tries} tries")

    return sampler


def make_numeric_sampler(draw, lhs, rhs, tries=600):
    """Rejection sampler for nonterminating instances: both sides must
    converge at their arguments and the prefactor must be finite."""

    def sampler(rng):
        for _ in range(tries):
            try:
                params = draw(rng)
            except ZeroDivisionError:
                continue
            if params is None:
                continue
            try:
                lhs_spec = lhs(params)
                prefactor, rhs_spec = rhs(params)
            except _BUILD_ERRORS:
                continue
            good = all(
                check_convergence(s, s.argument) is not Convergence.DIVERGENT
                for s in (lhs_spec, rhs_spec)
            )
            if not good:
                continue
            try:
                with working_dps(25):
                    if prefactor_numeric(prefactor) == 0:
                        continue
            except _BUILD_ERRORS:
                continue
            return params
        raise RuntimeError(f"no convergent draw after {tries} tries")

    return sampler
