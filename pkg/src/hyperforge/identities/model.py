"""Data model for catalog identities."""

from dataclasses import dataclass, field

from ..backend import MPQ
from ..gammafn import GammaProduct, GammaRatio, poch, poch_vec


@dataclass(frozen=True)
class Derivation:
    """How an identity arises: expand a base transform with the series
    rearrangement and close the inner sums with one summation rule.

    ``binder`` maps the identity's parameter dict to a Bound object; it
    carries the expansion basis, the extra numerator/denominator
    parameters, and the rule parameters for the inner sum at index k.
    """

    transform: str
    rule: str
    binder: object
    note: str = ""


@dataclass(frozen=True)
class Bound:
    """A derivation instantiated at concrete parameters."""

    basis: object
    a: tuple
    b: tuple
    rule_params: dict
    # which printed side the expansion reproduces term by term; the other
    # side is the closed one the rule values are compared against.
    master_side: str = "lhs"


@dataclass(frozen=True)
class SecondaryCheck:
    """A companion display verified alongside the main identity (a folded
    limit form, a truncation, an iteration property)."""

    label: str
    sampler: object
    lhs: object
    rhs: object


@dataclass(frozen=True)
class IdentityEntry:
    """One catalog identity.

    ``lhs(params)`` returns the HyperSpec of the printed left side (with
    its argument); ``rhs(params)`` returns (prefactor, HyperSpec) where
    the prefactor is a GammaProduct or an exact rational.
    ``sampler(rng)`` draws admissible exact-mode parameters;
    ``closure_sampler`` (defaults to sampler) draws parameters deep enough
    for eight nontrivial expansion terms; ``numeric_sampler`` is present
    exactly on the entries whose statement extends beyond terminating
    parameters and draws a convergent nonterminating instance.
    ``truncate(params)`` gives the index of the last term kept when the
    identity is stated for a partial sum rather than a full series.
    """

    id: str
    case: str
    anchor: str
    title: str
    sampler: object
    lhs: object
    rhs: object
    constraints: tuple = ()
    derivation: Derivation = None
    closure_sampler: object = None
    numeric_sampler: object = None
    secondary: tuple = ()
    adjudications: tuple = ()
    truncate: object = None
    notes: str = ""

    def draw_closure(self, rng):
        fn = self.closure_sampler or self.sampler
        return fn(rng)


def as_prefactor_q(prefactor):
    """Exact rational value of an rhs prefactor, or None."""
    if isinstance(prefactor, GammaProduct):
        return prefactor.exact()
    return MPQ(prefactor)


def prefactor_numeric(prefactor):
    """mpf value at the current mpmath precision."""
    from ..numeric import to_mpf

    if isinstance(prefactor, GammaProduct):
        return prefactor.numeric()
    return to_mpf(MPQ(prefactor))


def ipd_prefactor(lam, d, e, h=(), p=()):
    """Front factor shared by every identity whose inner sums close with
    the shifted-kernel rule: Gamma(e+lam-d) Gamma(e) /
    [Gamma(e+lam) Gamma(e-d) (h)_p (1+d-e-lam)_p].

    The kernel polynomial used alongside it is the Gamma(e-d)-scaled one,
    which is why Gamma(e-d) sits in the denominator here.
    """
    lam, d, e = MPQ(lam), MPQ(d), MPQ(e)
    p_total = int(sum(p))
    coeff = MPQ(1) / (poch_vec(h, p) * poch(1 + d - e - lam, p_total))
    return GammaProduct(
        coeff, GammaRatio([e + lam - d, e], [e + lam, e - d])
    )


def poch_ratio(nums, dens, n):
    """prod (nums)_n / prod (dens)_n as an exact rational."""
    out = MPQ(1)
    for q in nums:
        out *= poch(q, n)
    for q in dens:
        out /= poch(q, n)
    return out
