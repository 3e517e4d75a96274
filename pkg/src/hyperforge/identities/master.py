"""Series rearrangement of an argument transformation.

Whenever a transform reads

    F(aa; bb | M x^w) = (1 - x)^lam F(dd; gg | D x^u / (1 - x)^v),

attaching extra numerator parameters a (shift u per k) and denominator
parameters b and collecting powers of x turns the left side at x = 1 into

    F(aa, Delta(a, w); bb, Delta(b, w) | M)
        = sum_k  (dd)_k W(k) (a)_{uk} D^k / ((gg)_k (b)_{uk} k!)
                 * F(-lam + v k, a + u k; b + u k | 1),

with W the weight carried by the transform's right side.  The inner
series all have the shape of one summation rule at shift k; replacing
them by the rule's closed form regenerates the catalog identities.
"""

from dataclasses import dataclass

from ..backend import MPQ
from ..gammafn import delta, poch
from ..series import HyperSpec, coefficient
from ..summations import SUMMATION_RULES
from ..transforms import TRANSFORMS
from .model import as_prefactor_q


class SummationPatternMismatch(ValueError):
    """The rearranged inner series does not match the summation rule's
    pattern, or the closed form fails to regenerate the printed side."""


@dataclass(frozen=True)
class ExpansionBasis:
    """The transform data the rearrangement needs, decoupled from any
    particular transform class so identity derivations can build it with
    vector weights or renamed parameters."""

    lhs_upper: tuple
    lhs_lower: tuple
    lhs_weight: object
    rhs_upper: tuple
    rhs_lower: tuple
    rhs_weight: object
    lam: object
    u: int
    v: int
    m_const: object
    d_const: object
    w: int = 1

    def rhs_weight_at(self, k):
        return MPQ(1) if self.rhs_weight is None else self.rhs_weight(MPQ(k))


@dataclass(frozen=True)
class MasterExpansion:
    lhs: HyperSpec
    terms: tuple  # ((coefficient, inner HyperSpec), ...)
    basis: ExpansionBasis


def basis_from_transform(transform, params):
    """Build the expansion basis of a registered transform instance."""
    if isinstance(transform, str):
        transform = TRANSFORMS[transform]
    lhs = transform.lhs_spec(params)
    rhs = transform.rhs_spec(params)
    u, v = transform.uv
    return ExpansionBasis(
        lhs_upper=lhs.upper,
        lhs_lower=lhs.lower,
        lhs_weight=lhs.weight,
        rhs_upper=rhs.upper,
        rhs_lower=rhs.lower,
        rhs_weight=rhs.weight,
        lam=transform.lam(params),
        u=u,
        v=v,
        m_const=MPQ(transform.m_const),
        d_const=MPQ(transform.d_const),
        w=transform.w,
    )


def master_lhs(basis, a, b):
    """The rearranged series' left side at x = 1."""
    upper = tuple(basis.lhs_upper)
    lower = tuple(basis.lhs_lower)
    for ai in a:
        upper += delta(ai, basis.w)
    for bi in b:
        lower += delta(bi, basis.w)
    return HyperSpec(
        upper, lower, weight=basis.lhs_weight, argument=basis.m_const
    )


def master_coefficient(basis, a, b, k):
    """Exact k-th outer coefficient of the rearrangement."""
    u = basis.u
    c = MPQ(basis.d_const) ** k
    for q in basis.rhs_upper:
        c *= poch(q, k)
    c *= basis.rhs_weight_at(k)
    for ai in a:
        c *= poch(ai, u * k)
    for q in basis.rhs_lower:
        c /= poch(q, k)
    for bi in b:
        c /= poch(bi, u * k)
    for j in range(1, k + 1):
        c /= j
    return c


def master_inner(basis, a, b, k):
    """The inner unit-argument series at outer index k."""
    u, v = basis.u, basis.v
    upper = (-basis.lam + v * k,) + tuple(ai + u * k for ai in a)
    lower = tuple(bi + u * k for bi in b)
    return HyperSpec(upper, lower)


def master_lemma_expand(transform, params, a, b, max_k):
    """Expand a transform's left side; terms run k = 0..max_k."""
    basis = (
        transform
        if isinstance(transform, ExpansionBasis)
        else basis_from_transform(transform, params)
    )
    a = tuple(MPQ(q) for q in a)
    b = tuple(MPQ(q) for q in b)
    terms = tuple(
        (master_coefficient(basis, a, b, k), master_inner(basis, a, b, k))
        for k in range(max_k + 1)
    )
    return MasterExpansion(lhs=master_lhs(basis, a, b), terms=terms, basis=basis)


def _same_pattern(spec_a, spec_b):
    return (
        sorted(spec_a.upper) == sorted(spec_b.upper)
        and sorted(spec_a.lower) == sorted(spec_b.lower)
    )


def _term_value(spec, k):
    """k-th term of the series including the argument power."""
    return coefficient(spec, k) * MPQ(spec.argument) ** k


def regenerate_rhs(entry, params, max_k=8):
    """Rebuild an identity from its derivation record, term by term.

    Expands the recorded transform, checks the inner series against the
    summation rule's pattern at every k, and confirms that coefficient
    times closed form reproduces the printed series exactly for
    k = 0..max_k.  Returns the printed (prefactor, rhs spec) on success
    and raises SummationPatternMismatch otherwise.
    """
    deriv = entry.derivation
    if deriv is None:
        raise ValueError(f"{entry.id} carries no derivation record")
    rule = SUMMATION_RULES[deriv.rule]
    bound = deriv.binder(params)
    basis, a, b = bound.basis, bound.a, bound.b

    prefactor, rhs_spec = entry.rhs(params)
    pref_q = as_prefactor_q(prefactor)
    if pref_q is None:
        raise SummationPatternMismatch(
            f"{entry.id}: prefactor does not reduce to a rational at the "
            "sampled parameters"
        )

    lhs_spec = entry.lhs(params)
    if bound.master_side == "lhs":
        expanded_side, closed_side = lhs_spec, rhs_spec
        closed_scale = pref_q
    else:
        expanded_side, closed_side = rhs_spec, lhs_spec
        if pref_q == 0:
            raise SummationPatternMismatch(f"{entry.id}: zero prefactor")
        closed_scale = 1 / pref_q

    mlhs = master_lhs(basis, a, b)
    if MPQ(mlhs.argument) != MPQ(expanded_side.argument):
        raise SummationPatternMismatch(
            f"{entry.id}: expansion argument {mlhs.argument} differs from "
            f"the printed side's {expanded_side.argument}"
        )
    for j in range(max_k + 1):
        if _term_value(mlhs, j) != _term_value(expanded_side, j):
            raise SummationPatternMismatch(
                f"{entry.id}: expansion left side differs from the printed "
                f"series at term {j}"
            )

    for k in range(max_k + 1):
        inner = master_inner(basis, a, b, k)
        pattern = rule.lhs_spec(bound.rule_params, k)
        if not _same_pattern(inner, pattern):
            raise SummationPatternMismatch(
                f"{entry.id}: inner series at k={k} is "
                f"{inner.describe()} but rule {deriv.rule} expects "
                f"{pattern.describe()}"
            )
        closed = rule.closed_form(bound.rule_params, k).exact()
        if closed is None:
            raise SummationPatternMismatch(
                f"{entry.id}: closed form does not reduce at k={k}"
            )
        lhs_term = master_coefficient(basis, a, b, k) * closed
        rhs_term = closed_scale * _term_value(closed_side, k)
        if lhs_term != rhs_term:
            raise SummationPatternMismatch(
                f"{entry.id}: term {k} mismatch: expansion gives "
                f"{lhs_term}, printed side gives {rhs_term}"
            )
    return prefactor, rhs_spec
