"""Drive the catalog: substitute drawn parameters into both sides of an
identity and require equality, exactly for terminating instances and to
a stated precision for convergent ones."""

import dataclasses

from ..numeric import rel_discrepancy, to_mpf, working_dps
from ..series import eval_convergent, eval_terminating
from .master import SummationPatternMismatch, regenerate_rhs
from .model import as_prefactor_q, prefactor_numeric

_MAX_RECORDED_FAILURES = 3


@dataclasses.dataclass
class CheckResult:
    label: str
    attempted: int = 0
    passed: int = 0
    failures: tuple = ()
    note: str = ""

    @property
    def ok(self):
        return self.passed == self.attempted and not self.failures

    def record(self, message):
        self.attempted += 1
        if message is None:
            self.passed += 1
        elif len(self.failures) < _MAX_RECORDED_FAILURES:
            self.failures = self.failures + (message,)


@dataclasses.dataclass
class IdentityReport:
    id: str
    anchor: str
    checks: tuple

    @property
    def ok(self):
        return all(c.ok for c in self.checks)


def _shorten(params):
    pairs = ", ".join(f"{k}={v}" for k, v in sorted(params.items()))
    return pairs if len(pairs) < 160 else pairs[:157] + "..."


def check_exact(entry, params):
    """One exact equality check; None on success, else a message."""
    lhs_spec = entry.lhs(params)
    prefactor, rhs_spec = entry.rhs(params)
    cut = entry.truncate(params) if entry.truncate is not None else None
    lhs_val = eval_terminating(lhs_spec, lhs_spec.argument, truncate_at=cut)
    rhs_val = as_prefactor_q(prefactor) * eval_terminating(
        rhs_spec, rhs_spec.argument
    )
    if lhs_val != rhs_val:
        return f"lhs={lhs_val} != rhs={rhs_val} at {_shorten(params)}"
    return None


def check_pair(lhs, rhs, params):
    """Exact check of an auxiliary (lhs builder, rhs builder) pair."""
    lhs_spec = lhs(params)
    prefactor, rhs_spec = rhs(params)
    lhs_val = eval_terminating(lhs_spec, lhs_spec.argument)
    rhs_val = as_prefactor_q(prefactor) * eval_terminating(
        rhs_spec, rhs_spec.argument
    )
    if lhs_val != rhs_val:
        return f"lhs={lhs_val} != rhs={rhs_val} at {_shorten(params)}"
    return None


def check_numeric(entry, params, target_dps=48):
    """One high-precision check of a convergent instance."""
    lhs_spec = entry.lhs(params)
    prefactor, rhs_spec = entry.rhs(params)
    lhs_val = eval_convergent(lhs_spec, lhs_spec.argument, target_dps)
    rhs_val = eval_convergent(rhs_spec, rhs_spec.argument, target_dps)
    with working_dps(target_dps + 10):
        total = prefactor_numeric(prefactor) * rhs_val
        gap = rel_discrepancy(lhs_val, total)
        if gap > to_mpf(10) ** (-target_dps):
            return (
                f"discrepancy {gap} exceeds 1e-{target_dps}"
                f" at {_shorten(params)}"
            )
    return None


def check_closure(entry, params, max_k=8):
    """Rebuild the right side from the derivation record."""
    try:
        regenerate_rhs(entry, params, max_k=max_k)
    except SummationPatternMismatch as exc:
        return f"{exc} at {_shorten(params)}"
    return None


def verify_identity(
    entry,
    rng,
    samples=20,
    mode="exact",
    target_dps=48,
    numeric_samples=2,
    closure_samples=0,
    max_k=8,
):
    """Run the requested checks on one catalog entry.

    ``mode`` is "exact", "numeric", or "both".  Closure checks (term-by-
    term regeneration of the right side) run when ``closure_samples`` is
    positive and the entry carries a derivation record.
    """
    checks = []

    if mode in ("exact", "both"):
        res = CheckResult("exact")
        for _ in range(samples):
            res.record(check_exact(entry, entry.sampler(rng)))
        checks.append(res)
        for sec in entry.secondary:
            sres = CheckResult(f"secondary:{sec.label}")
            for _ in range(samples):
                sres.record(check_pair(sec.lhs, sec.rhs, sec.sampler(rng)))
            checks.append(sres)

    if mode in ("numeric", "both"):
        nres = CheckResult("numeric")
        if entry.numeric_sampler is None:
            nres.note = "no convergent regime"
        else:
            for _ in range(numeric_samples):
                nres.record(
                    check_numeric(
                        entry, entry.numeric_sampler(rng), target_dps
                    )
                )
        checks.append(nres)

    if closure_samples > 0:
        cres = CheckResult("closure")
        if entry.derivation is None or entry.closure_sampler is None:
            cres.note = "no derivation record"
        else:
            for _ in range(closure_samples):
                cres.record(
                    check_closure(
                        entry, entry.closure_sampler(rng), max_k=max_k
                    )
                )
        checks.append(cres)

    return IdentityReport(entry.id, entry.anchor, tuple(checks))
