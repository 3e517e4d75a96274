"""Brute-force checks of the unit-argument summation rules.

Every closed form is compared against direct term-by-term summation of
the series it claims to evaluate, in exact rational arithmetic; the
per-case printed variants of the integral-parameter-difference family
are additionally compared against the general form they specialize.
"""

import pytest
from mpmath import mpf

from hyperforge.backend import MPQ
from hyperforge.numeric import rel_discrepancy, to_mpf, working_dps
from hyperforge.sampling import seeded
from hyperforge.series import eval_convergent
from hyperforge.summations import (
    ADJUDICATIONS,
    CORE_RULE_NAMES,
    SUMMATION_RULES,
)

SAMPLES = 20

PRINTED_IPD = ("ipd10", "ipd11", "ipd1m1", "ipd12", "ipd22", "ipd21")


def run_rule(rule, seed, samples=SAMPLES):
    checked = 0
    for i in range(samples):
        rng = seeded(seed, "sum", rule.name, i)
        params = rule.sample(rng)
        for k in rule.k_range(params):
            try:
                rule.validate(params, k)
            except ValueError:
                continue
            lhs = rule.lhs_value(params, k)
            rhs = rule.closed_form(params, k).exact()
            assert rhs is not None, (rule.name, params, k)
            assert lhs == rhs, (rule.name, params, k)
            checked += 1
    assert checked >= samples


@pytest.mark.parametrize("name", sorted(SUMMATION_RULES))
def test_closed_form_matches_brute_force(name):
    run_rule(SUMMATION_RULES[name], seed=7)


@pytest.mark.parametrize("name", PRINTED_IPD)
def test_printed_case_agrees_with_general_form(name):
    printed = SUMMATION_RULES[name]
    general = SUMMATION_RULES["ipd"]
    for i in range(SAMPLES):
        rng = seeded(11, "dual", name, i)
        params = printed.sample(rng)
        for k in printed.k_range(params):
            a = printed.closed_form(params, k).exact()
            b = general.closed_form(params, k).exact()
            assert a is not None and b is not None
            assert a == b, (name, params, k)


def test_karlsson_minton_is_unit_shift_endpoint():
    """The k-free rule is the e = d+1 member of the general family."""
    km = SUMMATION_RULES["karlsson_minton"]
    general = SUMMATION_RULES["ipd"]
    for i in range(SAMPLES):
        rng = seeded(13, "km", i)
        params = km.sample(rng)
        gen_params = {
            "u": 1,
            "v": 0,
            "lam": -params["a"],
            "d": params["d"],
            "e": params["d"] + 1,
            "h": params["h"],
            "p": params["p"],
        }
        assert km.lhs_spec(params, 0) == general.lhs_spec(gen_params, 0)
        a = km.closed_form(params, 0).exact()
        b = general.closed_form(gen_params, 0).exact()
        assert a == b, (params, a, b)


def test_contiguous_balance_collapses_nu_denominator():
    """With a2 tied by the balance, the nu denominator is plain lam."""
    rule = SUMMATION_RULES["kim_rathie"]
    for i in range(SAMPLES):
        rng = seeded(17, "nu", i)
        params = rule.sample(rng)
        lam, n = params["lam"], params["n"]
        b1, b2 = params["b1"], params["b2"]
        a2 = rule.a2(params)
        assert b1 + b2 + n - a2 + 2 * (lam - 1) == lam


def test_unit_shift_mu_denominator_symmetric_under_balance():
    """The printed mu denominator singles out b1, but swapping b1 and
    b2 leaves it unchanged once the balance ties a2; the apparent
    asymmetry is notational."""
    rule = SUMMATION_RULES["rakha_rathie"]
    for i in range(SAMPLES):
        rng = seeded(19, "mu", i)
        params = rule.sample(rng)
        lam, n = params["lam"], params["n"]
        b1, b2, b3 = params["b1"], params["b2"], params["b3"]
        a2 = rule.a2(params)
        printed = lam * (b3 - b1 + 1) - (b1 + n - 1) * (b1 - a2 - 1)
        swapped = lam * (b3 - b2 + 1) - (b2 + n - 1) * (b2 - a2 - 1)
        assert printed == swapped


def test_unit_shift_prefactor_symmetric_under_balance():
    """1 + a2 - b1 equals (b2+lam) + (n-1), so the prefactor merges to
    bracket (b1+lam)_(n-1) (b2+lam)_(n-1) / (b3 (b1)_n (b2)_n)."""
    from hyperforge.gammafn import poch

    rule = SUMMATION_RULES["rakha_rathie"]
    for i in range(SAMPLES):
        rng = seeded(29, "omega", i)
        params = rule.sample(rng)
        lam, n = params["lam"], params["n"]
        b1, b2, b3 = params["b1"], params["b2"], params["b3"]
        a2 = rule.a2(params)
        omega = (
            rule.bracket(params)
            * poch(b1 + lam, n - 1)
            * poch(b2 + lam, n)
            / (b3 * (1 + a2 - b1) * poch(b1, n) * poch(b2, n))
        )
        symmetric = (
            rule.bracket(params)
            * poch(b1 + lam, n - 1)
            * poch(b2 + lam, n - 1)
            / (b3 * poch(b1, n) * poch(b2, n))
        )
        assert omega == symmetric


def test_whipple_verbatim_prefactor_matches_exact_path():
    rule = SUMMATION_RULES["whipple_3f2"]
    with working_dps(40):
        for i in range(10):
            rng = seeded(23, "whv", i)
            params = rule.sample(rng)
            for k in (0, 1, 2):
                exact = to_mpf(rule.closed_form(params, k).exact())
                verbatim = rule.closed_form_verbatim(params, k)
                assert rel_discrepancy(exact, verbatim) < mpf(10) ** -30


def test_whipple_sum_at_fractional_order_matches_prefactor():
    """For non-integer order the series no longer terminates, but still
    converges at unit argument; the gamma prefactor remains valid."""
    rule = SUMMATION_RULES["whipple_3f2"]
    params = {"lam": MPQ(1, 2), "a2": MPQ(5, 3), "b1": MPQ(7, 4)}
    for k in (0, 1):
        spec = rule.lhs_spec(params, k)
        value = eval_convergent(spec, MPQ(1), target_dps=30)
        with working_dps(40):
            ref = rule.closed_form_verbatim(params, k)
            assert rel_discrepancy(value, ref) < mpf(10) ** -25


def test_registry_contents():
    assert set(CORE_RULE_NAMES) <= set(SUMMATION_RULES)
    assert len(SUMMATION_RULES) == 16
    assert len(ADJUDICATIONS) == 2
    assert all(a.rule == "rakha_rathie" for a in ADJUDICATIONS)
    assert all(a.verdict for a in ADJUDICATIONS)
