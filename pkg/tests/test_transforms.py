"""Numeric verification of the argument-transformation catalog.

Each transformation is checked by evaluating both sides independently
at rational points of its validity interval and comparing at high
precision; the two classical linear cases are additionally checked
against mpmath's own 2F1 so the transcription is confirmed by an
implementation that shares no code with this package.
"""

import pytest
from mpmath import mp, mpf

from hyperforge.backend import MPQ
from hyperforge.numeric import rel_discrepancy, to_mpf, working_dps
from hyperforge.sampling import seeded
from hyperforge.transforms import (
    TRANSFORMS,
    grid_points,
    transform_discrepancy,
)

TOL = mpf(10) ** -30


@pytest.mark.parametrize("name", sorted(TRANSFORMS))
def test_both_sides_agree_on_grid(name):
    tf = TRANSFORMS[name]
    grid = grid_points(tf)
    for i in range(3):
        rng = seeded(41, "tf", name, i)
        params = tf.sample(rng)
        for x in (grid[1], grid[4], grid[8]):
            disc = transform_discrepancy(tf, params, x, target_dps=40)
            assert disc < TOL, (name, params, x, disc)


def test_grid_is_interior():
    for tf in TRANSFORMS.values():
        pts = grid_points(tf)
        lo, hi = tf.x_domain
        assert len(pts) == 10
        assert len(set(pts)) == 10
        assert all(lo < x < hi for x in pts)


@pytest.mark.parametrize("name", ["euler_first", "euler_second"])
def test_linear_cases_against_library_oracle(name):
    tf = TRANSFORMS[name]
    rng = seeded(43, "oracle", name)
    params = tf.sample(rng)
    a, b, c = params["a"], params["b"], params["c"]
    with working_dps(40):
        for x in (MPQ(1, 5), MPQ(2, 5)):
            lhs = mp.hyp2f1(
                to_mpf(a), to_mpf(b), to_mpf(c), to_mpf(tf.lhs_argument(x))
            )
            up = tf.rhs_spec(params).upper
            rhs = mp.hyp2f1(
                to_mpf(up[0]),
                to_mpf(up[1]),
                to_mpf(c),
                to_mpf(tf.rhs_argument(x)),
            )
            pref = mp.power(to_mpf(1 - x), to_mpf(tf.lam(params)))
            assert rel_discrepancy(lhs, pref * rhs) < mpf(10) ** -35


def test_registry_has_twenty_entries():
    assert len(TRANSFORMS) == 20
    by_case = {}
    for tf in TRANSFORMS.values():
        by_case.setdefault(tf.uv, []).append(tf.name)
    assert set(by_case) == {(1, 0), (1, 1), (1, -1), (1, 2), (2, 2), (2, 1)}
