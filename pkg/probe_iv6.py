"""Probe part 6: gap profiles in E for the IV-2 and IV-9 extensions."""

from mpmath import mp

from hyperforge.backend import MPQ
from hyperforge.gammafn import GammaProduct, GammaRatio, delta
from hyperforge.numeric import working_dps
from hyperforge.series import HyperSpec, eval_convergent, eval_terminating
from hyperforge.identities.model import as_prefactor_q, prefactor_numeric
from hyperforge.transforms import _centered_square_weight

Q = MPQ


def iv2_specs(A, B, C, D, E):
    lhs = HyperSpec(
        (A, 1 + A / 2, B) + delta(C, 2) + delta(D, 2) + delta(E, 2),
        (A / 2, 1 + A - B)
        + delta(1 + 2 * A - C, 2)
        + delta(1 + 2 * A - D, 2)
        + delta(1 + 2 * A - E, 2),
    )
    front = GammaProduct(
        1,
        GammaRatio(
            [
                1 + 2 * A - C,
                1 + 2 * A - D,
                1 + 2 * A - E,
                1 + 2 * A - C - D - E,
            ],
            [
                1 + 2 * A,
                1 + 2 * A - C - D,
                1 + 2 * A - C - E,
                1 + 2 * A - D - E,
            ],
        ),
    )
    rhs = HyperSpec(
        (A - B + Q(1, 2), C, D, E),
        (A + Q(1, 2), 2 * A - 2 * B + 1, C + D + E - 2 * A),
    )
    return lhs, front, rhs


def iv9_specs(A, B, C, D, E, F):
    sig2 = (A * (A - 2 * F) * (A - 2 * B - 1) - 2 * F * (A - 2 * B)) / (
        4 * (A - 2 * B - 2 * F - 1)
    )
    lhs = HyperSpec(
        ((A - 1) / 2 - B, C, D, E, F + 1),
        ((A + 1) / 2, A - B + 1, C + D + E - A, F),
    )
    front = GammaProduct(
        1,
        GammaRatio(
            [1 + A - C - E, 1 + A - D - E, 1 + A - C - D, 1 + A],
            [1 + A - C, 1 + A - D, 1 + A - E, 1 + A - C - D - E],
        ),
    )
    rhs = HyperSpec(
        (A, 1 + A / 2, B, C, D, E),
        (A / 2, 1 + A - B, 1 + A - C, 1 + A - D, 1 + A - E),
        weight=_centered_square_weight(A / 2, sig2),
    )
    return lhs, front, rhs


def gap_at(specs):
    lhs, front, rhs = specs
    lv = eval_convergent(lhs, lhs.argument, 40)
    rv = eval_convergent(rhs, rhs.argument, 40)
    with working_dps(50):
        return abs(lv - prefactor_numeric(front) * rv) / max(1, abs(lv))


def exact_at(specs):
    lhs, front, rhs = specs
    lv = eval_terminating(lhs, lhs.argument)
    rv = as_prefactor_q(front) * eval_terminating(rhs, rhs.argument)
    return "ok" if lv == rv else f"MISMATCH {lv} vs {rv}"


A2 = Q(7, 10)
print("IV-2 profile  A=7/10 B=A+3/2 C=1/20 D=1/24")
for En in (Q(-5), Q(-2), Q(-1)):
    print(
        f"  E={En} exact:",
        exact_at(iv2_specs(A2, A2 + Q(3, 2), Q(1, 20), Q(1, 24), En)),
    )
for En in (
    Q(-5, 2),
    Q(-3, 2),
    Q(-1, 2),
    Q(-1, 4),
    Q(1, 28),
    Q(1, 4),
):
    g = gap_at(iv2_specs(A2, A2 + Q(3, 2), Q(1, 20), Q(1, 24), En))
    print(f"  E={En}: gap={mp.nstr(g, 4)}")

A9, B9, C9, D9, F9 = Q(3, 2), Q(1, 5), Q(2, 7), Q(2, 5), Q(5, 9)
print("IV-9 profile  A=3/2 B=1/5 C=2/7 D=2/5 F=5/9")
for En in (Q(-4), Q(-2), Q(-1)):
    print(f"  E={En} exact:", exact_at(iv9_specs(A9, B9, C9, D9, En, F9)))
for En in (
    Q(-7, 2),
    Q(-5, 2),
    Q(-3, 2),
    Q(-1, 2),
    Q(3, 8),
):
    g = gap_at(iv9_specs(A9, B9, C9, D9, En, F9))
    print(f"  E={En}: gap={mp.nstr(g, 4)}")
