"""Probe part 7: exact anchors for the refutation evidence."""

from hyperforge.backend import MPQ
from hyperforge.gammafn import GammaProduct, GammaRatio, delta
from hyperforge.series import HyperSpec, eval_terminating
from hyperforge.identities.model import as_prefactor_q

Q = MPQ


def echeck(tag, lhs, front, rhs):
    lv = eval_terminating(lhs, lhs.argument)
    rv = as_prefactor_q(front) * eval_terminating(rhs, rhs.argument)
    print(f"{tag}: {'ok' if lv == rv else 'MISMATCH %s vs %s' % (lv, rv)}")


# IV-2 with generic B, deep termination E=-5: the identity itself is robust
A, B, C, D, E = Q(7, 10), Q(2, 9), Q(1, 20), Q(1, 24), Q(-5)
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
        [1 + 2 * A - C, 1 + 2 * A - D, 1 + 2 * A - E, 1 + 2 * A - C - D - E],
        [1 + 2 * A, 1 + 2 * A - C - D, 1 + 2 * A - C - E, 1 + 2 * A - D - E],
    ),
)
rhs = HyperSpec(
    (A - B + Q(1, 2), C, D, E),
    (A + Q(1, 2), 2 * A - 2 * B + 1, C + D + E - 2 * A),
)
echeck("IV-2 exact generic B, E=-5", lhs, front, rhs)

# IV-2 on the degenerate hyperplane B=A+3/2 at E=-3 (first broken depth)
B = A + Q(3, 2)
lhs = HyperSpec(
    (A, 1 + A / 2, B) + delta(C, 2) + delta(D, 2) + delta(Q(-3), 2),
    (A / 2, 1 + A - B)
    + delta(1 + 2 * A - C, 2)
    + delta(1 + 2 * A - D, 2)
    + delta(1 + 2 * A + 3, 2),
)
front = GammaProduct(
    1,
    GammaRatio(
        [1 + 2 * A - C, 1 + 2 * A - D, 1 + 2 * A + 3, 1 + 2 * A - C - D + 3],
        [1 + 2 * A, 1 + 2 * A - C - D, 1 + 2 * A - C + 3, 1 + 2 * A - D + 3],
    ),
)
rhs = HyperSpec(
    (A - B + Q(1, 2), C, D, Q(-3)),
    (A + Q(1, 2), 2 * A - 2 * B + 1, C + D - 3 - 2 * A),
)
echeck("IV-2 exact B=A+3/2, E=-3", lhs, front, rhs)

# IV-5 on its terminating-RHS hyperplane A=kappa+1, at integer D=-2:
# exact anchor showing that hyperplane is not itself degenerate
A, kap, B, C, D = Q(7, 2), Q(5, 2), Q(1, 4), Q(2, 7), Q(-2)
lhs = HyperSpec((A, 1 + A / 2, B, C, D), (A / 2, kap - B, kap - C, kap - D))
front = GammaProduct(
    1,
    GammaRatio(
        [kap - B, kap - C, kap - D, kap - B - C - D],
        [kap, kap - B - C, kap - B - D, kap - C - D],
    ),
)
rhs = HyperSpec(
    delta(kap - A - 1, 2) + (B, C, D),
    delta(kap, 2) + (kap - A, B + C + D - kap + 1),
)
echeck("IV-5 exact A=kap+1, D=-2", lhs, front, rhs)
