"""Throwaway probe: verify all Case IV displays exactly before coding."""

from hyperforge.backend import MPQ
from hyperforge.gammafn import GammaProduct, GammaRatio, delta, poch
from hyperforge.series import HyperSpec, eval_terminating
from hyperforge.identities.model import ipd_prefactor, as_prefactor_q
from hyperforge.charpoly import (
    ipd_numerator_poly,
    kummer1_weight_poly,
    whipple_weight_poly,
    whipple_weight_poly_ext,
)
from hyperforge.transforms import (
    shifted_pair_weight,
    root_pair_weight,
    _centered_square_weight,
)

Q = MPQ


def ev(spec):
    return eval_terminating(spec, spec.argument)


def check(tag, lhs_spec, front, rhs_spec):
    lv = ev(lhs_spec)
    fq = as_prefactor_q(front) if isinstance(front, GammaProduct) else Q(front)
    if fq is None:
        print(f"{tag}: FRONT DOES NOT REDUCE")
        return False
    rv = fq * ev(rhs_spec)
    ok = lv == rv
    print(f"{tag}: {'ok' if ok else 'MISMATCH  lhs=%s rhs=%s' % (lv, rv)}")
    return ok


# ---- IV-1 ----
A, B, C, D, n = Q(1, 3), Q(1, 4), Q(2, 5), Q(3, 7), 3
E = Q(-n)
lhs = HyperSpec(
    (A, 1 + A / 2, B, C, D, E),
    (A / 2, 1 + A - B, 1 + A - C, 1 + A - D, 1 + A - E),
    argument=Q(-1),
)
front = GammaProduct(
    1,
    GammaRatio(
        [1 + A - C - D - E, 1 + A - C, 1 + A - D, 1 + A - E],
        [1 + A, 1 + A - C - D, 1 + A - D - E, 1 + A - C - E],
    ),
)
rhs = HyperSpec((C, D, E), (1 + A - B, C + D + E - A))
check("IV-1", lhs, front, rhs)

# ---- IV-2 ----
A, B, C, D, n = Q(1, 3), Q(1, 4), Q(2, 5), Q(3, 7), 2
E = Q(-n)
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
check("IV-2", lhs, front, rhs)

# ---- IV-3 ----
A, B, C, D, E, n = Q(1, 3), Q(1, 4), Q(2, 7), Q(2, 5), Q(3, 8), 2
F = Q(-n)
lhs = HyperSpec(
    (A, 1 + A / 2, B, C, D, E, F),
    (A / 2, 1 + A - B, 1 + A - C, 1 + A - D, 1 + A - E, 1 + A - F),
)
front = GammaProduct(
    1,
    GammaRatio(
        [1 + A - D, 1 + A - E, 1 + A - F, 1 + A - D - E - F],
        [1 + A, 1 + A - D - F, 1 + A - D - E, 1 + A - E - F],
    ),
)
rhs = HyperSpec(
    (1 + A - B - C, D, E, F),
    (1 + A - B, 1 + A - C, D + E + F - A),
)
check("IV-3", lhs, front, rhs)

# ---- IV-4 ----
A, B, C, kap, n = Q(1, 3), Q(2, 5), Q(3, 7), Q(5, 3), 2
lhs = HyperSpec((A, B, C, Q(-n)), (kap - B, kap - C, kap + n))
front = GammaProduct(
    poch(kap, n) * poch(kap - B - C, n)
    / (poch(kap - B, n) * poch(kap - C, n))
)
rhs = HyperSpec(
    delta(kap - A, 2) + (B, C, Q(-n)),
    delta(kap, 2) + (kap - A, B + C - kap + 1 - n),
)
check("IV-4", lhs, front, rhs)

# ---- IV-5 ----
A, B, C, kap, n = Q(1, 3), Q(2, 5), Q(3, 7), Q(5, 3), 2
D = Q(-n)
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
check("IV-5", lhs, front, rhs)

# ---- IV-6 ----
A, B, C, n = Q(1, 3), Q(1, 4), Q(2, 5), 3
lhs = HyperSpec(
    (A, 1 + A / 2, B, Q(-n)), (A / 2, 1 - B + A, C), argument=Q(-1)
)
front = GammaProduct(
    (C - A - n - 1) * poch(C - A, n - 1) / poch(C, n)
)
rhs = HyperSpec(
    (1 + A / 2, (1 + A) / 2, 1 - C + A, Q(-n)),
    (1 - B + A, (2 - C + A - n) / 2, (3 - C + A - n) / 2),
)
check("IV-6", lhs, front, rhs)

# ---- IV-7 ----
A, B, C, n = Q(1, 3), Q(1, 4), Q(2, 5), 3
lhs = HyperSpec(
    (A, 1 + A / 2, B, Q(-n) / 2, Q(1 - n) / 2),
    (A / 2, 1 - B + A, C / 2, (C + 1) / 2),
)
front = GammaProduct(
    (C - 2 * A - n - 1) * poch(C - 2 * A, n - 1) / poch(C, n)
)
rhs = HyperSpec(
    (1 + A, A - B + Q(1, 2), 1 - C + 2 * A, Q(-n)),
    (1 - 2 * B + 2 * A, (2 - C + 2 * A - n) / 2, (3 - C + 2 * A - n) / 2),
)
check("IV-7", lhs, front, rhs)

# ---- IV-8 ----
A, B, C, D, n = Q(1, 3), Q(1, 4), Q(2, 7), Q(2, 5), 3
lhs = HyperSpec(
    (A, 1 + A / 2, B, C, Q(-n)), (A / 2, 1 - B + A, 1 - C + A, D)
)
front = GammaProduct(
    (D - A - n - 1) * poch(D - A, n - 1) / poch(D, n)
)
rhs = HyperSpec(
    (1 + A / 2, (1 + A) / 2, 1 - D + A, 1 + A - B - C, Q(-n)),
    (1 - B + A, 1 - C + A, (2 - D + A - n) / 2, (3 - D + A - n) / 2),
)
check("IV-8", lhs, front, rhs)

# ---- IV-9 ----
A, B, C, D, F, n = Q(1, 3), Q(1, 4), Q(2, 7), Q(2, 5), Q(3, 8), 2
E = Q(-n)
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
check("IV-9", lhs, front, rhs)

# ---- IV-10 main ----
A, B, C, D, E, G, n = Q(1, 3), Q(1, 4), Q(2, 7), Q(2, 5), Q(3, 8), Q(5, 9), 2
F = Q(-n)
om2 = G * B * C / (A - B - C - G) + A * A / 4
lhs = HyperSpec(
    (A - B - C, D, E, F, G + 1),
    (1 + A - B, 1 + A - C, D + E + F - A, G),
)
front = GammaProduct(
    1,
    GammaRatio(
        [A + 1, 1 + A - D - F, 1 + A - E - F, 1 + A - D - E],
        [1 + A - F, 1 + A - D, 1 + A - E, 1 + A - D - E - F],
    ),
)
rhs = HyperSpec(
    (A, 1 + A / 2, B, C, D, E, F),
    (A / 2, 1 + A - B, 1 + A - C, 1 + A - D, 1 + A - E, 1 + A - F),
    weight=_centered_square_weight(A / 2, om2),
)
check("IV-10", lhs, front, rhs)

# ---- IV-11: sigma^2 printed vs transform ----
A, B, C, D, n = Q(1, 3), Q(1, 4), Q(2, 7), Q(2, 5), 3
sig2_printed = ((A - B) * (A * (A - 1) - D / 2) + A * (D - A) / 2) / (
    A - B - D - Q(1, 2)
)
bb = A - B - Q(1, 2)  # transform beta
sig2_trans = (A * A * bb - A * bb * D - bb * D / 2 - D / 4) / (bb - D)
lhs = HyperSpec(
    (Q(-n), A + 1, A - B - Q(1, 2), C, D + 1),
    (1 + 2 * A - B, (1 + C - n) / 2, (2 + C - n) / 2, D),
)
front = GammaProduct(
    -poch(1 + 2 * A - C, n) / ((C + n) * poch(1 - C, n - 1))
)
for tag, s2 in (("IV-11 printed", sig2_printed), ("IV-11 transform", sig2_trans)):
    rhs = HyperSpec(
        (Q(-n), 2 * A, 1 + A, B),
        (A, 1 + 2 * A - B, 1 + 2 * A - C),
        weight=_centered_square_weight(A, s2),
    )
    check(tag, lhs, front, rhs)

# ---- IV-12 ----
A, B, C, D, E, n = Q(1, 3), Q(1, 4), Q(2, 7), Q(2, 5), Q(3, 8), 3
om2 = B * C * E / (2 * A - B - C - E - 1) + (A - Q(1, 2)) ** 2
lhs = HyperSpec(
    (Q(-n), A, A + Q(1, 2), 2 * A - B - C - 1, D, E + 1),
    (2 * A - B, 2 * A - C, (1 + D - n) / 2, (2 + D - n) / 2, E),
)
front = GammaProduct(
    -poch(2 * A - D, n) / ((D + n) * poch(1 - D, n - 1))
)
rhs = HyperSpec(
    (Q(-n), 2 * A - 1, A + Q(1, 2), B, C),
    (A - Q(1, 2), 2 * A - B, 2 * A - C, 2 * A - D),
    weight=_centered_square_weight(A - Q(1, 2), om2),
)
check("IV-12", lhs, front, rhs)
