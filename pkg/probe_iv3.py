"""Probe part 3: numeric checks of Case IV extension remarks."""

from mpmath import mp

from hyperforge.backend import MPQ
from hyperforge.gammafn import GammaProduct, GammaRatio, delta, poch
from hyperforge.numeric import rel_discrepancy, working_dps
from hyperforge.series import HyperSpec, eval_convergent
from hyperforge.identities.model import ipd_prefactor, prefactor_numeric
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
DPS = 40


def ncheck(tag, lhs_spec, front, rhs_spec):
    try:
        lv = eval_convergent(lhs_spec, lhs_spec.argument, DPS)
        rv = eval_convergent(rhs_spec, rhs_spec.argument, DPS)
        with working_dps(DPS + 10):
            total = prefactor_numeric(front) * rv
            gap = rel_discrepancy(lv, total)
        print(f"{tag}: gap={mp.nstr(gap, 5)}")
    except Exception as exc:
        print(f"{tag}: RAISED {type(exc).__name__}: {exc}")


# ---- IV-1 ext: all parameters generic, both sides nonterminating ----
A, B, C, D, E = Q(1, 3), Q(1, 4), Q(2, 7), Q(2, 5), Q(3, 8)
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
ncheck("IV-1 ext", lhs, front, rhs)
with working_dps(DPS):
    mlhs = mp.hyper(
        [str(x) for x in (A, 1 + A / 2, B, C, D, E)],
        [str(x) for x in (A / 2, 1 + A - B, 1 + A - C, 1 + A - D, 1 + A - E)],
        -1,
    )
    ours = eval_convergent(lhs, Q(-1), DPS)
    print("  cross mpmath.hyper:", mp.nstr(rel_discrepancy(ours, mlhs), 5))

# ---- IV-2 ext: B = A + 3/2 (RHS terminates), E non-integer ----
A = Q(1, 3)
B = A + Q(3, 2)
C, D, E = Q(1, 20), Q(1, 24), Q(1, 28)
lhs = HyperSpec(
    (A, 1 + A / 2, B)
    + delta(C, 2)
    + delta(D, 2)
    + delta(E, 2),
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
ncheck("IV-2 ext", lhs, front, rhs)

# ---- IV-3 ext: B + C = 2 + A (RHS terminates), F non-integer ----
A, B = Q(3, 2), Q(1, 4)
C = 2 + A - B
D, E, F = Q(2, 5), Q(3, 8), Q(3, 7)
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
ncheck("IV-3 ext", lhs, front, rhs)

# ---- IV-5 ext: all parameters generic, both sides nonterminating ----
A, B, C, D, kap = Q(1, 3), Q(1, 4), Q(2, 7), Q(2, 5), Q(5, 3)
lhs = HyperSpec(
    (A, 1 + A / 2, B, C, D),
    (A / 2, kap - B, kap - C, kap - D),
)
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
ncheck("IV-5 ext", lhs, front, rhs)

# ---- IV-9 numeric: E non-integer, both sides nonterminating ----
A, B, C, D, E, F = Q(3, 2), Q(1, 5), Q(2, 7), Q(2, 5), Q(3, 8), Q(5, 9)
sig2 = (
    A * (A - 2 * F) * (A - 2 * B - 1) - 2 * F * (A - 2 * B)
) / (4 * (A - 2 * B - 2 * F - 1))
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
ncheck("IV-9 numeric", lhs, front, rhs)

# ---- IV-10 companion: 4F3 with unit shift vs weighted 6F5(-1) ----
A, B, C, D, E, G = Q(3, 2), Q(1, 4), Q(2, 7), Q(2, 5), Q(3, 8), Q(5, 9)
om2 = G * B * C / (A - B - C - G) + A * A / 4
lhs = HyperSpec(
    (A - B - C, D, E, G + 1),
    (1 + A - B, 1 + A - C, G),
)
front = GammaProduct(
    1, GammaRatio([A + 1, 1 + A - D - E], [1 + A - D, 1 + A - E])
)
rhs = HyperSpec(
    (A, 1 + A / 2, B, C, D, E),
    (A / 2, 1 + A - B, 1 + A - C, 1 + A - D, 1 + A - E),
    weight=_centered_square_weight(A / 2, om2),
    argument=Q(-1),
)
ncheck("IV-10 companion", lhs, front, rhs)

# ---- IV-16 ext: E non-integer (B < 0 for RHS convergence) ----
A, B, f, m = Q(1, 3), Q(-1, 4), Q(2, 5), 1
C, D, E = Q(2, 7), Q(2, 5), Q(3, 8)
lhs = HyperSpec(
    (A, 1 + A / 2, B, C, D, E),
    (A / 2, 1 + A - B, 1 + A - C, 1 + A - D, 1 + A - E),
    weight=shifted_pair_weight(kummer1_weight_poly(A, B, (f,), (m,))),
    argument=Q(-1),
)
front = GammaProduct(
    1,
    GammaRatio(
        [1 + A - C - D - E, 1 + A - C, 1 + A - D, 1 + A - E],
        [1 + A, 1 + A - C - D, 1 + A - D - E, 1 + A - C - E],
    ),
)
rhs = HyperSpec((C, D, E, f + m), (1 + A - B, C + D + E - A, f))
ncheck("IV-16 ext", lhs, front, rhs)

# ---- IV-17 ext: B + C = 1 + A (k=1, RHS terminates), F non-integer ----
A, B, k = Q(3, 2), Q(1, 4), 1
C = 1 + A - B
D, E, F = Q(1, 5), Q(1, 6), Q(1, 7)
lhs = HyperSpec(
    (A, 1 + A / 2, B, C, D, E, F),
    (A / 2, 1 + A - B, 1 + A - C, 1 + A - D, 1 + A - E, 1 + A - F),
    weight=root_pair_weight(whipple_weight_poly(k, A, B, C)),
)
front = GammaProduct(
    1,
    GammaRatio(
        [1 + A - D, 1 + A - E, 1 + A - F, 1 + A - D - E - F],
        [1 + A, 1 + A - D - F, 1 + A - D - E, 1 + A - E - F],
    ),
)
rhs = HyperSpec(
    (1 + A - B - C - k, D, E, F),
    (1 + A - B, 1 + A - C, D + E + F - A),
)
ncheck("IV-17 ext", lhs, front, rhs)

# ---- IV-24 ext: F non-integer, both sides nonterminating ----
A, B, C, G, k = Q(3, 2), Q(1, 4), Q(2, 7), Q(5, 9), 1
D, E, F = Q(1, 5), Q(1, 6), Q(1, 7)
lhs = HyperSpec(
    (A, 1 + A / 2, B, C, D, E, F),
    (A / 2, 1 + A - B, 1 + A - C, 1 + A - D, 1 + A - E, 1 + A - F),
    weight=root_pair_weight(whipple_weight_poly_ext(k, A, B, C, G)),
)
rhs = HyperSpec(
    (1 + A - B - C - k, D, E, F, G + k),
    (1 + A - B, 1 + A - C, D + E + F - A, G),
)
ncheck("IV-24 ext", lhs, front, rhs)

# ---- IV-26 ext: d non-integer ----
a, b, d, e = Q(1, 3), Q(-3, 4), Q(-23, 10), Q(5, 7)
f, m = Q(2, 5), 1
h1, p1 = (Q(3, 2),), (1,)
pt1 = 1
lhs = HyperSpec(
    (a, b, d, h1[0] + p1[0]),
    (1 - b + a, e, h1[0]),
    weight=shifted_pair_weight(kummer1_weight_poly(a, b, (f,), (m,))),
    argument=Q(-1),
)
front = ipd_prefactor(-a, d, e, h1, p1)
rhs = HyperSpec(
    (a / 2, (a + 1) / 2, d, 1 + a - e, f + m),
    (1 - b + a,) + delta(1 + d + a - e + pt1, 2) + (f,),
    weight=ipd_numerator_poly(1, 2, d, e, -a, h1, p1),
)
ncheck("IV-26 ext", lhs, front, rhs)

# ---- IV-27 ext: d non-integer ----
a, b, c, d, e, k = Q(1, 3), Q(1, 4), Q(2, 7), Q(-23, 10), Q(5, 7), 1
lhs = HyperSpec(
    (a, b, c, d, h1[0] + p1[0]),
    (1 + a - b, 1 + a - c, e, h1[0]),
    weight=root_pair_weight(whipple_weight_poly(k, a, b, c)),
)
front = ipd_prefactor(-a, d, e, h1, p1)
rhs = HyperSpec(
    (a / 2, (a + 1) / 2, d, 1 + a - b - c - k, 1 + a - e),
    (1 - b + a, 1 - c + a) + delta(1 + d + a - e + pt1, 2),
    weight=ipd_numerator_poly(1, 2, d, e, -a, h1, p1),
)
ncheck("IV-27 ext", lhs, front, rhs)

# ---- IV-28 ext: d non-integer ----
a, b, c, g, d, e, k = (
    Q(1, 3),
    Q(1, 4),
    Q(2, 7),
    Q(3, 5),
    Q(-23, 10),
    Q(5, 7),
    1,
)
lhs = HyperSpec(
    (a, b, c, d, h1[0] + p1[0]),
    (1 + a - b, 1 + a - c, e, h1[0]),
    weight=root_pair_weight(whipple_weight_poly_ext(k, a, b, c, g)),
)
front = ipd_prefactor(-a, d, e, h1, p1)
rhs = HyperSpec(
    (a / 2, (a + 1) / 2, d, 1 + a - b - c - k, 1 + a - e, g + k),
    (1 - b + a, 1 - c + a) + delta(1 + d + a - e + pt1, 2) + (g,),
    weight=ipd_numerator_poly(1, 2, d, e, -a, h1, p1),
)
ncheck("IV-28 ext", lhs, front, rhs)
