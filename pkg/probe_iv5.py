"""Probe part 5: second draws for the borderline extension claims."""

import numpy as np
from mpmath import mp

from hyperforge.backend import MPQ
from hyperforge.gammafn import GammaProduct, GammaRatio, delta
from hyperforge.numeric import working_dps
from hyperforge.series import HyperSpec, eval_convergent, eval_terminating
from hyperforge.identities.model import ipd_prefactor, prefactor_numeric
from hyperforge.charpoly import (
    ipd_numerator_poly,
    kummer1_weight_poly,
    whipple_weight_poly_ext,
)
from hyperforge.transforms import (
    shifted_pair_weight,
    root_pair_weight,
    _centered_square_weight,
)
from probe_iv4 import indep

Q = MPQ


def ncheck(tag, lhs_spec, front, rhs_spec, dps=40):
    try:
        lv = eval_convergent(lhs_spec, lhs_spec.argument, dps)
        rv = eval_convergent(rhs_spec, rhs_spec.argument, dps)
        with working_dps(dps + 10):
            fr = prefactor_numeric(front)
            gap = abs(lv - fr * rv) / max(1, abs(lv))
        print(f"{tag}: gap={mp.nstr(gap, 5)}")
    except Exception as exc:
        print(f"{tag}: RAISED {type(exc).__name__}: {exc}")


def echeck(tag, lhs_spec, front, rhs_spec):
    from hyperforge.identities.model import as_prefactor_q

    lv = eval_terminating(lhs_spec, lhs_spec.argument)
    fq = as_prefactor_q(front) if isinstance(front, GammaProduct) else Q(front)
    rv = fq * eval_terminating(rhs_spec, rhs_spec.argument)
    print(f"{tag}: {'ok' if lv == rv else 'MISMATCH %s vs %s' % (lv, rv)}")


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


# IV-2 inside the stated proof region Re(1+2A-B-C-D) > 0, B = A + 3/2
A = Q(7, 10)
lhs, front, rhs = iv2_specs(A, A + Q(3, 2), Q(1, 20), Q(1, 24), Q(1, 28))
ncheck("IV-2 ext A=7/10 (proof region)", lhs, front, rhs)
li, lt = indep(lhs)
rv = float(eval_terminating(rhs, rhs.argument))
with working_dps(30):
    fr = float(prefactor_numeric(front))
print(f"  indep gap={(li - fr * rv) / max(1, abs(li)):.3e} tail={lt:.1e}")

# IV-2, M = 2 (B = A + 5/2) back at A = 1/3
A = Q(1, 3)
lhs, front, rhs = iv2_specs(A, A + Q(5, 2), Q(1, 20), Q(1, 24), Q(1, 28))
ncheck("IV-2 ext M=2 A=1/3", lhs, front, rhs)

# IV-5: RHS terminating via A = kappa + 1 (Delta pair hits -1), LHS converges
A, kap, B, C, D = Q(7, 2), Q(5, 2), Q(1, 4), Q(2, 7), Q(2, 5)
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
ncheck("IV-5 ext LHS-conv RHS-term", lhs, front, rhs)

# IV-5: both convergent, second draw
A, kap, B, C, D = Q(1, 5), Q(7, 3), Q(1, 7), Q(1, 8), Q(1, 9)
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
ncheck("IV-5 ext both-conv draw2", lhs, front, rhs)
li, lt = indep(lhs)
rv2, rt = indep(rhs)
with working_dps(30):
    fr = float(prefactor_numeric(front))
print(f"  indep gap={(li - fr * rv2) / max(1, abs(li)):.3e} tails={lt:.1e}/{rt:.1e}")


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


# IV-9 second draw, C+D+E-A > 0, sigma^2 < 0
lhs, front, rhs = iv9_specs(
    Q(1, 3), Q(1, 5), Q(1, 5), Q(1, 4), Q(1, 8), Q(5, 9)
)
ncheck("IV-9 numeric draw2", lhs, front, rhs)

# IV-9 third draw: E close to a negative integer (E = -1 + 1/10)
lhs, front, rhs = iv9_specs(
    Q(3, 2), Q(1, 5), Q(2, 7), Q(2, 5), Q(-9, 10), Q(5, 9)
)
ncheck("IV-9 numeric draw3 (E near -1)", lhs, front, rhs)

# IV-16: exact terminating check in the B < 0 regime used by the probe
A, B, f, m, n = Q(1, 3), Q(-1, 4), Q(2, 5), 1, 2
C, D, E = Q(2, 7), Q(2, 5), Q(-n)
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
echeck("IV-16 exact at B=-1/4", lhs, front, rhs)

# IV-26: exact terminating check in the b < 0 regime used by the probe
a, b, d, e = Q(1, 3), Q(-3, 4), Q(-2), Q(5, 7)
f, m = Q(2, 5), 1
h1, p1, pt1 = (Q(3, 2),), (1,), 1
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
echeck("IV-26 exact at b=-3/4", lhs, front, rhs)

# IV-28 ext: independent cross-check of the part-3 gap
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
li, lt = indep(lhs)
rv3, rt = indep(rhs)
with working_dps(30):
    fr = float(prefactor_numeric(front))
print(f"IV-28 ext indep gap={(li - fr * rv3) / max(1, abs(li)):.3e} tails={lt:.1e}/{rt:.1e}")
