"""Probe part 2: IPD12 family and root-block Case IV displays."""

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


h, p = (Q(3, 2), Q(11, 5)), (2, 1)
pt = sum(p)
hp = tuple(hi + pi for hi, pi in zip(h, p))

# ---- IV-13 ----
a, b, d, e = Q(1, 3), Q(1, 4), Q(-2), Q(5, 7)
lhs = HyperSpec((a, b, d) + hp, (1 - b + a, e) + h, argument=Q(-1))
front = ipd_prefactor(-a, d, e, h, p)
rhs = HyperSpec(
    (a / 2, (a + 1) / 2, d, 1 - e + a),
    (1 - b + a,) + delta(1 + d + a - e + pt, 2),
    weight=ipd_numerator_poly(1, 2, d, e, -a, h, p),
)
check("IV-13", lhs, front, rhs)

# ---- IV-14 printed lower vs transform lower ----
a, b, d, e = Q(1, 3), Q(1, 4), Q(-2), Q(5, 7)
lhs = HyperSpec(
    (a, b) + delta(d, 2) + delta(hp[0], 2) + delta(hp[1], 2),
    (1 - b + a,) + delta(e, 2) + delta(h[0], 2) + delta(h[1], 2),
)
front = ipd_prefactor(-2 * a, d, e, h, p)
w14 = ipd_numerator_poly(1, 2, d, e, -2 * a, h, p)
for tag, low in (
    ("IV-14 printed", 1 - b + a),
    ("IV-14 transform", 1 - 2 * b + 2 * a),
):
    rhs = HyperSpec(
        (a, a - b + Q(1, 2), d, 1 - e + 2 * a),
        (low,) + delta(1 + d + 2 * a - e + pt, 2),
        weight=w14,
    )
    check(tag, lhs, front, rhs)

# ---- IV-15 ----
a, b, c, d, e = Q(1, 3), Q(1, 4), Q(2, 7), Q(-2), Q(5, 7)
lhs = HyperSpec((a, b, c, d) + hp, (1 - b + a, 1 - c + a, e) + h)
front = ipd_prefactor(-a, d, e, h, p)
rhs = HyperSpec(
    (a / 2, (a + 1) / 2, 1 + a - b - c, d, 1 - e + a),
    (1 - b + a, 1 - c + a) + delta(1 + d + a - e + pt, 2),
    weight=ipd_numerator_poly(1, 2, d, e, -a, h, p),
)
check("IV-15", lhs, front, rhs)

# ---- IV-18 ----
a, b, d, e = Q(1, 3), Q(1, 4), Q(-2), Q(5, 7)
lhs = HyperSpec((a, b, d) + hp, (b + 1, e) + h)
front = ipd_prefactor(-2 * b, d, e, h, p)
rhs = HyperSpec(
    (b, b - a / 2 + Q(1, 2), b - a / 2 + 1, d, 1 - e + 2 * b),
    (b + 1, 2 * b - a + 1) + delta(1 + d + 2 * b - e + pt, 2),
    weight=ipd_numerator_poly(1, 2, d, e, -2 * b, h, p),
)
check("IV-18", lhs, front, rhs)

# ---- IV-19 ----
a, b, d, e = Q(1, 3), Q(1, 4), Q(-2), Q(5, 7)
lhs = HyperSpec((a + 1, 2 * a, b, d) + hp, (a, b + 1, e) + h)
front = ipd_prefactor(-2 * b, d, e, h, p)
rhs = HyperSpec(
    (b, b - a, b - a + Q(1, 2), d, 1 - e + 2 * b),
    (b + 1, 2 * b - 2 * a + 1) + delta(1 + d + 2 * b - e + pt, 2),
    weight=ipd_numerator_poly(1, 2, d, e, -2 * b, h, p),
)
check("IV-19", lhs, front, rhs)

# ---- IV-20 ----
a, b, c, d, e = Q(1, 3), Q(1, 4), Q(2, 7), Q(-2), Q(5, 7)
sig2 = (a * a * b - a * b * c - b * c / 2 - c / 4) / (b - c)
lhs = HyperSpec(
    (2 * a, a - b - Q(1, 2), d) + hp,
    (a + b + Q(3, 2), e) + h,
    weight=_centered_square_weight(a, sig2),
)
front = ipd_prefactor(-2 * a, d, e, h, p)
rhs = HyperSpec(
    (a, b, c + 1, d, 1 - e + 2 * a),
    (a + b + Q(3, 2), c) + delta(1 + d + 2 * a - e + pt, 2),
    weight=ipd_numerator_poly(1, 2, d, e, -2 * a, h, p),
)
check("IV-20", lhs, front, rhs)

# ---- IV-25 ----
a, b, g, c, d, e = Q(1, 3), Q(1, 4), Q(2, 7), Q(2, 5), Q(-2), Q(5, 7)
om2 = (a - Q(1, 2)) ** 2 - c * (g - 2 * a) * (2 * a - b - 1) / (
    b + g - 2 * a - c
)
lhs = HyperSpec(
    (2 * a - 1, 2 * a - b - 1, 2 * a - g, d) + hp,
    (b + 1, g, e) + h,
    weight=_centered_square_weight(a - Q(1, 2), om2),
)
front = ipd_prefactor(1 - 2 * a, d, e, h, p)
rhs = HyperSpec(
    (a, a - Q(1, 2), b + g - 2 * a, c + 1, d, 2 * a - e),
    (b + 1, g, c) + delta(d + 2 * a - e + pt, 2),
    weight=ipd_numerator_poly(1, 2, d, e, 1 - 2 * a, h, p),
)
check("IV-25", lhs, front, rhs)

# ---- IV-26 ----
a, b, d, e, f, m = Q(1, 3), Q(1, 4), Q(-2), Q(5, 7), Q(2, 5), 1
lhs = HyperSpec(
    (a, b, d) + hp,
    (1 - b + a, e) + h,
    weight=shifted_pair_weight(kummer1_weight_poly(a, b, (f,), (m,))),
    argument=Q(-1),
)
front = ipd_prefactor(-a, d, e, h, p)
rhs = HyperSpec(
    (a / 2, (a + 1) / 2, d, 1 + a - e, f + m),
    (1 - b + a,) + delta(1 + d + a - e + pt, 2) + (f,),
    weight=ipd_numerator_poly(1, 2, d, e, -a, h, p),
)
check("IV-26", lhs, front, rhs)

# ---- IV-27 ----
a, b, c, d, e, k = Q(1, 3), Q(1, 4), Q(2, 7), Q(-2), Q(5, 7), 1
lhs = HyperSpec(
    (a, b, c, d) + hp,
    (1 + a - b, 1 + a - c, e) + h,
    weight=root_pair_weight(whipple_weight_poly(k, a, b, c)),
)
front = ipd_prefactor(-a, d, e, h, p)
rhs = HyperSpec(
    (a / 2, (a + 1) / 2, d, 1 + a - b - c - k, 1 + a - e),
    (1 - b + a, 1 - c + a) + delta(1 + d + a - e + pt, 2),
    weight=ipd_numerator_poly(1, 2, d, e, -a, h, p),
)
check("IV-27", lhs, front, rhs)

# ---- IV-28 ----
a, b, c, g, d, e, k = Q(1, 3), Q(1, 4), Q(2, 7), Q(3, 5), Q(-2), Q(5, 7), 1
lhs = HyperSpec(
    (a, b, c, d) + hp,
    (1 + a - b, 1 + a - c, e) + h,
    weight=root_pair_weight(whipple_weight_poly_ext(k, a, b, c, g)),
)
front = ipd_prefactor(-a, d, e, h, p)
rhs = HyperSpec(
    (a / 2, (a + 1) / 2, d, 1 + a - b - c - k, 1 + a - e, g + k),
    (1 - b + a, 1 - c + a) + delta(1 + d + a - e + pt, 2) + (g,),
    weight=ipd_numerator_poly(1, 2, d, e, -a, h, p),
)
check("IV-28", lhs, front, rhs)

# ---- IV-16 ----
A, B, f, m, n = Q(1, 3), Q(1, 4), Q(2, 5), 1, 2
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
check("IV-16", lhs, front, rhs)

# ---- IV-17 ----
A, B, C, k, n = Q(1, 3), Q(1, 4), Q(2, 7), 1, 2
D, E, F = Q(2, 5), Q(3, 8), Q(-n)
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
check("IV-17", lhs, front, rhs)

# IV-17 literal printed pair [1-rho over rho] at rational roots
A, B, C = Q(13, 6), Q(1, 2), Q(2)  # P_2 roots -2/3, -3/2
D, E, F = Q(2, 5), Q(3, 8), Q(-2)
r1, r2 = Q(-2, 3), Q(-3, 2)
pol = whipple_weight_poly(1, A, B, C)
assert pol(r1) == 0 and pol(r2) == 0, (pol(r1), pol(r2))
front = GammaProduct(
    1,
    GammaRatio(
        [1 + A - D, 1 + A - E, 1 + A - F, 1 + A - D - E - F],
        [1 + A, 1 + A - D - F, 1 + A - D - E, 1 + A - E - F],
    ),
)
rhs = HyperSpec(
    (1 + A - B - C - 1, D, E, F),
    (1 + A - B, 1 + A - C, D + E + F - A),
)
for tag, lowpair in (
    ("IV-17 pair [1-rho over -rho]", (-r1, -r2)),
    ("IV-17 pair [1-rho over rho] (printed)", (r1, r2)),
):
    lhs = HyperSpec(
        (A, 1 + A / 2, B, C, D, E, F, 1 - r1, 1 - r2),
        (A / 2, 1 + A - B, 1 + A - C, 1 + A - D, 1 + A - E, 1 + A - F)
        + lowpair,
    )
    check(tag, lhs, front, rhs)

# ---- IV-21 ----
a, b, f, m, c, n = Q(1, 3), Q(1, 4), Q(2, 5), 1, Q(2, 7), 3
lhs = HyperSpec(
    (a, 1 + a / 2, b, Q(-n)),
    (a / 2, 1 - b + a, c),
    weight=shifted_pair_weight(kummer1_weight_poly(a, b, (f,), (m,))),
    argument=Q(-1),
)
front = GammaProduct((c - a - n - 1) * poch(c - a, n - 1) / poch(c, n))
rhs = HyperSpec(
    (1 + a / 2, (1 + a) / 2, 1 - c + a, Q(-n), f + m),
    (1 - b + a, (2 - c + a - n) / 2, (3 - c + a - n) / 2, f),
)
check("IV-21", lhs, front, rhs)

# ---- IV-22 ----
a, b, c, g, k, n = Q(1, 3), Q(1, 4), Q(2, 7), Q(2, 5), 1, 3
lhs = HyperSpec(
    (a, 1 + a / 2, b, c, Q(-n)),
    (a / 2, 1 + a - b, 1 + a - c, g),
    weight=root_pair_weight(whipple_weight_poly(k, a, b, c)),
)
front = GammaProduct((g - a - n - 1) * poch(g - a, n - 1) / poch(g, n))
rhs = HyperSpec(
    (1 + a / 2, (1 + a) / 2, a - b - c - k + 1, Q(-n), 1 - g + a),
    (1 + a - b, 1 + a - c, (2 - g + a - n) / 2, (3 - g + a - n) / 2),
)
check("IV-22", lhs, front, rhs)

# ---- IV-23 ----
a, b, c, g, L, k, n = Q(1, 3), Q(1, 4), Q(2, 7), Q(3, 5), Q(2, 5), 1, 3
lhs = HyperSpec(
    (a, 1 + a / 2, b, c, Q(-n)),
    (a / 2, 1 + a - b, 1 + a - c, L),
    weight=root_pair_weight(whipple_weight_poly_ext(k, a, b, c, g)),
)
front = GammaProduct((L - a - n - 1) * poch(L - a, n - 1) / poch(L, n))
rhs = HyperSpec(
    (1 + a / 2, (1 + a) / 2, a - b - c - k + 1, Q(-n), 1 - L + a, g + k),
    (1 + a - b, 1 + a - c, (2 - L + a - n) / 2, (3 - L + a - n) / 2, g),
)
check("IV-23", lhs, front, rhs)

# ---- IV-24 printed vs derived first upper ----
A, B, C, G, k, n = Q(1, 3), Q(1, 4), Q(2, 7), Q(3, 5), 1, 2
D, E, F = Q(2, 5), Q(3, 8), Q(-n)
lhs = HyperSpec(
    (A, 1 + A / 2, B, C, D, E, F),
    (A / 2, 1 + A - B, 1 + A - C, 1 + A - D, 1 + A - E, 1 + A - F),
    weight=root_pair_weight(whipple_weight_poly_ext(k, A, B, C, G)),
)
front = GammaProduct(
    1,
    GammaRatio(
        [1 + A - D, 1 + A - E, 1 + A - F, 1 + A - D - E - F],
        [1 + A, 1 + A - D - F, 1 + A - D - E, 1 + A - E - F],
    ),
)
for tag, first in (
    ("IV-24 printed (no -k)", 1 + A - B - C),
    ("IV-24 derived (with -k)", 1 + A - B - C - k),
):
    rhs = HyperSpec(
        (first, D, E, F, G + k),
        (1 + A - B, 1 + A - C, D + E + F - A, G),
    )
    check(tag, lhs, front, rhs)
