"""Probe part 4: independent float re-summation of the extension probes.

Direct numpy summation with integral tail correction; no shared code with
the Levin path.  Decides whether the part-3 gaps are real or artifacts.
"""

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
    whipple_weight_poly,
    whipple_weight_poly_ext,
)
from hyperforge.transforms import (
    shifted_pair_weight,
    root_pair_weight,
    _centered_square_weight,
)

Q = MPQ
CHUNK = 1_000_000


def indep(spec, n_max=30_000_000, rel_tail=1e-10):
    """Direct float summation of the series with a tail estimate.

    Returns (value, tail_bound): after the final partial sum the remaining
    tail is approximated by t_N * N / s for x = 1 (integral comparison) and
    by t_N / 2 for x = -1 (alternating midpoint).
    """
    up = np.array([float(a) for a in spec.upper])
    lo = np.array([float(b) for b in spec.lower])
    x = float(spec.argument)
    wc = (
        np.array([float(c) for c in reversed(spec.weight.coeffs)])
        if spec.weight is not None
        else None
    )
    s_excess = float(
        sum(MPQ(b) for b in spec.lower)
        - sum(MPQ(a) for a in spec.upper)
    )
    g = 0 if spec.weight is None else len(spec.weight.coeffs) - 1
    total = 0.0
    base = 1.0  # unweighted term at current n
    n0 = 0
    last_term = None
    while n0 < n_max:
        n = np.arange(n0, n0 + CHUNK, dtype=np.float64)
        ratios = np.full(CHUNK, x)
        for a in up:
            ratios *= a + n
        for b in lo:
            ratios /= b + n
        ratios /= n + 1.0
        terms = base * np.cumprod(ratios)
        base = terms[-1]
        idx = n + 1.0
        if wc is not None:
            wterms = terms * np.polyval(wc, idx)
        else:
            wterms = terms
        if n0 == 0:
            w0 = float(spec.weight_at(0))
            total += w0
        total += float(np.sum(wterms))
        last_term = float(wterms[-1])
        n0 += CHUNK
        tail = (
            abs(last_term) * n0 / max(s_excess - g, 0.05)
            if x > 0
            else abs(last_term) / 2
        )
        if tail <= rel_tail * max(1.0, abs(total)):
            break
    if x > 0:
        total += last_term * n0 / (s_excess - g)
    else:
        total += last_term / 2
    return total, tail


def compare(tag, lhs_spec, front, rhs_spec):
    li, lt = indep(lhs_spec)
    if rhs_spec.termination_index() is not None:
        rv = float(eval_terminating(rhs_spec, rhs_spec.argument))
        rt = 0.0
    else:
        rv, rt = indep(rhs_spec)
    with working_dps(30):
        fr = float(prefactor_numeric(front))
        ours_l = float(eval_convergent(lhs_spec, lhs_spec.argument, 25))
        ours_r = (
            float(eval_convergent(rhs_spec, rhs_spec.argument, 25))
            if rhs_spec.termination_index() is None
            else rv
        )
    gap_indep = (li - fr * rv) / max(1.0, abs(li))
    print(
        f"{tag}: indep gap={gap_indep:.3e} (tails {lt:.1e}/{rt:.1e})  "
        f"levin-vs-indep lhs={abs(ours_l-li)/max(1,abs(li)):.1e} "
        f"rhs={abs(ours_r-rv)/max(1,abs(rv)):.1e}"
    )


# --- control group: part-3 passers, to validate indep itself ---
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
    (1 + A - B - C, D, E, F), (1 + A - B, 1 + A - C, D + E + F - A)
)
compare("ctrl IV-3 ext", lhs, front, rhs)

# --- IV-1 ext ---
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
compare("IV-1 ext", lhs, front, rhs)

# --- IV-2 ext ---
A = Q(1, 3)
B = A + Q(3, 2)
C, D, E = Q(1, 20), Q(1, 24), Q(1, 28)
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
compare("IV-2 ext", lhs, front, rhs)

# --- IV-5 ext ---
A, B, C, D, kap = Q(1, 3), Q(1, 4), Q(2, 7), Q(2, 5), Q(5, 3)
lhs = HyperSpec(
    (A, 1 + A / 2, B, C, D), (A / 2, kap - B, kap - C, kap - D)
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
compare("IV-5 ext", lhs, front, rhs)

# --- IV-9 numeric ---
A, B, C, D, E, F = Q(3, 2), Q(1, 5), Q(2, 7), Q(2, 5), Q(3, 8), Q(5, 9)
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
compare("IV-9 numeric", lhs, front, rhs)

# --- IV-16 ext ---
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
compare("IV-16 ext", lhs, front, rhs)

# --- IV-24 ext ---
A, B, C, G, k = Q(3, 2), Q(1, 4), Q(2, 7), Q(5, 9), 1
D, E, F = Q(1, 5), Q(1, 6), Q(1, 7)
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
rhs = HyperSpec(
    (1 + A - B - C - k, D, E, F, G + k),
    (1 + A - B, 1 + A - C, D + E + F - A, G),
)
compare("IV-24 ext", lhs, front, rhs)

# --- IV-26 ext ---
a, b, d, e = Q(1, 3), Q(-3, 4), Q(-23, 10), Q(5, 7)
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
compare("IV-26 ext", lhs, front, rhs)

# --- IV-27 ext ---
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
compare("IV-27 ext", lhs, front, rhs)
