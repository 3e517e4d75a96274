"""Unit-argument identities built on reflections that keep the argument.

Parameters mirror the printed displays: scalars a, b, c, d, e, g, h and
a pair block (f, m) (tuples where the display carries vectors).  Linear
balance constraints are solved for the last dependent parameter inside
the samplers, so drawn instances are admissible by construction.
"""

import math

from ..backend import MPQ
from ..charpoly import euler_weight_poly, ipd_numerator_poly
from ..gammafn import GammaProduct, GammaRatio, poch, poch_vec
from ..series import HyperSpec
from ..transforms import shifted_pair_weight
from .bases import reflect_pair_basis
from .common import (
    draw_block,
    draw_distinct,
    draw_q,
    kernel_ok,
    make_numeric_sampler,
    make_sampler,
    nonint,
    unit_pair_weight,
)
from .master import basis_from_transform
from .model import (
    Bound,
    Derivation,
    IdentityEntry,
    SecondaryCheck,
    ipd_prefactor,
    poch_ratio,
)


def _block_ok(a, b, c, m):
    """Nondegeneracy of the reflected pair block."""
    mt = sum(m)
    return (
        poch(1 + a + b - c, mt) != 0
        and poch(c - a - mt, mt) != 0
        and poch(c - b - mt, mt) != 0
    )


def _euler_pairs(P):
    return shifted_pair_weight(
        euler_weight_poly(P["a"], P["b"], P["c"], P["f"], P["m"])
    )


# --- I-1: master form, inner sums closed by the shifted-kernel rule ---


def _i1_lhs(P):
    upper = (P["a"], P["b"], P["d"])
    upper += tuple(fi + mi for fi, mi in zip(P["f"], P["m"]))
    upper += tuple(hi + pi for hi, pi in zip(P["h"], P["p"]))
    lower = (P["c"], P["e"]) + P["f"] + P["h"]
    return HyperSpec(upper, lower)


def _i1_rhs(P):
    a, b, c, d, e = P["a"], P["b"], P["c"], P["d"], P["e"]
    mt = sum(P["m"])
    lam = c - a - b - mt
    weight = ipd_numerator_poly(1, 0, d, e, lam, P["h"], P["p"])
    if mt:
        weight = weight * _euler_pairs(P)
    spec = HyperSpec((c - a - mt, c - b - mt, d), (c, e + lam), weight=weight)
    return ipd_prefactor(lam, d, e, P["h"], P["p"]), spec


def _i1_core_draw(rng):
    f, m = draw_block(rng)
    l = rng.randint(1, 2)
    h = tuple(draw_distinct(rng, l, "1/2", 3))
    p = tuple(rng.randint(1, 2) for _ in range(l))
    a, b = draw_distinct(rng, 2, "1/4", 2)
    return {"a": a, "b": b, "f": f, "m": m, "h": h, "p": p}


def _i1_draw(rng, n_lo=1, n_hi=5):
    P = _i1_core_draw(rng)
    P["c"] = draw_q(rng, "5/2", 5)
    P["e"] = draw_q(rng, "1/3", 3)
    P["d"] = -MPQ(rng.randint(n_lo, n_hi))
    lam = P["c"] - P["a"] - P["b"] - sum(P["m"])
    if not nonint(lam, P["e"], P["e"] + lam):
        return None
    if not _block_ok(P["a"], P["b"], P["c"], P["m"]):
        return None
    return P


def _i1_draw_numeric(rng):
    P = _i1_core_draw(rng)
    pt = sum(P["p"])
    P["d"] = draw_q(rng, "1/3", 1)
    P["e"] = P["d"] + pt + draw_q(rng, "1/3", 2)
    P["c"] = (
        P["a"] + P["b"] + P["d"] + sum(P["m"]) + pt + draw_q(rng, "1/2", 3)
    )
    lam = P["c"] - P["a"] - P["b"] - sum(P["m"])
    if not nonint(lam, P["d"], P["e"], P["e"] + lam, P["e"] - P["d"]):
        return None
    if not kernel_ok(P["d"], P["h"]):
        return None
    if not _block_ok(P["a"], P["b"], P["c"], P["m"]):
        return None
    return P


def _i1_bind(P):
    lam = P["c"] - P["a"] - P["b"] - sum(P["m"])
    return Bound(
        basis=reflect_pair_basis(P["a"], P["b"], P["c"], P["f"], P["m"]),
        a=(P["d"],) + tuple(hi + pi for hi, pi in zip(P["h"], P["p"])),
        b=(P["e"],) + P["h"],
        rule_params={
            "u": 1,
            "v": 0,
            "lam": lam,
            "d": P["d"],
            "e": P["e"],
            "h": P["h"],
            "p": P["p"],
        },
    )


# --- I-2: every pair absorbed into one characteristic block ---


def _i2_rhs(P):
    a, b, c, d, e = P["a"], P["b"], P["c"], P["d"], P["e"]
    st = sum(P["m"]) + sum(P["p"])
    lam2 = c - a - b - st
    weight = shifted_pair_weight(
        euler_weight_poly(a, b, c, P["f"] + P["h"], P["m"] + P["p"])
    )
    pref = GammaProduct(
        MPQ(1), GammaRatio([e, e + lam2 - d], [e - d, e + lam2])
    )
    spec = HyperSpec((c - a - st, c - b - st, d), (c, e + lam2), weight=weight)
    return pref, spec


def _i2_draw(rng, n_lo=1, n_hi=5):
    P = _i1_draw(rng, n_lo, n_hi)
    if P is None:
        return None
    lam2 = P["c"] - P["a"] - P["b"] - sum(P["m"]) - sum(P["p"])
    if not nonint(lam2, P["e"] + lam2):
        return None
    if not _block_ok(P["a"], P["b"], P["c"], P["m"] + P["p"]):
        return None
    return P


def _i2_draw_numeric(rng):
    P = _i1_core_draw(rng)
    P["d"] = draw_q(rng, "1/3", 1)
    P["e"] = P["d"] + draw_q(rng, "1/3", 2)
    P["c"] = (
        P["a"]
        + P["b"]
        + P["d"]
        + sum(P["m"])
        + sum(P["p"])
        + draw_q(rng, "1/2", 3)
    )
    lam2 = P["c"] - P["a"] - P["b"] - sum(P["m"]) - sum(P["p"])
    if not nonint(lam2, P["d"], P["e"], P["e"] + lam2, P["e"] - P["d"]):
        return None
    if not _block_ok(P["a"], P["b"], P["c"], P["m"] + P["p"]):
        return None
    return P


def _i2_bind(P):
    lam2 = P["c"] - P["a"] - P["b"] - sum(P["m"]) - sum(P["p"])
    return Bound(
        basis=reflect_pair_basis(
            P["a"], P["b"], P["c"], P["f"] + P["h"], P["m"] + P["p"]
        ),
        a=(P["d"],),
        b=(P["e"],),
        rule_params={"lam": lam2, "a2": P["d"], "b1": P["e"]},
    )


# --- I-3: e = d + 1, the kernel degenerates to a constant ---


def _i3_lhs(P):
    upper = (P["a"], P["b"], P["d"])
    upper += tuple(fi + mi for fi, mi in zip(P["f"], P["m"]))
    upper += tuple(hi + pi for hi, pi in zip(P["h"], P["p"]))
    lower = (P["c"], P["d"] + 1) + P["f"] + P["h"]
    return HyperSpec(upper, lower)


def _i3_rhs(P):
    a, b, c, d = P["a"], P["b"], P["c"], P["d"]
    mt = sum(P["m"])
    lam = c - a - b - mt
    pref = (
        MPQ(math.factorial(int(lam)))
        * poch_vec([hi - d for hi in P["h"]], P["p"])
        / (poch_vec(P["h"], P["p"]) * poch(d + 1, int(lam)))
    )
    weight = _euler_pairs(P) if mt else None
    spec = HyperSpec(
        (c - a - mt, c - b - mt, d), (c, d + 1 + lam), weight=weight
    )
    return pref, spec


def _i3_draw(rng, n0_lo=1, n0_hi=3):
    f, m = draw_block(rng)
    l = rng.randint(1, 2)
    h = tuple(draw_distinct(rng, l, "1/2", 3))
    p = tuple(rng.randint(1, 2) for _ in range(l))
    a = draw_q(rng, "1/4", 2)
    d = draw_q(rng, "1/3", 2)
    if any((hi - d).denominator == 1 for hi in h):
        return None
    n0 = max(sum(m), n0_lo) + rng.randint(0, max(0, n0_hi - n0_lo))
    lam = sum(p) + 1 + rng.randint(0, 3)
    n = n0 + lam
    b = -MPQ(n)
    c = a + sum(m) - n0
    P = {"a": a, "b": b, "c": c, "d": d, "f": f, "m": m, "h": h, "p": p}
    if not _block_ok(a, b, c, m):
        return None
    return P


def _i3_bind(P):
    lam = P["c"] - P["a"] - P["b"] - sum(P["m"])
    return Bound(
        basis=reflect_pair_basis(P["a"], P["b"], P["c"], P["f"], P["m"]),
        a=(P["d"],) + tuple(hi + pi for hi, pi in zip(P["h"], P["p"])),
        b=(P["d"] + 1,) + P["h"],
        rule_params={
            "u": 1,
            "v": 0,
            "lam": lam,
            "d": P["d"],
            "e": P["d"] + 1,
            "h": P["h"],
            "p": P["p"],
        },
    )


# --- I-4: r = l = 1, m = p = 1, both pairs linear-fractional ---


def _i4_lhs(P):
    return HyperSpec(
        (P["a"], P["b"], P["d"], P["h"] + 1, P["f"] + 1),
        (P["c"], P["e"], P["h"], P["f"]),
    )


def _i4_zeta(P):
    a, b, c, f = P["a"], P["b"], P["c"], P["f"]
    return (c - a - 1) * (c - b - 1) * f / ((c - a - b - 1) * f + a * b)


def _i4_rhs(P):
    a, b, c, d, e, h = (P[k] for k in "abcdeh")
    lam = c - a - b - 1
    s = e + lam - d - 1
    bracket = (e - d - 1) * h + lam * (h - d)
    xi = h + lam * (h - d) / (e - d - 1)
    pref = GammaProduct(bracket / h, GammaRatio([e, s], [s + d + 1, e - d]))
    spec = HyperSpec(
        (c - a - 1, c - b - 1, d),
        (c, e + lam),
        weight=unit_pair_weight(xi, _i4_zeta(P)),
    )
    return pref, spec


def _i4_draw(rng, n_lo=1, n_hi=5):
    a, b = draw_distinct(rng, 2, "1/4", 2)
    c = draw_q(rng, "5/2", 5)
    e = draw_q(rng, "1/3", 3)
    h = draw_q(rng, "1/2", 3)
    f = draw_q(rng, "1/3", 3)
    d = -MPQ(rng.randint(n_lo, n_hi))
    lam = c - a - b - 1
    P = {"a": a, "b": b, "c": c, "d": d, "e": e, "h": h, "f": f}
    if not nonint(lam, e, e + lam):
        return None
    if (c - a - b - 1) * f + a * b == 0 or (e - d - 1) * h + lam * (h - d) == 0:
        return None
    if h + lam * (h - d) / (e - d - 1) == 0:
        return None
    return P


def _i4_draw_numeric(rng):
    a, b = draw_distinct(rng, 2, "1/4", 2)
    h = draw_q(rng, "1/2", 3)
    f = draw_q(rng, "1/3", 3)
    d = draw_q(rng, "1/3", 1)
    e = d + 1 + draw_q(rng, "1/3", 2)
    c = a + b + d + 2 + draw_q(rng, "1/2", 3)
    lam = c - a - b - 1
    P = {"a": a, "b": b, "c": c, "d": d, "e": e, "h": h, "f": f}
    if not nonint(lam, d, e, e + lam, e - d) or not kernel_ok(d, (h,)):
        return None
    if (c - a - b - 1) * f + a * b == 0 or (e - d - 1) * h + lam * (h - d) == 0:
        return None
    if h + lam * (h - d) / (e - d - 1) == 0:
        return None
    return P


def _i4_bind(P):
    return Bound(
        basis=reflect_pair_basis(
            P["a"], P["b"], P["c"], (P["f"],), (1,)
        ),
        a=(P["d"], P["h"] + 1),
        b=(P["e"], P["h"]),
        rule_params={
            "u": 1,
            "v": 0,
            "lam": P["c"] - P["a"] - P["b"] - 1,
            "d": P["d"],
            "e": P["e"],
            "h": (P["h"],),
            "p": (1,),
        },
    )


# --- I-5: m = 0, one unit shift ---


def _i5_lhs(P):
    return HyperSpec(
        (P["a"], P["b"], P["d"], P["h"] + 1), (P["c"], P["e"], P["h"])
    )


def _i5_rhs(P):
    a, b, c, d, e, h = (P[k] for k in "abcdeh")
    lam = c - a - b
    s = e + lam - d - 1
    bracket = (e - d - 1) * h + lam * (h - d)
    xi = h + lam * (h - d) / (e - d - 1)
    pref = GammaProduct(
        bracket / ((e - d - 1) * h),
        GammaRatio([e, s], [s + d + 1, e - d - 1]),
    )
    spec = HyperSpec(
        (c - a, c - b, d), (c, e + lam), weight=unit_pair_weight(xi)
    )
    return pref, spec


def _i5_draw(rng, n_lo=1, n_hi=5):
    a, b = draw_distinct(rng, 2, "1/4", 2)
    c = draw_q(rng, "3/2", 4)
    e = draw_q(rng, "1/3", 3)
    h = draw_q(rng, "1/2", 3)
    d = -MPQ(rng.randint(n_lo, n_hi))
    lam = c - a - b
    P = {"a": a, "b": b, "c": c, "d": d, "e": e, "h": h}
    if not nonint(lam, e, e + lam, e - d - 1):
        return None
    if (e - d - 1) * h + lam * (h - d) == 0:
        return None
    if h + lam * (h - d) / (e - d - 1) == 0:
        return None
    return P


def _i5_draw_numeric(rng):
    a, b = draw_distinct(rng, 2, "1/4", 2)
    h = draw_q(rng, "1/2", 3)
    d = draw_q(rng, "1/3", 1)
    e = d + 1 + draw_q(rng, "1/3", 2)
    c = a + b + d + 1 + draw_q(rng, "1/2", 3)
    lam = c - a - b
    P = {"a": a, "b": b, "c": c, "d": d, "e": e, "h": h}
    if not nonint(lam, d, e, e + lam, e - d) or not kernel_ok(d, (h,)):
        return None
    if (e - d - 1) * h + lam * (h - d) == 0:
        return None
    if h + lam * (h - d) / (e - d - 1) == 0:
        return None
    return P


def _i5_bind(P):
    return Bound(
        basis=basis_from_transform(
            "euler_second", {"a": P["a"], "b": P["b"], "c": P["c"]}
        ),
        a=(P["d"], P["h"] + 1),
        b=(P["e"], P["h"]),
        rule_params={
            "u": 1,
            "v": 0,
            "lam": P["c"] - P["a"] - P["b"],
            "d": P["d"],
            "e": P["e"],
            "h": (P["h"],),
            "p": (1,),
        },
    )


# --- I-6: Saalschuetzian on both sides ---


def _i6_lhs(P):
    upper = (-MPQ(P["n"]), P["a"], P["b"], P["d"])
    upper += tuple(fi + mi for fi, mi in zip(P["f"], P["m"]))
    return HyperSpec(upper, (P["c"], P["g"], P["e"]) + P["f"])


def _i6_rhs(P):
    a, b, c, g, e, n = (P[k] for k in ("a", "b", "c", "g", "e", "n"))
    lam = c - a - b - sum(P["m"])
    pref = poch_ratio([g + lam, e + lam], [g, e], n)
    spec = HyperSpec(
        (-MPQ(n), a + lam, b + lam, P["d"]),
        (c, g + lam, e + lam),
        weight=_euler_pairs(P),
    )
    return pref, spec


def _i6_draw(rng, n_lo=1, n_hi=5):
    f, m = draw_block(rng)
    a, b = draw_distinct(rng, 2, "1/4", 2)
    g, e = draw_distinct(rng, 2, "1/3", 3)
    n = rng.randint(n_lo, n_hi)
    lam = MPQ(rng.randint(1, 4))
    c = a + b + sum(m) + lam
    d = g + e + n + lam - 1
    P = {
        "a": a, "b": b, "c": c, "d": d, "e": e, "g": g,
        "f": f, "m": m, "n": n,
    }
    if not _block_ok(a, b, c, m):
        return None
    return P


def _i6_bind(P):
    lam = P["c"] - P["a"] - P["b"] - sum(P["m"])
    return Bound(
        basis=reflect_pair_basis(P["a"], P["b"], P["c"], P["f"], P["m"]),
        a=(-MPQ(P["n"]), P["d"]),
        b=(P["g"], P["e"]),
        rule_params={
            "lam": lam, "n": P["n"], "b1": P["g"], "b2": P["e"],
        },
    )


# --- I-7: the r = m = 1 Saalschuetzian case ---


def _i7_lhs(P):
    return HyperSpec(
        (-MPQ(P["n"]), P["a"], P["b"], P["d"], P["f"] + 1),
        (P["c"], P["g"], P["e"], P["f"]),
    )


def _i7_rhs(P):
    a, b, c, g, e, n = (P[k] for k in ("a", "b", "c", "g", "e", "n"))
    lam = c - a - b - 1
    pref = poch_ratio([g + lam, e + lam], [g, e], n)
    spec = HyperSpec(
        (-MPQ(n), c - a - 1, c - b - 1, P["d"]),
        (c, g + lam, e + lam),
        weight=unit_pair_weight(_i4_zeta(P)),
    )
    return pref, spec


def _i7_draw(rng, n_lo=1, n_hi=5):
    a, b = draw_distinct(rng, 2, "1/4", 2)
    g, e = draw_distinct(rng, 2, "1/3", 3)
    f = draw_q(rng, "1/3", 3)
    n = rng.randint(n_lo, n_hi)
    lam = MPQ(rng.randint(1, 4))
    c = a + b + 1 + lam
    d = g + e + n + lam - 1
    P = {
        "a": a, "b": b, "c": c, "d": d, "e": e, "g": g, "f": f, "n": n,
    }
    if (c - a - b - 1) * f + a * b == 0:
        return None
    return P


def _i7_bind(P):
    return Bound(
        basis=reflect_pair_basis(P["a"], P["b"], P["c"], (P["f"],), (1,)),
        a=(-MPQ(P["n"]), P["d"]),
        b=(P["g"], P["e"]),
        rule_params={
            "lam": P["c"] - P["a"] - P["b"] - 1,
            "n": P["n"],
            "b1": P["g"],
            "b2": P["e"],
        },
    )


# --- I-8: nonterminating unit-shift 4F3 (n -> infinity in I-7) ---


def _i8_lhs(P):
    return HyperSpec(
        (P["a"], P["b"], P["d"], P["f"] + 1), (P["c"], P["e"], P["f"])
    )


def _i8_rhs(P):
    a, b, c, d, e = (P[k] for k in "abcde")
    lam = c - a - b - 1
    pref = GammaProduct(
        MPQ(1), GammaRatio([e, e + lam - d], [e - d, e + lam])
    )
    spec = HyperSpec(
        (c - a - 1, c - b - 1, d),
        (c, e + lam),
        weight=unit_pair_weight(_i4_zeta(P)),
    )
    return pref, spec


def _i8_draw(rng, n_lo=1, n_hi=5):
    a, b = draw_distinct(rng, 2, "1/4", 2)
    c = draw_q(rng, "5/2", 5)
    e = draw_q(rng, "1/3", 3)
    f = draw_q(rng, "1/3", 3)
    d = -MPQ(rng.randint(n_lo, n_hi))
    lam = c - a - b - 1
    P = {"a": a, "b": b, "c": c, "d": d, "e": e, "f": f}
    if not nonint(lam, e, e + lam):
        return None
    if (c - a - b - 1) * f + a * b == 0:
        return None
    return P


def _i8_draw_numeric(rng):
    a, b = draw_distinct(rng, 2, "1/4", 2)
    f = draw_q(rng, "1/3", 3)
    d = draw_q(rng, "1/3", 1)
    e = d + draw_q(rng, "1/3", 2)
    c = a + b + d + 1 + draw_q(rng, "1/2", 3)
    lam = c - a - b - 1
    P = {"a": a, "b": b, "c": c, "d": d, "e": e, "f": f}
    if not nonint(lam, d, e, e + lam, e - d):
        return None
    if (c - a - b - 1) * f + a * b == 0:
        return None
    return P


# --- I-9: terminating unit-shift 4F3 (a, c -> infinity in I-7) ---


def _i9_lhs(P):
    return HyperSpec(
        (-MPQ(P["n"]), P["d"], P["b"], P["f"] + 1),
        (P["g"], P["e"], P["f"]),
    )


def _i9_rhs(P):
    b, d, g, e, n = (P[k] for k in ("b", "d", "g", "e", "n"))
    zeta = P["f"] * (1 + b + d - n - g - e) / b
    pref = poch_ratio([g - d, e - d], [g, e], n)
    spec = HyperSpec(
        (-MPQ(n), d, 1 - n + d + b - g - e),
        (1 - g + d - n, 1 - e + d - n),
        weight=unit_pair_weight(zeta),
    )
    return pref, spec


def _i9_draw(rng, n_lo=1, n_hi=6):
    b = draw_q(rng, "1/4", 2)
    d = draw_q(rng, "1/3", 2)
    g, e = draw_distinct(rng, 2, "1/3", 3)
    f = draw_q(rng, "1/3", 3)
    n = rng.randint(n_lo, n_hi)
    P = {"b": b, "d": d, "e": e, "g": g, "f": f, "n": n}
    if not nonint(g - d, e - d, b + d - g - e):
        return None
    if 1 + b + d - n - g - e == 0:
        return None
    return P


# --- I-10: three-term relation for 2-balanced terminating 4F3 ---


def _i10_lhs(P):
    return HyperSpec(
        (-MPQ(P["n"]), P["d"], P["a"], P["b"]), (P["g"], P["e"], P["c"])
    )


def _i10_rhs(P):
    a, b, c, g, e, n = (P[k] for k in ("a", "b", "c", "g", "e", "n"))
    lam = c - a - b - 1
    zeta = (c - a - 1) * (c - b - 1) / lam
    pref = poch_ratio([g + lam, e + lam], [g, e], n)
    spec = HyperSpec(
        (-MPQ(n), P["d"], a + lam, b + lam),
        (g + lam, e + lam, c),
        weight=unit_pair_weight(zeta),
    )
    return pref, spec


def _i10_draw(rng, n_lo=1, n_hi=5):
    a, b = draw_distinct(rng, 2, "1/4", 2)
    g, e = draw_distinct(rng, 2, "1/3", 3)
    n = rng.randint(n_lo, n_hi)
    lam = MPQ(rng.randint(1, 4))
    c = a + b + 1 + lam
    d = g + e + n + lam - 1
    return {"a": a, "b": b, "c": c, "d": d, "e": e, "g": g, "n": n}


# --- I-11: truncated 4F3 summed as a Pochhammer product ---


def _i11_zeta(P):
    A, B, D, G, E = (P[k] for k in ("A", "B", "D", "G", "E"))
    den = A * B + A * D + B * D - (1 - G) * (1 - E)
    return A * B * D / den


def _i11_lhs(P):
    return HyperSpec(
        (P["A"], P["B"], P["D"]),
        (P["G"], P["E"]),
        weight=unit_pair_weight(_i11_zeta(P)),
    )


def _i11_rhs(P):
    n = P["n"]
    pref = poch_ratio(
        [P["A"] + 1, P["B"] + 1, P["D"] + 1], [P["G"], P["E"]], n
    ) / MPQ(math.factorial(n))
    return pref, HyperSpec((MPQ(0),), ())


def _i11_sampler(rng):
    for _ in range(200):
        A, B, D = draw_distinct(rng, 3, "1/4", 3)
        G = draw_q(rng, "1/3", 3)
        E = A + B + D + 2 - G
        n = rng.randint(1, 6)
        if E <= 0:
            continue
        if A * B + A * D + B * D == (1 - G) * (1 - E):
            continue
        return {"A": A, "B": B, "D": D, "G": G, "E": E, "n": n}
    raise RuntimeError("truncated-sum sampler failed")


# --- I-12: 2-balanced with one unit shift and a pair block ---


def _i12_lhs(P):
    upper = (-MPQ(P["n"]), P["a"], P["b"], P["d"], P["h"] + 1)
    upper += tuple(fi + mi for fi, mi in zip(P["f"], P["m"]))
    return HyperSpec(upper, (P["c"], P["g"], P["e"], P["h"]) + P["f"])


def _i12_bracket(P, lam):
    return P["n"] * P["d"] * (P["h"] + lam) + P["h"] * (
        P["g"] + lam - 1
    ) * (P["e"] + lam - 1)


def _i12_mu(P, lam):
    den = lam * (P["h"] - P["g"] + 1) - (P["g"] + P["n"] - 1) * (
        P["g"] - P["d"] - 1
    )
    return _i12_bracket(P, lam) / den


def _i12_rhs(P):
    a, b, c, g, e, n = (P[k] for k in ("a", "b", "c", "g", "e", "n"))
    lam = c - a - b - sum(P["m"])
    omega = (
        poch(g + lam, n - 1)
        * poch(e + lam, n - 1)
        * _i12_bracket(P, lam)
        / (P["h"] * poch(g, n) * poch(e, n))
    )
    weight = unit_pair_weight(_i12_mu(P, lam)) * _euler_pairs(P)
    spec = HyperSpec(
        (-MPQ(n), P["d"], a + lam, b + lam),
        (c, g + lam, e + lam),
        weight=weight,
    )
    return omega, spec


def _i12_draw(rng, n_lo=1, n_hi=5):
    f, m = draw_block(rng)
    a, b = draw_distinct(rng, 2, "1/4", 2)
    g, e, h = draw_distinct(rng, 3, "1/3", 3)
    n = rng.randint(n_lo, n_hi)
    lam = MPQ(rng.randint(1, 4))
    c = a + b + sum(m) + lam
    d = g + e + n + lam - 2
    P = {
        "a": a, "b": b, "c": c, "d": d, "e": e, "g": g, "h": h,
        "f": f, "m": m, "n": n,
    }
    if lam * (h - g + 1) == (g + n - 1) * (g - d - 1):
        return None
    if _i12_bracket(P, lam) == 0 or _i12_mu(P, lam) == 0:
        return None
    if not _block_ok(a, b, c, m):
        return None
    return P


def _i12_bind(P):
    lam = P["c"] - P["a"] - P["b"] - sum(P["m"])
    return Bound(
        basis=reflect_pair_basis(P["a"], P["b"], P["c"], P["f"], P["m"]),
        a=(-MPQ(P["n"]), P["d"], P["h"] + 1),
        b=(P["g"], P["e"], P["h"]),
        rule_params={
            "lam": lam,
            "n": P["n"],
            "b1": P["g"],
            "b2": P["e"],
            "b3": P["h"],
        },
    )


# --- I-13: the r = m = 1 case, plus its pair-free companion ---


def _i13_lhs(P):
    return HyperSpec(
        (-MPQ(P["n"]), P["d"], P["a"], P["b"], P["h"] + 1, P["f"] + 1),
        (P["g"], P["e"], P["c"], P["h"], P["f"]),
    )


def _i13_rhs(P):
    a, b, c, g, e, n = (P[k] for k in ("a", "b", "c", "g", "e", "n"))
    lam = c - a - b - 1
    omega = (
        poch(g + lam, n - 1)
        * poch(e + lam, n - 1)
        * _i12_bracket(P, lam)
        / (P["h"] * poch(g, n) * poch(e, n))
    )
    weight = unit_pair_weight(_i12_mu(P, lam), _i4_zeta(P))
    spec = HyperSpec(
        (-MPQ(n), P["d"], a + lam, b + lam),
        (g + lam, e + lam, c),
        weight=weight,
    )
    return omega, spec


def _i13_draw(rng, n_lo=1, n_hi=5):
    P = _i12_draw(rng, n_lo, n_hi)
    if P is None or sum(P["m"]) != 1:
        return None
    P["f"] = P["f"][0]
    del P["m"]
    if (P["c"] - P["a"] - P["b"] - 1) * P["f"] + P["a"] * P["b"] == 0:
        return None
    return P


def _i13_bind(P):
    lam = P["c"] - P["a"] - P["b"] - 1
    return Bound(
        basis=reflect_pair_basis(P["a"], P["b"], P["c"], (P["f"],), (1,)),
        a=(-MPQ(P["n"]), P["d"], P["h"] + 1),
        b=(P["g"], P["e"], P["h"]),
        rule_params={
            "lam": lam,
            "n": P["n"],
            "b1": P["g"],
            "b2": P["e"],
            "b3": P["h"],
        },
    )


def _i13_sec_lhs(P):
    return HyperSpec(
        (-MPQ(P["n"]), P["d"], P["a"], P["b"], P["h"] + 1),
        (P["g"], P["e"], P["c"], P["h"]),
    )


def _i13_sec_rhs(P):
    a, b, c, g, e, n = (P[k] for k in ("a", "b", "c", "g", "e", "n"))
    lam = c - a - b - 1
    omega = (
        poch(g + lam, n - 1)
        * poch(e + lam, n - 1)
        * _i12_bracket(P, lam)
        / (P["h"] * poch(g, n) * poch(e, n))
    )
    zeta_star = (c - a - 1) * (c - b - 1) / lam
    weight = unit_pair_weight(_i12_mu(P, lam), zeta_star)
    spec = HyperSpec(
        (-MPQ(n), P["d"], a + lam, b + lam),
        (g + lam, e + lam, c),
        weight=weight,
    )
    return omega, spec


# --- I-14: iterable 5F4 with two unit shifts (a, c -> infinity) ---


def _i14_zeta(P):
    return P["f"] * (2 + P["b"] + P["d"] - P["n"] - P["g"] - P["e"]) / P["b"]


def _i14_bracket(P):
    d, e, g, h, n = (P[k] for k in ("d", "e", "g", "h", "n"))
    return n * P["d"] * (2 + h + d - n - e - g) + h * (1 + d - n - e) * (
        1 + d - n - g
    )


def _i14_mu(P):
    d, e, g, h, n = (P[k] for k in ("d", "e", "g", "h", "n"))
    den = (2 + d - n - e - g) * (h - g + 1) - (g + n - 1) * (g - d - 1)
    return _i14_bracket(P) / den


def _i14_omega(P):
    d, e, g, n = (P[k] for k in ("d", "e", "g", "n"))
    return (
        poch(2 + d - n - e, n - 1)
        * poch(2 + d - n - g, n - 1)
        * _i14_bracket(P)
        / (P["h"] * poch(g, n) * poch(e, n))
    )


def _i14_lhs(P):
    return HyperSpec(
        (-MPQ(P["n"]), P["b"], P["d"], P["h"] + 1, P["f"] + 1),
        (P["g"], P["e"], P["h"], P["f"]),
    )


def _i14_rhs(P):
    b, d, e, g, n = (P[k] for k in ("b", "d", "e", "g", "n"))
    spec = HyperSpec(
        (-MPQ(n), d, 2 - g - e - n + d + b),
        (2 - g - n + d, 2 - e - n + d),
        weight=unit_pair_weight(_i14_mu(P), _i14_zeta(P)),
    )
    return _i14_omega(P), spec


def _i14_invol(P):
    """The parameter map sending the identity to itself."""
    b, d, e, g, n = (P[k] for k in ("b", "d", "e", "g", "n"))
    return {
        "n": n,
        "d": d,
        "b": 2 - g - e - n + d + b,
        "g": 2 - g - n + d,
        "e": 2 - e - n + d,
        "h": _i14_mu(P),
        "f": _i14_zeta(P),
    }


def _i14_draw(rng, n_lo=1, n_hi=5):
    b = draw_q(rng, "1/4", 2)
    d = draw_q(rng, "1/3", 2)
    g, e, h = draw_distinct(rng, 3, "1/3", 3)
    f = draw_q(rng, "1/3", 3)
    n = rng.randint(n_lo, n_hi)
    P = {"b": b, "d": d, "e": e, "g": g, "h": h, "f": f, "n": n}
    if not nonint(g - d, e - d, g + e - d - b):
        return None
    if (2 + d - n - e - g) * (h - g + 1) == (g + n - 1) * (g - d - 1):
        return None
    if _i14_bracket(P) == 0 or _i14_mu(P) == 0 or _i14_zeta(P) == 0:
        return None
    return P


def _i14_sec_sampler(rng):
    base = ENTRY_I14.sampler
    for _ in range(100):
        P = base(rng)
        Q = _i14_invol(P)
        if Q["h"] == 0 or Q["f"] == 0 or Q["b"] == 0:
            continue
        try:
            lhs = _i14_lhs(Q)
        except (ZeroDivisionError, ValueError):
            continue
        from ..summations import spec_is_admissible

        if not spec_is_admissible(lhs):
            continue
        return P
    raise RuntimeError("self-inverse sampler failed")


def _i14_sec_lhs(P):
    return _i14_lhs(_i14_invol(P))


def _i14_sec_rhs(P):
    return MPQ(1) / _i14_omega(P), _i14_lhs(P)


# --- I-15: contiguous 2-balanced evaluation under reflection ---


def _i15_lhs(P):
    upper = (-MPQ(P["n"]), P["a"], P["b"], P["d"])
    upper += tuple(fi + mi for fi, mi in zip(P["f"], P["m"]))
    return HyperSpec(upper, (P["c"], P["g"], P["e"]) + P["f"])


def _i15_rhs(P):
    a, b, c, g, e, n, d = (P[k] for k in ("a", "b", "c", "g", "e", "n", "d"))
    lam = c - a - b - sum(P["m"])
    num = n * d + (g + lam - 1) * (e + lam - 1)
    pref = (
        poch(g + lam, n - 1)
        * poch(e + lam, n - 1)
        * num
        / (poch(g, n) * poch(e, n))
    )
    nu = num / (g + e + n - d + 2 * (lam - 1))
    weight = unit_pair_weight(nu) * _euler_pairs(P)
    spec = HyperSpec(
        (-MPQ(n), a + lam, b + lam, d),
        (c, g + lam, e + lam),
        weight=weight,
    )
    return pref, spec


def _i15_draw(rng, n_lo=1, n_hi=5):
    f, m = draw_block(rng)
    a, b = draw_distinct(rng, 2, "1/4", 2)
    g, e = draw_distinct(rng, 2, "1/3", 3)
    n = rng.randint(n_lo, n_hi)
    lam = MPQ(rng.randint(1, 4))
    c = a + b + sum(m) + lam
    d = g + e + n + lam - 2
    P = {
        "a": a, "b": b, "c": c, "d": d, "e": e, "g": g,
        "f": f, "m": m, "n": n,
    }
    num = n * d + (g + lam - 1) * (e + lam - 1)
    if num == 0 or g + e + n - d + 2 * (lam - 1) == 0:
        return None
    if not _block_ok(a, b, c, m):
        return None
    return P


def _i15_bind(P):
    lam = P["c"] - P["a"] - P["b"] - sum(P["m"])
    return Bound(
        basis=reflect_pair_basis(P["a"], P["b"], P["c"], P["f"], P["m"]),
        a=(-MPQ(P["n"]), P["d"]),
        b=(P["g"], P["e"]),
        rule_params={
            "lam": lam, "n": P["n"], "b1": P["g"], "b2": P["e"],
        },
    )


# --- I-16: Bailey's 2-balanced evaluation under reflection ---


def _i16_lhs(P):
    a, b, al, n = P["a"], P["b"], P["alpha"], P["n"]
    lam = P["c"] - a - b - sum(P["m"])
    upper = (-MPQ(n), a, b, al)
    upper += tuple(fi + mi for fi, mi in zip(P["f"], P["m"]))
    lower = (P["c"], 1 + lam + al, 1 - 2 * lam - n) + P["f"]
    return HyperSpec(upper, lower)


def _i16_rhs(P):
    a, b, c, al, n = P["a"], P["b"], P["c"], P["alpha"], P["n"]
    lam = c - a - b - sum(P["m"])
    g_const = -(
        poch(al + 2 * lam, n)
        * poch(lam, n)
        * (-al - 2 * lam - 2 * n)
    ) / (
        poch(2 * lam, n) * poch(1 + lam + al, n) * (al + 2 * lam)
    )
    spec = HyperSpec(
        (-MPQ(n), a + lam, b + lam, al, 1 - al - 2 * lam - 2 * n),
        (c, 1 - lam - n, al + 2 * lam + 1, -al - 2 * lam - 2 * n),
        weight=_euler_pairs(P),
    )
    return g_const, spec


def _i16_draw(rng, n_lo=1, n_hi=5):
    f, m = draw_block(rng)
    a, b = draw_distinct(rng, 2, "1/4", 2)
    al = draw_q(rng, "1/4", 3)
    n = rng.randint(n_lo, n_hi)
    lam = MPQ(rng.randint(1, 3))
    c = a + b + sum(m) + lam
    P = {
        "a": a, "b": b, "c": c, "alpha": al, "f": f, "m": m, "n": n,
    }
    if not _block_ok(a, b, c, m):
        return None
    return P


def _i16_bind(P):
    lam = P["c"] - P["a"] - P["b"] - sum(P["m"])
    return Bound(
        basis=reflect_pair_basis(P["a"], P["b"], P["c"], P["f"], P["m"]),
        a=(-MPQ(P["n"]), P["alpha"]),
        b=(1 + lam + P["alpha"], 1 - 2 * lam - P["n"]),
        rule_params={"lam": lam, "n": P["n"], "alpha": P["alpha"]},
    )


def _sampler(draw, lhs, rhs, **kw):
    return make_sampler(draw, lhs, rhs, **kw)


def _deep(draw, lhs, rhs, lo, hi):
    return make_sampler(lambda rng: draw(rng, lo, hi), lhs, rhs)


ENTRY_I14 = IdentityEntry(
    id="I-14",
    case="I",
    anchor="iterable-5f4-two-unit-shifts",
    title="Self-reciprocal terminating 5F4 with two unit shifts",
    sampler=_sampler(_i14_draw, _i14_lhs, _i14_rhs),
    lhs=_i14_lhs,
    rhs=_i14_rhs,
    constraints=("b != 0", "h != 0", "mu and zeta finite and nonzero"),
    secondary=(
        SecondaryCheck(
            label="self-inverse",
            sampler=_i14_sec_sampler,
            lhs=_i14_sec_lhs,
            rhs=_i14_sec_rhs,
        ),
    ),
    notes="Applying the map twice returns the original parameters.",
)


ENTRIES = (
    IdentityEntry(
        id="I-1",
        case="I",
        anchor="kernel-weighted-reflection",
        title="Reflection with pair block against the shifted-kernel weight",
        sampler=_sampler(_i1_draw, _i1_lhs, _i1_rhs),
        lhs=_i1_lhs,
        rhs=_i1_rhs,
        constraints=(
            "(1+a+b-c)_m != 0",
            "(c-a-m)_m != 0",
            "(c-b-m)_m != 0",
            "Re(e-d-p) > 0",
            "Re(c+e-a-b-d-m-p) > 0",
        ),
        derivation=Derivation(
            transform="miller_paris_second",
            rule="ipd10",
            binder=_i1_bind,
        ),
        closure_sampler=_deep(_i1_draw, _i1_lhs, _i1_rhs, 9, 12),
        numeric_sampler=make_numeric_sampler(
            _i1_draw_numeric, _i1_lhs, _i1_rhs
        ),
    ),
    IdentityEntry(
        id="I-2",
        case="I",
        anchor="all-pairs-reflection",
        title="Reflection absorbing every pair into one characteristic block",
        sampler=_sampler(_i2_draw, _i1_lhs, _i2_rhs),
        lhs=_i1_lhs,
        rhs=_i2_rhs,
        constraints=(
            "Re(e-d) > 0",
            "Re(c+e-a-b-d-m-p) > 0",
            "(c-a-m-p)_{m+p} != 0",
            "(c-b-m-p)_{m+p} != 0",
        ),
        derivation=Derivation(
            transform="miller_paris_second",
            rule="gauss",
            binder=_i2_bind,
            note="both pair blocks ride in the reflected weight",
        ),
        closure_sampler=_deep(_i2_draw, _i1_lhs, _i2_rhs, 9, 12),
        numeric_sampler=make_numeric_sampler(
            _i2_draw_numeric, _i1_lhs, _i2_rhs
        ),
    ),
    IdentityEntry(
        id="I-3",
        case="I",
        anchor="integral-difference-collapse",
        title="Evaluation with integral parameter differences and pair block",
        sampler=_sampler(_i3_draw, _i3_lhs, _i3_rhs),
        lhs=_i3_lhs,
        rhs=_i3_rhs,
        constraints=(
            "e = d + 1",
            "c - a - m a negative integer",
            "lam = c - a - b - m an integer exceeding p",
        ),
        derivation=Derivation(
            transform="miller_paris_second",
            rule="ipd10",
            binder=_i3_bind,
            note="kernel degenerates to a constant at e = d + 1",
        ),
        closure_sampler=_deep(_i3_draw, _i3_lhs, _i3_rhs, 9, 11),
    ),
    IdentityEntry(
        id="I-4",
        case="I",
        anchor="5f4-two-unit-shifts",
        title="5F4 with two unit shifts, both pairs linear-fractional",
        sampler=_sampler(_i4_draw, _i4_lhs, _i4_rhs),
        lhs=_i4_lhs,
        rhs=_i4_rhs,
        constraints=("c-a-1 != 0", "c-b-1 != 0", "e-d-1 != 0"),
        derivation=Derivation(
            transform="miller_paris_second",
            rule="ipd10",
            binder=_i4_bind,
        ),
        closure_sampler=_deep(_i4_draw, _i4_lhs, _i4_rhs, 9, 12),
        numeric_sampler=make_numeric_sampler(
            _i4_draw_numeric, _i4_lhs, _i4_rhs
        ),
    ),
    IdentityEntry(
        id="I-5",
        case="I",
        anchor="4f3-unit-shift",
        title="4F3 with one unit shift under plain reflection",
        sampler=_sampler(_i5_draw, _i5_lhs, _i5_rhs),
        lhs=_i5_lhs,
        rhs=_i5_rhs,
        constraints=("e-d-1 != 0",),
        derivation=Derivation(
            transform="euler_second",
            rule="ipd10",
            binder=_i5_bind,
        ),
        closure_sampler=_deep(_i5_draw, _i5_lhs, _i5_rhs, 9, 12),
        numeric_sampler=make_numeric_sampler(
            _i5_draw_numeric, _i5_lhs, _i5_rhs
        ),
    ),
    IdentityEntry(
        id="I-6",
        case="I",
        anchor="saalschutzian-pair-reflection",
        title="Saalschuetzian reflection with a pair block",
        sampler=_sampler(_i6_draw, _i6_lhs, _i6_rhs),
        lhs=_i6_lhs,
        rhs=_i6_rhs,
        constraints=(
            "g+e+n-d+lam = 1 with lam = c-a-b-m a positive integer",
        ),
        derivation=Derivation(
            transform="miller_paris_second",
            rule="saalschutz",
            binder=_i6_bind,
        ),
        closure_sampler=_deep(_i6_draw, _i6_lhs, _i6_rhs, 9, 12),
    ),
    IdentityEntry(
        id="I-7",
        case="I",
        anchor="saalschutzian-5f4",
        title="Saalschuetzian 5F4 with one unit-shift pair",
        sampler=_sampler(_i7_draw, _i7_lhs, _i7_rhs),
        lhs=_i7_lhs,
        rhs=_i7_rhs,
        constraints=("g+e+n-d+c-a-b = 2",),
        derivation=Derivation(
            transform="miller_paris_second",
            rule="saalschutz",
            binder=_i7_bind,
        ),
        closure_sampler=_deep(_i7_draw, _i7_lhs, _i7_rhs, 9, 12),
    ),
    IdentityEntry(
        id="I-8",
        case="I",
        anchor="4f3-unit-shift-nonterminating",
        title="Nonterminating 4F3 unit-shift transformation",
        sampler=_sampler(_i8_draw, _i8_lhs, _i8_rhs),
        lhs=_i8_lhs,
        rhs=_i8_rhs,
        constraints=("Re(e-d) > 0", "Re(e+c-a-b-1-d) > 0"),
        numeric_sampler=make_numeric_sampler(
            _i8_draw_numeric, _i8_lhs, _i8_rhs
        ),
        notes="Tail limit of the Saalschuetzian 5F4; no expansion record.",
    ),
    IdentityEntry(
        id="I-9",
        case="I",
        anchor="terminating-4f3-unit-shift",
        title="Terminating 4F3 unit-shift transformation",
        sampler=_sampler(_i9_draw, _i9_lhs, _i9_rhs),
        lhs=_i9_lhs,
        rhs=_i9_rhs,
        notes="Upper-parameter limit of the Saalschuetzian 5F4.",
    ),
    IdentityEntry(
        id="I-10",
        case="I",
        anchor="two-balanced-4f3-to-5f4",
        title="Three-term relation for 2-balanced terminating 4F3",
        sampler=_sampler(_i10_draw, _i10_lhs, _i10_rhs),
        lhs=_i10_lhs,
        rhs=_i10_rhs,
        constraints=("g+e+c+n-a-b-d = 2",),
        notes="Pair-parameter limit of the Saalschuetzian 5F4.",
    ),
    IdentityEntry(
        id="I-11",
        case="I",
        anchor="truncated-4f3-product",
        title="Truncated 4F3 evaluated as a Pochhammer product",
        sampler=_i11_sampler,
        lhs=_i11_lhs,
        rhs=_i11_rhs,
        constraints=(
            "e1(A,B,D) + e1(1-G,1-E) = 0",
            "pair value from symmetric functions of the parameters",
        ),
        truncate=lambda P: P["n"],
        notes="Stated for the partial sum through the n-th term.",
    ),
    IdentityEntry(
        id="I-12",
        case="I",
        anchor="two-balanced-unit-shift-reflection",
        title="2-balanced reflection with one unit shift and pair block",
        sampler=_sampler(_i12_draw, _i12_lhs, _i12_rhs),
        lhs=_i12_lhs,
        rhs=_i12_rhs,
        constraints=(
            "g+e+n-d+lam = 2 with lam = c-a-b-m a positive integer",
        ),
        derivation=Derivation(
            transform="miller_paris_second",
            rule="rakha_rathie",
            binder=_i12_bind,
        ),
        closure_sampler=_deep(_i12_draw, _i12_lhs, _i12_rhs, 9, 12),
    ),
    IdentityEntry(
        id="I-13",
        case="I",
        anchor="two-balanced-6f5",
        title="2-balanced 6F5 with unit shift and linear-fractional pair",
        sampler=_sampler(_i13_draw, _i13_lhs, _i13_rhs),
        lhs=_i13_lhs,
        rhs=_i13_rhs,
        constraints=("g+e+n-d+lam = 2",),
        derivation=Derivation(
            transform="miller_paris_second",
            rule="rakha_rathie",
            binder=_i13_bind,
        ),
        closure_sampler=_deep(_i13_draw, _i13_lhs, _i13_rhs, 9, 12),
        secondary=(
            SecondaryCheck(
                label="pair-free-limit",
                sampler=_sampler(_i13_draw, _i13_sec_lhs, _i13_sec_rhs),
                lhs=_i13_sec_lhs,
                rhs=_i13_sec_rhs,
            ),
        ),
    ),
    ENTRY_I14,
    IdentityEntry(
        id="I-15",
        case="I",
        anchor="contiguous-saalschutz-reflection",
        title="Reflection closed by the contiguous 2-balanced evaluation",
        sampler=_sampler(_i15_draw, _i15_lhs, _i15_rhs),
        lhs=_i15_lhs,
        rhs=_i15_rhs,
        constraints=("g+e+n+lam-d = 2",),
        derivation=Derivation(
            transform="miller_paris_second",
            rule="kim_rathie",
            binder=_i15_bind,
        ),
        closure_sampler=_deep(_i15_draw, _i15_lhs, _i15_rhs, 9, 12),
    ),
    IdentityEntry(
        id="I-16",
        case="I",
        anchor="bailey-two-balanced-reflection",
        title="Reflection closed by Bailey's 2-balanced evaluation",
        sampler=_sampler(_i16_draw, _i16_lhs, _i16_rhs),
        lhs=_i16_lhs,
        rhs=_i16_rhs,
        constraints=("linked lower parameters 1+lam+alpha, 1-2lam-n",),
        derivation=Derivation(
            transform="miller_paris_second",
            rule="bailey_2balanced",
            binder=_i16_bind,
        ),
        closure_sampler=_deep(_i16_draw, _i16_lhs, _i16_rhs, 9, 12),
    ),
)
