"""Deterministic parameter sampling.

Every verification unit (rule, identity, sample index) derives its own
random stream from a blake2 hash of the seed and its labels, so runs are
reproducible unit-by-unit regardless of execution order or parallelism.
"""

import hashlib
import random

from .backend import MPQ


def seeded(seed, *labels):
    """An independent Random stream for (seed, labels)."""
    key = repr((int(seed),) + tuple(str(x) for x in labels)).encode()
    digest = hashlib.blake2b(key, digest_size=16).digest()
    return random.Random(int.from_bytes(digest, "big"))


def rand_q(rng, lo, hi, max_den=6, avoid_int=True):
    """Random rational in [lo, hi] with denominator at most max_den.

    avoid_int keeps the value away from integers, the usual way to dodge
    gamma poles and accidental termination in sampled parameters.
    """
    lo, hi = MPQ(lo), MPQ(hi)
    for _ in range(200):
        den = rng.randint(2 if avoid_int else 1, max_den)
        lo_n = (lo * den).numerator // (lo * den).denominator
        hi_n = (hi * den).numerator // (hi * den).denominator
        num = rng.randint(int(lo_n), int(hi_n))
        q = MPQ(num, den)
        if q < lo or q > hi:
            continue
        if avoid_int and q.denominator == 1:
            continue
        return q
    raise RuntimeError(f"no admissible rational in [{lo}, {hi}]")


def rand_distinct(rng, count, lo, hi, max_den=6, apart=None):
    """count random non-integer rationals, pairwise distinct; with
    apart set, also pairwise non-integer differences."""
    out = []
    for _ in range(500):
        q = rand_q(rng, lo, hi, max_den)
        if any(q == o for o in out):
            continue
        if apart and any((q - o).denominator == 1 for o in out):
            continue
        out.append(q)
        if len(out) == count:
            return out
    raise RuntimeError("could not draw distinct rationals")
