"""Ground-truth primality and brute-force pair enumeration.

Nothing here may import the family or sieve modules; the equivalence checks
are only meaningful if this path is independent of them.
"""

from __future__ import annotations

from math import isqrt

from pairsieve.core import PairRecord, check_u64

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)
_TRIAL_LIMIT = 47 * 47

# (bound, witnesses): the witness set is deterministic for all n < bound
_MR_WITNESSES = (
    (1_373_653, (2, 3)),
    (25_326_001, (2, 3, 5)),
    (3_215_031_751, (2, 3, 5, 7)),
    (2_152_302_898_747, (2, 3, 5, 7, 11)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (3_825_123_056_546_413_051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (1 << 64, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)


def is_prime_trial(v: int) -> bool:
    """Naive trial division by 2 and odd d <= sqrt(v)."""
    if v < 2:
        return False
    if v % 2 == 0:
        return v == 2
    for d in range(3, isqrt(v) + 1, 2):
        if v % d == 0:
            return False
    return True


def _strong_probable_prime(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(v: int) -> bool:
    """Deterministic primality for 0 <= v < 2**64."""
    if v < 2:
        return False
    check_u64(v)
    for p in _SMALL_PRIMES:
        if v % p == 0:
            return v == p
    if v < _TRIAL_LIMIT:
        return True
    d, s = v - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for bound, witnesses in _MR_WITNESSES:
        if v < bound:
            return all(_strong_probable_prime(v, d, s, a) for a in witnesses)
    raise AssertionError("unreachable for 64-bit input")


def oracle_pairs(gap: int, p_limit: int) -> list[PairRecord]:
    """All (p, p + gap) with p <= p_limit, p >= 3 and both prime."""
    if gap < 2 or gap % 2:
        raise ValueError(f"gap must be a positive even integer, got {gap}")
    if p_limit < 3:
        raise ValueError(f"p_limit must be >= 3, got {p_limit}")
    check_u64(p_limit + gap)
    return [
        PairRecord(p, p + gap)
        for p in range(3, p_limit + 1, 2)
        if is_prime(p) and is_prime(p + gap)
    ]
