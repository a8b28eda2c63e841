"""Segmented exclusion sieve over candidate indices.

Bit x of an ExclusionSet is set iff some family of the pair class hits x,
which happens iff 6x + c1 or 6x + c2 is composite.  Prime pairs are read off
the clear bits.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from math import isqrt
from typing import Iterable, Literal, Optional

import numpy as np

from pairsieve.core import (
    Branch,
    PairClass,
    PairRecord,
    check_index,
    check_u64,
)
from pairsieve.families import derive_families

Mode = Literal["fast", "literal"]

DEFAULT_SEGMENT_SIZE = 1 << 16
MIN_SEGMENT_SIZE = 64


class ExclusionSet:
    """Packed bitset over x in [0, x_limit]; bit set means excluded."""

    __slots__ = ("pc", "x_limit", "bits")

    def __init__(self, pc: PairClass, x_limit: int, bits: np.ndarray):
        self.pc = pc
        self.x_limit = x_limit
        self.bits = bits

    @classmethod
    def from_bool(cls, pc: PairClass, flags: np.ndarray) -> "ExclusionSet":
        return cls(pc, len(flags) - 1, np.packbits(flags, bitorder="little"))

    def to_bool(self) -> np.ndarray:
        return np.unpackbits(self.bits, count=self.x_limit + 1, bitorder="little").astype(bool)

    def __contains__(self, x: int) -> bool:
        if not 0 <= x <= self.x_limit:
            return False
        return bool((self.bits[x >> 3] >> (x & 7)) & 1)

    def __len__(self) -> int:
        return int(np.count_nonzero(self.to_bool()))

    def excluded(self) -> np.ndarray:
        return np.flatnonzero(self.to_bool())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExclusionSet):
            return NotImplemented
        return (
            self.pc == other.pc
            and self.x_limit == other.x_limit
            and np.array_equal(self.bits, other.bits)
        )

    def __repr__(self) -> str:
        return f"ExclusionSet({self.pc}, x_limit={self.x_limit}, excluded={len(self)})"


def _base_primes(limit: int) -> np.ndarray:
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags)


def family_table(pc: PairClass, x_limit: int, mode: Mode = "fast") -> list[tuple[int, int]]:
    """(modulus, offset) for every family instance needed up to ``x_limit``.

    ``fast`` keeps prime moduli d <= sqrt(6 x_limit + c2); the smallest prime
    factor of any composite member is below that bound.  ``literal`` keeps
    every 6m -/+ 1 up to the generous bound of the reference listing.
    """
    fams = derive_families(pc)
    table = []
    if mode == "fast":
        bound = isqrt(6 * x_limit + pc.c2)
        for d in _base_primes(bound).tolist():
            if d < 5:
                continue
            branch = Branch.MINUS if d % 6 == 5 else Branch.PLUS
            m = (d - branch.value) // 6
            table.extend((d, f.offset(m)) for f in fams if f.branch is branch)
    elif mode == "literal":
        # smallest family value at n = 1 is 5m - 1 - a
        m_max = (x_limit + 1 + max(f.a for f in fams)) // 5
        for m in range(1, m_max + 1):
            table.extend((f.modulus(m), f.offset(m)) for f in fams)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return table


def _mark(flags: np.ndarray, lo: int, hi: int, table: list[tuple[int, int]]) -> None:
    seg = flags[lo : hi + 1]
    for d, off in table:
        # smallest n >= 1 with d*n + off >= lo
        n0 = max(1, -((off - lo) // d))
        start = d * n0 + off
        if start <= hi:
            seg[start - lo :: d] = True


def build_exclusions(
    pc: PairClass,
    x_limit: int,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    threads: Optional[int] = None,
    mode: Mode = "fast",
) -> ExclusionSet:
    check_index(x_limit)
    check_u64(6 * x_limit + pc.c2)
    if segment_size < MIN_SEGMENT_SIZE:
        raise ValueError(f"segment_size must be >= {MIN_SEGMENT_SIZE}, got {segment_size}")
    threads = threads or os.cpu_count() or 1
    table = family_table(pc, x_limit, mode)
    flags = np.zeros(x_limit + 1, dtype=bool)
    segments = [
        (lo, min(lo + segment_size - 1, x_limit))
        for lo in range(0, x_limit + 1, segment_size)
    ]
    if threads == 1 or len(segments) == 1:
        for lo, hi in segments:
            _mark(flags, lo, hi, table)
    else:
        # segments are disjoint slices of flags
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(lambda seg: _mark(flags, seg[0], seg[1], table), segments))
    return ExclusionSet.from_bool(pc, flags)


def complement(es: ExclusionSet, start: int = 0) -> np.ndarray:
    """Ascending indices in [start, x_limit] whose bit is clear."""
    flags = es.to_bool()
    return np.flatnonzero(~flags[start:]) + start


def _is_small_prime(v: int) -> bool:
    return v >= 2 and all(v % d for d in range(2, isqrt(v) + 1))


def _resolve_cases(k: int, cases: Optional[Iterable[PairClass]]) -> list[PairClass]:
    if cases is None:
        return PairClass.valid_cases(k)
    cases = list(cases)
    for pc in cases:
        if pc.k != k:
            raise ValueError(f"pair class {pc} does not match k={k}")
    return cases


def pair_starts(
    k: int,
    p_limit: int,
    cases: Optional[Iterable[PairClass]] = None,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    threads: Optional[int] = None,
    mode: Mode = "fast",
) -> np.ndarray:
    """Smaller members p of all prime pairs (p, p + 2k) with p <= p_limit, sorted."""
    if p_limit < 3:
        raise ValueError(f"p_limit must be >= 3, got {p_limit}")
    check_u64(p_limit + 2 * k)
    parts = []
    if _is_small_prime(3 + 2 * k):
        parts.append(np.array([3], dtype=np.int64))
    for pc in _resolve_cases(k, cases):
        x_limit = (p_limit - pc.c1) // 6
        if x_limit < 0:
            continue
        es = build_exclusions(pc, x_limit, segment_size, threads, mode)
        parts.append(6 * complement(es) + pc.c1)
    return np.sort(np.concatenate(parts)) if parts else np.empty(0, dtype=np.int64)


def enumerate_pairs(
    k: int,
    p_limit: int,
    cases: Optional[Iterable[PairClass]] = None,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    threads: Optional[int] = None,
    mode: Mode = "fast",
) -> list[PairRecord]:
    """Prime pairs (p, p + 2k), p <= p_limit, from the exclusion families.

    With ``cases=None`` every valid residue case of ``k`` is sieved and the
    results merged; the pair starting at 3 is checked separately.
    """
    starts = pair_starts(k, p_limit, cases, segment_size, threads, mode)
    return [PairRecord(p, p + 2 * k) for p in starts.tolist()]


def eratosthenes_starts(k: int, p_limit: int) -> np.ndarray:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if p_limit < 3:
        raise ValueError(f"p_limit must be >= 3, got {p_limit}")
    top = check_u64(p_limit + 2 * k)
    flags = np.ones(top + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for p in range(3, isqrt(top) + 1, 2):
        if flags[p]:
            flags[p * p :: 2 * p] = False
    both = flags[3 : p_limit + 1] & flags[3 + 2 * k : p_limit + 2 * k + 1]
    return np.flatnonzero(both) + 3


def eratosthenes_pairs(k: int, p_limit: int) -> list[PairRecord]:
    """Baseline: plain sieve to p_limit + 2k, then scan for gap-2k pairs."""
    return [PairRecord(p, p + 2 * k) for p in eratosthenes_starts(k, p_limit).tolist()]
