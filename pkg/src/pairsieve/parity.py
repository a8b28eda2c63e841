"""Parity balance of the twin-prime complement below x_max(n) = 6n^2 + 2n - 1.

x_max(n) is the largest diagonal (m = n) family value at m = n.  The
statistic (even - odd) / n counts the unexcluded indices in [1, x_max(n)]
by parity.  The domain starts at 1, as the reference listing does.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable, NamedTuple, Optional

import numpy as np

from pairsieve.core import Case, PairClass
from pairsieve.families import derive_families
from pairsieve.sieve import DEFAULT_SEGMENT_SIZE, build_exclusions, complement

TWIN = PairClass(1, Case.A)
CSV_HEADER = ("n", "x_max", "complement_size", "even", "odd", "ratio")


def x_max(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return 6 * n * n + 2 * n - 1


@dataclass(frozen=True)
class ParityReport:
    n: int
    x_max: int
    complement_size: int
    even_count: int
    odd_count: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.even_count - self.odd_count, self.n)

    @property
    def ratio_decimal(self) -> str:
        return f"{float(self.ratio):.6f}"

    def csv_row(self) -> tuple:
        return (
            self.n,
            self.x_max,
            self.complement_size,
            self.even_count,
            self.odd_count,
            self.ratio_decimal,
        )


def _report(n: int, indices: np.ndarray) -> ParityReport:
    even = int(np.count_nonzero(indices % 2 == 0))
    return ParityReport(n, x_max(n), len(indices), even, len(indices) - even)


def parity_complement(n: int, segment_size: int = DEFAULT_SEGMENT_SIZE,
                      threads: Optional[int] = None) -> np.ndarray:
    es = build_exclusions(TWIN, x_max(n), segment_size, threads)
    return complement(es, start=1)


def parity_report(n: int, segment_size: int = DEFAULT_SEGMENT_SIZE,
                  threads: Optional[int] = None) -> ParityReport:
    return _report(n, parity_complement(n, segment_size, threads))


def parity_sweep(n_from: int, n_to: int, step: int = 1, **sieve_opts) -> list[ParityReport]:
    if n_from < 1 or n_to < n_from:
        raise ValueError(f"empty sweep range {n_from}:{n_to}")
    if step < 1:
        raise ValueError(f"step must be >= 1, got {step}")
    return [parity_report(n, **sieve_opts) for n in range(n_from, n_to + 1, step)]


def reference_listing(n: int) -> np.ndarray:
    """Complement C computed the way the published reference listing does.

    Four hard-coded progressions, the same outer bound m = (nn + 2) // 5 and
    set difference against 1..nn.  The inner j loop is cut where values pass
    nn; those values are discarded by the listing anyway.
    """
    nn = x_max(n)
    bound = (nn + 2) // 5
    hits = []
    for i in range(1, bound + 1):
        for d, off in ((6 * i + 1, i - 1), (6 * i - 1, i - 1),
                       (6 * i + 1, -i - 1), (6 * i - 1, -i - 1)):
            j_top = min(bound, (nn - off) // d)
            if j_top >= 1:
                hits.append(np.arange(1, j_top + 1, dtype=np.int64) * d + off)
    p = np.unique(np.concatenate(hits)) if hits else np.empty(0, dtype=np.int64)
    return np.setdiff1d(np.arange(1, nn + 1, dtype=np.int64), p)


def reference_report(n: int) -> ParityReport:
    return _report(n, reference_listing(n))


def axis_values(n: int) -> list[int]:
    """Diagonal (n = m) family values for m = 1..n, four per m, with repeats."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    out = []
    for m in range(1, n + 1):
        sq = 6 * m * m
        out.extend((sq - 2 * m - 1, sq - 1, sq - 1, sq + 2 * m - 1))
    return out


class DuplicateStats(NamedTuple):
    total_family_hits: int
    distinct: int
    duplicate_odd: int
    duplicate_even: int


def family_multiplicity(n: int) -> np.ndarray:
    """How often the four twin families generate each x in [0, x_max(n)]."""
    top = x_max(n)
    fams = derive_families(TWIN)
    counts = np.zeros(top + 1, dtype=np.int64)
    for m in range(1, (top + 2) // 5 + 1):
        for f in fams:
            d, off = f.modulus(m), f.offset(m)
            if d + off > top:
                continue
            counts[d + off : top + 1 : d] += 1
    return counts


def duplicate_stats(n: int) -> DuplicateStats:
    counts = family_multiplicity(n)
    idx = np.arange(len(counts))
    dup = counts >= 2
    return DuplicateStats(
        total_family_hits=int(counts.sum()),
        distinct=int(np.count_nonzero(counts)),
        duplicate_odd=int(np.count_nonzero(dup & (idx % 2 == 1))),
        duplicate_even=int(np.count_nonzero(dup & (idx % 2 == 0))),
    )


def write_csv(reports: Iterable[ParityReport], fh: IO[str]) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in reports:
        w.writerow(r.csv_row())


def read_csv(fh: IO[str]) -> list[ParityReport]:
    rows = csv.DictReader(fh)
    if tuple(rows.fieldnames or ()) != CSV_HEADER:
        raise ValueError(f"unexpected header {rows.fieldnames}")
    out = []
    for row in rows:
        r = ParityReport(int(row["n"]), int(row["x_max"]), int(row["complement_size"]),
                         int(row["even"]), int(row["odd"]))
        if r.ratio_decimal != row["ratio"]:
            raise ValueError(f"ratio column {row['ratio']} disagrees with counts for n={r.n}")
        out.append(r)
    return out
