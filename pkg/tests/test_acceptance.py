"""Exit criteria.  Run with ``pytest tests/test_acceptance.py``; the terminal
summary lists one PASS/FAIL line per criterion."""

import time

import numpy as np
import pytest

from pairsieve.characterization import is_representable
from pairsieve.core import Case, PairClass
from pairsieve.families import derive_families
from pairsieve.oracle import is_prime, is_prime_trial
from pairsieve.parity import (
    axis_values,
    parity_complement,
    parity_report,
    reference_listing,
    x_max,
)
from pairsieve.sieve import (
    build_exclusions,
    complement,
    enumerate_pairs,
    eratosthenes_starts,
)

TWIN = PairClass(1, Case.A)
criterion = pytest.mark.criterion


def oracle_mismatches(pc, x_limit):
    flags = build_exclusions(pc, x_limit).to_bool().tolist()
    return [x for x, marked in enumerate(flags)
            if marked == (is_prime(6 * x + pc.c1) and is_prime(6 * x + pc.c2))]


@criterion(1, "twin oracle equivalence, x in [0, 10^6], 0 mismatches, <= 30 s")
def test_c1_twin_oracle_equivalence():
    t0 = time.perf_counter()
    bad = oracle_mismatches(TWIN, 10**6)
    elapsed = time.perf_counter() - t0
    print(f"criterion 1: {len(bad)} mismatches in {elapsed:.1f}s")
    assert bad == []
    assert elapsed <= 30


@criterion(2, "oracle equivalence k=2 B, k=3 A, k=3 B to x = 10^5")
@pytest.mark.parametrize("pc", [PairClass(2, Case.B), PairClass(3, Case.A), PairClass(3, Case.B)],
                         ids=str)
def test_c2_other_gaps(pc):
    assert oracle_mismatches(pc, 10**5) == []


@criterion(3, "pairs to 61 are (3,5),(5,7) then the worked example list")
def test_c3_worked_example():
    pairs = enumerate_pairs(1, 61)
    assert pairs[:2] == [(3, 5), (5, 7)]
    assert pairs[2:] == [(11, 13), (17, 19), (29, 31), (41, 43), (59, 61)]
    assert pairs[-1] == (59, 61)


@criterion(4, "twin families at m=1..4 reproduce the sixteen listed progressions")
def test_c4_progressions():
    rows = {tuple(str(f.progression(m)) for m in range(1, 5)) for f in derive_families(TWIN)}
    assert rows == {
        ("5n-2", "11n-3", "17n-4", "23n-5"),
        ("5n", "11n+1", "17n+2", "23n+3"),
        ("7n-2", "13n-3", "19n-4", "25n-5"),
        ("7n", "13n+1", "19n+2", "25n+3"),
    }


@criterion(5, "z = 2xy+x+y representable iff 2z+1 composite, z <= 10^5")
def test_c5_characterization():
    bad = [z for z in range(1, 10**5 + 1)
           if is_representable(z) == is_prime_trial(2 * z + 1)]
    assert bad == []


@criterion("6a", "parity complement equals reference listing, n in {1,2,10,50,150}")
@pytest.mark.parametrize("n", [1, 2, 10, 50, 150])
def test_c6a_reference_listing(n):
    ours = parity_complement(n)
    ref = reference_listing(n)
    assert np.array_equal(ours, ref)
    even = int(np.count_nonzero(ref % 2 == 0))
    # the listing prints (-len(C) + 2 * #even) / n
    assert parity_report(n).ratio * n == -len(ref) + 2 * even


@criterion("6b", "ratio in (-0.1, 0.5) for n in {100,150,200}, mean > 0")
def test_c6b_figure_band():
    ratios = {n: float(parity_report(n).ratio) for n in (100, 150, 200)}
    print(f"criterion 6b ratios: {ratios}")
    assert all(-0.1 < r < 0.5 for r in ratios.values()), ratios
    assert sum(ratios.values()) / len(ratios) > 0, ratios


@criterion(7, "axis values odd, max = x_max(n), x_max(n) excluded, n <= 10^4")
def test_c7_axis():
    top = 10**4
    vals = np.array(axis_values(top), dtype=np.int64)
    assert np.all(vals % 2 == 1)
    # axis_values(n) is the first 4n entries of axis_values(top)
    running_max = np.maximum.accumulate(vals)[3::4]
    assert np.array_equal(running_max, [x_max(n) for n in range(1, top + 1)])
    # x_max(n) excluded: member 6 x_max + 7 = (6n+1)^2, so composite
    assert all(not is_prime(6 * x_max(n) + 7) for n in range(1, top + 1))
    es = build_exclusions(TWIN, x_max(1000))
    assert all(x_max(n) in es for n in range(1, 1001))


@criterion(8, "determinism over segments/threads; 10^7 sieve matches and <= 5x baseline")
def test_c8_determinism_and_speed():
    ref = build_exclusions(TWIN, 200_000, segment_size=1 << 20, threads=1)
    for seg in (64, 4096, 1 << 20):
        for threads in (1, 8):
            assert build_exclusions(TWIN, 200_000, segment_size=seg, threads=threads) == ref

    x_limit = 10**7
    big = {}
    for seg in (4096, 1 << 20):
        for threads in (1, 8):
            big[seg, threads] = build_exclusions(TWIN, x_limit, segment_size=seg, threads=threads)
    first = next(iter(big.values()))
    assert all(es == first for es in big.values())

    def best(fn, runs=3):
        times = []
        for _ in range(runs):
            t0 = time.perf_counter()
            result = fn()
            times.append(time.perf_counter() - t0)
        return min(times), result

    p_limit = 6 * x_limit + 5
    sieve_s, es = best(lambda: build_exclusions(TWIN, x_limit))
    base_s, base = best(lambda: eratosthenes_starts(1, p_limit))
    ours = np.concatenate(([3], 6 * complement(es) + 5))
    assert np.array_equal(ours, base)
    print(f"criterion 8: families {sieve_s:.3f}s, eratosthenes {base_s:.3f}s, "
          f"ratio {sieve_s / base_s:.2f}")
    assert sieve_s <= 5 * base_s


@criterion(9, "literal (quadratic bound, composite moduli) == fast mode, x_limit <= 10^4")
@pytest.mark.parametrize("pc", [TWIN, PairClass(2, Case.B), PairClass(3, Case.A),
                                PairClass(3, Case.B)], ids=str)
def test_c9_literal_equals_fast(pc):
    for x_limit in (0, 1, 27, 619, 2023, 5000, 10**4):
        assert build_exclusions(pc, x_limit, mode="literal") == build_exclusions(pc, x_limit)
