import pytest
from hypothesis import given, strategies as st

from pairsieve.core import (
    MAX_INDEX,
    Case,
    InvalidPairClass,
    PairClass,
    index_to_pair,
    index_to_sequence,
    sequence_to_odd,
)
from pairsieve.oracle import is_prime_trial

TWIN = PairClass(1, Case.A)


@pytest.mark.parametrize("x, s", [(1, 4), (4, 13), (0, 1)])
def test_index_to_sequence(x, s):
    assert index_to_sequence(x) == s


@pytest.mark.parametrize("s, odd", [(4, 9), (13, 27), (1, 3)])
def test_sequence_to_odd(s, odd):
    assert sequence_to_odd(s) == odd


def test_table1_rows():
    # sequence values 4..13 and their odd numbers
    assert [sequence_to_odd(s) for s in range(4, 14)] == list(range(9, 28, 2))


def test_index_to_pair_examples():
    assert index_to_pair(1, TWIN) == (11, 13)
    assert index_to_pair(0, TWIN) == (5, 7)
    pair = index_to_pair(0, PairClass(2, Case.B))
    assert pair == (7, 11)
    assert all(is_prime_trial(v) for v in pair)


def test_worked_example_sequence_values():
    xs = [1, 2, 4, 6, 9]
    assert [index_to_sequence(x) for x in xs] == [4, 7, 13, 19, 28]
    assert [sequence_to_odd(index_to_sequence(x)) for x in xs] == [9, 15, 27, 39, 57]


@given(st.integers(min_value=0, max_value=10**15))
def test_pair_is_two_odds_after_sequence_odd(x):
    base = sequence_to_odd(index_to_sequence(x))
    assert index_to_pair(x, TWIN) == (base + 2, base + 4)


@given(st.integers(min_value=0, max_value=10**12), st.integers(min_value=1, max_value=60))
def test_members_coprime_to_6(x, k):
    for pc in PairClass.valid_cases(k):
        for v in index_to_pair(x, pc):
            assert v % 2 and v % 3


@pytest.mark.parametrize("k", range(1, 31))
def test_validity_table(k):
    for case, bad in ((Case.A, 2), (Case.B, 1)):
        if k % 3 == bad:
            with pytest.raises(InvalidPairClass, match="mod 3"):
                PairClass(k, case)
        else:
            pc = PairClass(k, case)
            assert pc.c1 == case.c1 and pc.c2 == pc.c1 + 2 * k


def test_valid_cases_counts():
    assert [pc.case for pc in PairClass.valid_cases(1)] == [Case.A]
    assert [pc.case for pc in PairClass.valid_cases(2)] == [Case.B]
    assert [pc.case for pc in PairClass.valid_cases(3)] == [Case.A, Case.B]


@pytest.mark.parametrize("k", [0, -1])
def test_nonpositive_k_rejected(k):
    with pytest.raises(InvalidPairClass):
        PairClass(k, Case.A)


def test_overflow_checked():
    index_to_pair(MAX_INDEX, TWIN)
    with pytest.raises(OverflowError):
        index_to_pair(MAX_INDEX + 1, TWIN)
    with pytest.raises(ValueError):
        index_to_sequence(-1)
