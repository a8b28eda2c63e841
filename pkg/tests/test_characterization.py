import pytest
from hypothesis import given, strategies as st

from pairsieve.characterization import is_representable, representable_set


@pytest.mark.parametrize("z, expected", [(4, True), (7, True), (1, False), (17, True)])
def test_examples(z, expected):
    assert is_representable(z) is expected


@pytest.mark.parametrize("z", [1, 2, 3, 5, 6])
def test_listed_prime_indices(z):
    assert not is_representable(z)


def test_witness_for_17():
    x, y = 2, 3
    assert 2 * x * y + x + y == 17 and 35 == 5 * 7


@pytest.mark.parametrize("limit, expected", [
    (10, [4, 7, 10]),
    (1, []),
    (20, [4, 7, 10, 12, 13, 16, 17, 19]),
])
def test_representable_set(limit, expected):
    assert representable_set(limit) == expected


def test_representable_set_vs_trial_division(odd_composite):
    limit = 2000
    expected = [z for z in range(1, limit + 1) if odd_composite(2 * z + 1)]
    assert representable_set(limit) == expected


def test_equivalence_exhaustive(odd_composite):
    bad = [z for z in range(1, 10**5 + 1) if is_representable(z) != odd_composite(2 * z + 1)]
    assert bad == []


def test_search_order_does_not_matter():
    # the symmetric cut and the full 3y + 1 <= z scan agree
    assert all(
        is_representable(z) == is_representable(z, full_range=True) for z in range(1, 5001)
    )


@given(st.integers(min_value=1, max_value=10**4), st.integers(min_value=1, max_value=10**4))
def test_factor_swap(x, y):
    z = 2 * x * y + x + y
    assert z == 2 * y * x + y + x
    assert is_representable(z)


def test_rejects_nonpositive():
    with pytest.raises(ValueError):
        is_representable(0)
    with pytest.raises(ValueError):
        representable_set(0)
