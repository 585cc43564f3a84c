from collections import Counter
from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hurwitzhodge.exact import (aut_order, canonical_permutation, class_size, compose, cycle_type,
                                enumerate_partitions, format_rational, inverse, parse_rational,
                                partition, partitions_of, sub_multisets, transposition,
                                transposition_count, zero_padded, zero_padded_partitions)

partitions_st = st.lists(st.integers(1, 6), min_size=1, max_size=5).map(partition)


def test_rational_text_round_trip():
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_rational(Fraction(5)) == "5"
    assert parse_rational("7/5760") == Fraction(7, 5760)
    assert parse_rational(format_rational(Fraction(-31, 967680))) == Fraction(-31, 967680)


def test_partition_canonical_and_padded():
    assert partition([1, 3, 2]) == (3, 2, 1)
    assert zero_padded([2], 3) == (2, 0, 0)
    with pytest.raises(ValueError):
        partition([2, 0])


def test_transposition_count():
    assert transposition_count(0, (2, 1)) == 3
    assert transposition_count(1, (3,)) == 4
    assert transposition_count(1, (1,)) == 2
    assert transposition_count(0, (1,)) == 0


def test_partition_counts():
    assert [len(list(partitions_of(d))) for d in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]
    assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions_of(6, exact_parts=2)) == [(5, 1), (4, 2), (3, 3)]


def test_graded_enumeration_starts_empty():
    parts = list(enumerate_partitions(3))
    assert parts == [(), (1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)]


def test_zero_padded_partitions():
    assert zero_padded_partitions(2, 2) == [(2, 0), (1, 1)]
    assert zero_padded_partitions(0, 3) == [(0, 0, 0)]


@pytest.mark.parametrize("d", range(1, 8))
def test_class_sizes_against_symmetric_group(d):
    counts = Counter(cycle_type(p) for p in permutations(range(d)))
    for alpha, size in counts.items():
        assert class_size(alpha) == size
    assert sum(class_size(a) for a in partitions_of(d)) == factorial(d)


@given(partitions_st)
def test_aut_order_times_rearrangements(beta):
    assert aut_order(beta) * len(set(permutations(beta))) == factorial(len(beta))


@given(partitions_st)
def test_sub_multisets_count_and_union(alpha):
    pairs = list(sub_multisets(alpha))
    expected = 1
    for m in Counter(alpha).values():
        expected *= m + 1
    assert len(pairs) == expected
    for a, b in pairs:
        assert partition(a + b) == alpha


@given(partitions_st)
@settings(max_examples=50)
def test_canonical_permutation_type(alpha):
    assert cycle_type(canonical_permutation(alpha)) == alpha


def test_permutation_algebra():
    s = canonical_permutation((3, 1))
    t = transposition(4, 0, 3)
    assert compose(s, inverse(s)) == tuple(range(4))
    # multiplying by a transposition joins or cuts cycles
    assert cycle_type(compose(t, s)) == (4,)
