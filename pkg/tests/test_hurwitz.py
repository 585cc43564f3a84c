import random
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hurwitzhodge.exact import canonical_permutation, compose, inverse, partitions_of
from hurwitzhodge.hurwitz import (BudgetExceeded, CacheError, HurwitzCache, InvalidDomain,
                                  hurwitz_oracle, hurwitz_solve, oracle_count_F, solve_closure)


@pytest.fixture(scope="module")
def cache():
    return solve_closure(9, 3, HurwitzCache())


@pytest.mark.parametrize("g, alpha, H", [
    (0, (2, 1), 4), (0, (1, 1, 1), 24), (1, (2,), Fraction(1, 2)), (1, (3,), 9),
    (0, (3,), 1), (1, (1,), 0), (0, (1,), 1), (0, (1, 1), 1),
])
def test_spot_values(g, alpha, H):
    assert hurwitz_solve(g, alpha).H == H


def test_oracle_reports_factorization_count():
    value = hurwitz_oracle(1, (3,))
    assert (value.F, value.H, value.r) == (27, 9, 4)


@pytest.mark.parametrize("d", range(1, 5))
def test_oracle_matches_solver_small_degrees(d, cache):
    for alpha in partitions_of(d):
        for g in range(2):
            if (d * (d - 1) // 2) ** (d + len(alpha) + 2 * g - 2) <= 10 ** 6:
                assert hurwitz_oracle(g, alpha).H == cache.H(g, alpha), (g, alpha)


def _one_part_F(d, r):
    # only hook characters are nonzero on a d-cycle; the central character of a
    # transposition on the hook (d-k, 1^k) is d(d-1-2k)/2
    total = sum(comb(d - 1, k) * (-1) ** k * Fraction(d * (d - 1 - 2 * k), 2) ** r
                for k in range(d))
    return total / factorial(d)


@pytest.mark.parametrize("d", range(1, 9))
def test_one_part_numbers_against_characters(d, cache):
    for g in range(4):
        r = d - 1 + 2 * g
        if d == 1 and g:
            assert cache.H(g, (1,)) == 0
            continue
        assert cache.H(g, (d,)) == _one_part_F(d, r) / d


def test_genus_zero_identity_count(cache):
    # transitive factorizations of the identity into 2d - 2 transpositions
    for d in range(1, 8):
        assert cache.H(0, (1,) * d) == factorial(2 * d - 2) * Fraction(d) ** (d - 3)


@given(st.sampled_from([(0, (3, 1)), (0, (2, 2)), (1, (2, 1)), (0, (2, 1, 1)), (0, (3, 2))]),
       st.randoms(use_true_random=False))
@settings(max_examples=15, deadline=None)
def test_oracle_independent_of_representative(case, rnd):
    g, alpha = case
    d = sum(alpha)
    perm = list(range(d))
    rnd.shuffle(perm)
    perm = tuple(perm)
    sigma = compose(compose(perm, canonical_permutation(alpha)), inverse(perm))
    assert oracle_count_F(g, alpha, sigma=sigma) == oracle_count_F(g, alpha)


def test_budget_and_domain_errors():
    with pytest.raises(BudgetExceeded):
        hurwitz_oracle(0, (5, 4, 3))
    with pytest.raises(InvalidDomain):
        oracle_count_F(-1, (1,))


def test_cache_round_trip_and_idempotence(tmp_path):
    cache = solve_closure(6, 1, HurwitzCache())
    path = tmp_path / "run.hwz.jsonl"
    cache.save(path)
    loaded = HurwitzCache.load(path)
    assert loaded.entries == cache.entries
    assert loaded.dumps() == cache.dumps()
    n = len(loaded.entries)
    solve_closure(6, 1, loaded)
    assert len(loaded.entries) == n and loaded.dumps() == cache.dumps()


def test_cache_extension_matches_fresh_solve():
    small = solve_closure(5, 1, HurwitzCache())
    solve_closure(7, 2, small)
    assert small.entries == solve_closure(7, 2, HurwitzCache()).entries


def test_cache_rejects_foreign_files():
    with pytest.raises(CacheError):
        HurwitzCache.loads('{"format": "other", "version": 1}\n')
    text = solve_closure(2, 0, HurwitzCache()).dumps().replace("F-over-prod-alpha", "F-over-d!")
    with pytest.raises(CacheError):
        HurwitzCache.loads(text)
    with pytest.raises(CacheError):
        HurwitzCache().H(0, (1,))


def test_solve_reports_cache_provenance():
    cache = HurwitzCache()
    assert hurwitz_solve(1, (2, 1), cache).provenance == "solver"
    assert hurwitz_solve(1, (2, 1), cache).provenance == "cache"
