from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from hurwitzhodge.exact import transposition_count
from hurwitzhodge.genus_series import (GenusSeries, cut, join_across, join_within,
                                       joincut_residual, lhs, lhs_eigenvalue)
from hurwitzhodge.hurwitz import HurwitzCache, solve_closure

KEYS = [(0, (1,)), (0, (2,)), (0, (1, 1)), (0, (3,)), (0, (2, 1)), (1, (1,)), (1, (2,)),
        (0, (2, 2)), (1, (1, 1)), (0, (4,))]
series_st = st.dictionaries(st.sampled_from(KEYS),
                            st.fractions(max_denominator=20).filter(bool), max_size=6)


def make(coeffs):
    return GenusSeries(dict(coeffs), 4, 1)


def test_solved_closure_has_zero_residual():
    cache = solve_closure(7, 2, HurwitzCache())
    assert joincut_residual(cache.series()).is_zero()


def test_residual_detects_a_perturbation():
    cache = solve_closure(5, 1, HurwitzCache())
    S = cache.series()
    bumped = S + make({(0, (2, 1)): Fraction(1)})
    assert not joincut_residual(bumped).is_zero()


def test_eigenvalue_is_r():
    assert lhs_eigenvalue(1, (3, 1)) == transposition_count(1, (3, 1))


def test_base_coefficient():
    cache = solve_closure(1, 0, HurwitzCache())
    assert cache.series()[(0, (1,))] == 1


@given(series_st, series_st)
@settings(max_examples=40)
def test_operators_are_linear(a, b):
    A, B = make(a), make(b)
    for op in (join_within, cut, lhs):
        assert op(A + B) == op(A) + op(B)
        assert op(A.scale(3)) == op(A).scale(3)


@given(series_st)
@settings(max_examples=40)
def test_operators_shift_r_by_one(a):
    S = make(a)
    rs = {transposition_count(g, al) for g, al in S}
    for op in (join_within, cut):
        for g, al in op(S):
            assert transposition_count(g, al) - 1 in rs


@given(series_st)
@settings(max_examples=30)
def test_join_across_is_quadratic(a):
    S = make(a)
    assert join_across(S.scale(2)) == join_across(S).scale(4)
