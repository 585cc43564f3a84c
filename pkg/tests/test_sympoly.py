from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hurwitzhodge.exact import zero_padded_partitions
from hurwitzhodge.sympoly import (NotDivisible, NotSymmetric, SymPoly, e_basis, format_m_expansion,
                                  from_m_basis, full_terms, h_basis, m_basis,
                                  m_expansion_from_json, m_expansion_json, p_basis, to_m_basis)

Y = SymPoly.variable


def poly_st(n=3, max_deg=4):
    exps = st.tuples(*[st.integers(0, max_deg)] * n)
    return st.dictionaries(exps, st.fractions(max_denominator=9), max_size=6).map(
        lambda d: SymPoly(n, d))


def test_zero_coefficients_dropped():
    P = SymPoly(2, {(1, 0): 0, (0, 1): Fraction(1, 2)})
    assert P.terms == {(0, 1): Fraction(1, 2)}
    assert (P - P).is_zero()


def test_bases_small_cases():
    y1, y2 = Y(2, 0), Y(2, 1)
    assert h_basis(2, 2) == y1 ** 2 + y1 * y2 + y2 ** 2
    assert e_basis(2, 2) == y1 * y2
    assert p_basis(3, 2) == y1 ** 3 + y2 ** 3
    assert m_basis((2, 1), 2) == y1 ** 2 * y2 + y1 * y2 ** 2


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("k", range(0, 6))
def test_h_is_sum_of_monomials(n, k):
    total = SymPoly.zero(n)
    for beta in zero_padded_partitions(k, n):
        total = total + m_basis(beta, n)
    assert h_basis(k, n) == total


def test_m_basis_round_trip_up_to_degree_8():
    for n in range(1, 5):
        for k in range(9):
            for beta in zero_padded_partitions(k, n):
                assert to_m_basis(m_basis(beta, n)) == {beta: 1}


def test_to_m_basis_examples():
    y1, y2 = Y(2, 0), Y(2, 1)
    assert to_m_basis(y1 ** 2 * y2 + y1 * y2 ** 2) == {(2, 1): 1}
    assert to_m_basis(h_basis(2, 2)) == {(2, 0): 1, (1, 1): 1}
    with pytest.raises(NotSymmetric):
        to_m_basis(y1)


def test_format_and_json():
    coeffs = {(3, 1): Fraction(1), (2, 2): Fraction(1)}
    assert format_m_expansion(coeffs) == "m_{3 1}+m_{2^2}"
    assert format_m_expansion({(5, 1, 1, 1): Fraction(-2), (4, 2, 1, 1): Fraction(3)}) == \
        "-2m_{5 1^3}+3m_{4 2 1^2}"
    data = m_expansion_json(coeffs)
    assert data == {"m": [[3, 1], [2, 2]], "c": ["1", "1"]}
    assert m_expansion_from_json(data) == coeffs


def test_full_terms_examples():
    y = Y(1, 0)
    assert full_terms(y ** 3 - y ** 2 - y + 1, 2) == -y ** 2
    y1, y2 = Y(2, 0), Y(2, 1)
    assert full_terms(y1 * y2 + y1 ** 2, 2) == y1 * y2


@given(poly_st())
@settings(max_examples=40)
def test_frames_are_inverse(P):
    assert P.to_frame("u").to_frame("y") == P
    assert P.to_frame("u").frame == "u"


@given(poly_st(), poly_st())
@settings(max_examples=40)
def test_frame_change_is_a_ring_map(P, Q):
    assert (P * Q).to_frame("u") == P.to_frame("u") * Q.to_frame("u")


@given(poly_st())
@settings(max_examples=40)
def test_exact_division_by_difference(P):
    D = Y(3, 0) - Y(3, 2)
    assert (P * D).divide_by_difference(0, 2) == P


def test_division_failure():
    with pytest.raises(NotDivisible):
        (Y(2, 0) + 1).divide_by_difference(0, 1)


@given(poly_st(), st.integers(1, 3))
@settings(max_examples=30)
def test_evaluation_is_consistent(P, v):
    Q = P * P
    point = (v, v + 1, 2)
    assert Q.evaluate(point) == P.evaluate(point) ** 2


def test_calculus_helpers():
    y1, y2 = Y(2, 0), Y(2, 1)
    P = y1 ** 3 * y2
    assert P.diff(0) == y1 ** 2 * y2 * 3
    assert P.euler(0, 2) == y1 ** 4 * y2 * 3
    assert P.identify(1, 0) == Y(1, 0) ** 4
    assert P.embed(3, [2, 0]) == Y(3, 2) ** 3 * Y(3, 0)
