from fractions import Fraction
from math import factorial

import pytest

from hurwitzhodge.elsv import c_g, witten_table
from hurwitzhodge.onevar import OneVarSeries, phi, tree_series
from hurwitzhodge.pipeline import (TruncationTooLow, change_of_vars, change_of_vars_series,
                                   change_of_vars_tensor, genus1_k1_closed_form, harmonic,
                                   k1_closed_form, k1r_sides, kernel_term, lambda_g_theorem_check,
                                   lambda_series, max_degree, min_full_degree, minhur_closed_form,
                                   omega, omega_expected, sym, sym_kernel, table_report, table_row,
                                   transformed_series, verify_dfeqzero, verify_k1r_residual,
                                   verify_newpde, verify_solpde)
from hurwitzhodge.symmetrize import CacheIncomplete, SymmetrizedSeries, symmetrize
from hurwitzhodge.sympoly import (SymPoly, full_terms, h_basis, m_basis, to_m_basis,
                                  variables_product)

Y = SymPoly.variable
STABLE = [(0, 3), (1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3)]


# ------------------------------------------------------------ symmetrize

def test_symmetrize_genus_one_one_part(ws):
    ws.ensure(4, 1, 1)
    S = symmetrize(1, 1, 4, ws.cache)
    for d in range(1, 5):
        assert S.coefficient((d,)) == Fraction(d ** d, factorial(d)) * Fraction(d - 1, 24)
    assert S.coefficient((2,)) == Fraction(1, 12)


def test_symmetrize_counts_both_orders(ws):
    ws.ensure(3, 0, 2)
    S = symmetrize(0, 2, 3, ws.cache)
    expanded = S.expanded()
    assert expanded[(2, 1)] == expanded[(1, 2)] == ws.cache.H(0, (2, 1)) / factorial(3)
    assert S.coefficient((1, 1)) == ws.cache.H(0, (1, 1)) / 2


def test_symmetrize_needs_cache():
    from hurwitzhodge.hurwitz import HurwitzCache
    with pytest.raises(CacheIncomplete):
        symmetrize(1, 1, 3, HurwitzCache())


# ------------------------------------------------------- change of variables

def _delta_power(i):
    y = Y(1, 0)
    P = y - 1
    for _ in range(i):
        P = P.diff(0) * (y ** 3 - y ** 2)
    return P


def _one_var_image(s: OneVarSeries, D):
    return change_of_vars_tensor({(k,): c for k, c in enumerate(s.coeffs) if c}, 1, D)


def test_change_of_vars_genus_one(ws):
    y = Y(1, 0)
    assert transformed_series(1, 1, ws) == (y ** 3 - y ** 2 - y + 1) * Fraction(1, 24)


def test_phi0_maps_to_shifted_variable():
    assert _one_var_image(phi(0, 10), 10).to_frame("y") == Y(1, 0) - 1


@pytest.mark.parametrize("i", range(7))
def test_phi_images_closed_form(i):
    D = 2 * i + 4
    image = _one_var_image(phi(i, D), D)
    assert all(sum(e) <= 2 * i + 1 for e in image.terms)
    P = image.to_frame("y")
    assert P == _delta_power(i)
    y = Y(1, 0)
    assert full_terms(P, i + 1) == y ** (i + 1) * ((-1) ** i * factorial(i))
    assert all(full_terms(P, k).is_zero() for k in range(i + 1))


def test_tree_series_powers_are_distinct():
    # w(g(u)) = u/(1+u) = 1 - 1/y
    u_over = OneVarSeries([0] + [(-1) ** (k - 1) for k in range(1, 9)])
    images = []
    for j in (1, 2, 3):
        image = change_of_vars_series(tree_series(8) ** j)
        assert image == u_over ** j
        images.append(tuple(image.coeffs))
    assert len(set(images)) == 3


def test_truncation_checks(ws):
    ws.ensure(4, 1, 1)
    with pytest.raises(TruncationTooLow):
        change_of_vars(symmetrize(1, 1, 3, ws.cache))
    fake = SymmetrizedSeries(1, 1, 6, {(d,): Fraction(1) for d in range(1, 7)})
    with pytest.raises(TruncationTooLow):
        change_of_vars(fake)


@pytest.mark.parametrize("g, n", STABLE)
def test_measured_degree_within_bound(g, n, ws):
    top = max(sum(e) for e in transformed_series(g, n, ws).terms)
    assert top <= max_degree(g, n)


# ----------------------------------------------------------- Lambda series

def test_lambda_examples(ws):
    y = Y(1, 0)
    assert lambda_series(1, 1, 0, ws) == -y * Fraction(1, 24)
    assert lambda_series(1, 1, 1, ws) == -y ** 2 * Fraction(1, 24)
    assert lambda_series(1, 1, -1, ws).is_zero()


@pytest.mark.parametrize("g, n", STABLE)
@pytest.mark.parametrize("k", [0, 1, 2])
def test_lambda_shape(g, n, k, ws):
    L = lambda_series(g, n, k, ws)
    assert all(sum(e) == min_full_degree(g, n) + k and min(e) >= 1 for e in L.terms)
    assert L.is_symmetric()
    assert L.divisible_by_all_variables()


@pytest.mark.parametrize("g, n", STABLE)
def test_zero_below_minimum(g, n, ws):
    CX = transformed_series(g, n, ws)
    assert all(full_terms(CX, k).is_zero() for k in range(min_full_degree(g, n)))


def test_minhur_examples(ws):
    y1, y2 = Y(2, 0), Y(2, 1)
    assert minhur_closed_form(1, 1, witten_table(1, 1, ws)) == -Y(1, 0) * Fraction(1, 24)
    assert minhur_closed_form(1, 2, witten_table(1, 2, ws)) == \
        y1 * y2 * (y1 + y2) * Fraction(1, 24)
    assert minhur_closed_form(0, 3, witten_table(0, 3, ws)) == variables_product(3)


@pytest.mark.parametrize("g, n", STABLE)
def test_minimum_degree_routes_agree(g, n, ws):
    assert lambda_series(g, n, 0, ws) == minhur_closed_form(g, n, witten_table(g, n, ws))


@pytest.mark.parametrize("g, n", [gn for gn in STABLE if gn[0] >= 1])
def test_one_above_minimum_routes_agree(g, n, ws):
    assert lambda_series(g, n, 1, ws) == k1_closed_form(g, n, witten_table(g, n, ws), c_g(g, ws))


def test_k1_examples(ws):
    W = witten_table(1, 2, ws)
    assert k1_closed_form(1, 1, witten_table(1, 1, ws), c_g(1, ws)) == -Y(1, 0) ** 2 / 24
    assert to_m_basis(k1_closed_form(1, 2, W, c_g(1, ws)) * 24) == {(3, 1): 1, (2, 2): 1}
    assert harmonic(2) == Fraction(3, 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_genus_one_closed_form(n, ws):
    assert genus1_k1_closed_form(n) == lambda_series(1, n, 1, ws)


def test_genus_one_closed_form_rows():
    assert genus1_k1_closed_form(1) == -Y(1, 0) ** 2 / 24
    row4 = to_m_basis(genus1_k1_closed_form(4) * 24)
    assert row4 == {(5, 1, 1, 1): -2, (4, 2, 1, 1): 3, (3, 3, 1, 1): 4, (3, 2, 2, 1): 6,
                    (2, 2, 2, 2): 6}
    assert to_m_basis(genus1_k1_closed_form(5))[(6, 1, 1, 1, 1)] == Fraction(34, 24)


@pytest.mark.parametrize("g, n", [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)])
def test_lambda_g_theorem(g, n, ws):
    assert lambda_g_theorem_check(g, n, ws)


# ------------------------------------------------------------ sym operators

def test_sym_follows_increasing_blocks():
    y = [Y(3, i) for i in range(3)]
    one_var = lambda R, S, T: y[R[0]]  # noqa: E731
    assert sym(3, 2, 0, one_var) == y[0] * 2 + y[1]
    symmetric = lambda R, S, T: y[R[0]] + y[R[1]]  # noqa: E731
    assert sym(3, 2, 0, symmetric) == (y[0] + y[1] + y[2]) * 2
    assert sym(3, 1, 1, lambda R, S, T: y[R[0]]) == (y[0] + y[1] + y[2]) * 2


def test_sym_kernel_zero():
    assert sym_kernel(3, 3, 1, SymPoly.zero(2)).is_zero()
    assert kernel_term(3, SymPoly.zero(2)).is_zero()


def test_sym_kernel_identity_with_t():
    # (y1^2 (1-y2 t)^2 - y2^2 (1-y1 t)^2) / (y1 - y2) = y1 (1-y2 t) + y2 (1-y1 t)
    # after multiplying through by (1-y1 t)(1-y2 t); t is the third variable
    y1, y2, t = Y(3, 0), Y(3, 1), Y(3, 2)
    N = y1 ** 2 * (1 - y2 * t) ** 2 - y2 ** 2 * (1 - y1 * t) ** 2
    assert N.divide_by_difference(0, 1) == y1 * (1 - y2 * t) + y2 * (1 - y1 * t)


def test_sym_kernel_matches_direct_formula():
    # n = 2, G(y1) = y1^2: (y1^3 y2 y1^2 - y2^3 y1 y2^2)/(y1 - y2)
    y1, y2 = Y(2, 0), Y(2, 1)
    G = Y(1, 0) ** 2
    expected = y1 * y2 * (y1 ** 4 - y2 ** 4).divide_by_difference(0, 1)
    assert sym_kernel(2, 3, 1, G) == expected


# ---------------------------------------------------------------- PDEs

@pytest.mark.parametrize("g, n", [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)])
def test_minimum_degree_equation(g, n, ws):
    assert verify_dfeqzero(g, n, ws)


def test_omega_examples(ws):
    om1 = omega(1, 3, ws)
    y = Y(1, 0)
    assert om1.coeffs == {0: y, 2: y ** 3, 4: y ** 5}
    om2 = omega(2, 2, ws)
    y12 = variables_product(2)
    assert om2.coeffs == {1: y12 * h_basis(1, 2), 3: y12 * h_basis(3, 2)}
    assert om2.parity_ok()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_omega_parity_parts(n, ws):
    assert verify_solpde(n, 3, ws)
    assert omega(n, 3, ws).coeffs == omega_expected(n, 3).coeffs


@pytest.mark.parametrize("n", [2, 3])
def test_t_equation(n, ws):
    assert verify_newpde(n, 3, ws)


@pytest.mark.parametrize("g, n", [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1)])
def test_one_above_minimum_equation(g, n, ws):
    assert verify_k1r_residual(g, n, ws)


@pytest.mark.parametrize("g, n", [(1, 2), (2, 1), (2, 2)])
def test_literal_first_term_reading_fails(g, n, ws):
    lhs, rhs = k1r_sides(g, n, ws, t1_genus_shift=-1)
    assert lhs != rhs


def test_genus_two_one_point_by_hand(ws):
    # y^2 d/dy Omega^2_1 - (1/2)(y^2 d/dy Omega^1_1)^2 = 7/960 y^4 - y^4/1152
    assert lambda_series(2, 1, 1, ws) == Y(1, 0) ** 4 * Fraction(37, 5760)


# ---------------------------------------------------------------- tables

def test_table_g1_row(ws):
    row = table_row("g1", 1, 2, ws)
    assert row.match and "m_{3 1}+m_{2^2}" in row.line()
    assert row.to_json() == {"g": 1, "n": 2, "k": 1, "scale": "24",
                             "terms": [{"m": [3, 1], "c": "1"}, {"m": [2, 2], "c": "1"}],
                             "match": True, "ratio": "1", "resolved": []}


def test_table_g1_row_three_resolution(ws):
    row = table_row("g1", 1, 3, ws)
    assert row.match
    assert row.resolved == {(2, 2): (2, 2, 2)}
    assert row.computed[(2, 2, 2)] == -2


def test_table_higher_rows_scale(ws):
    for g, n in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]:
        row = table_row("higher", g, n, ws)
        assert row.scale == 1 / c_g(g, ws)
        assert row.ratio == 2 ** (2 * g - 1) - 1
    assert table_row("higher", 2, 1, ws).computed == {(4,): Fraction(37, 7)}
    assert table_row("higher", 2, 3, ws).resolved == {(4, 3, 2): (4, 3, 1)}


def test_table_report_selection(ws):
    assert [(r.g, r.n) for r in table_report("g1", [1, 2], ws)] == [(1, 1), (1, 2)]
    assert [(r.g, r.n) for r in table_report("higher", [2], ws)] == [(2, 1), (2, 2), (2, 3)]
