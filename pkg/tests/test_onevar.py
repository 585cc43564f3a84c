from fractions import Fraction

import pytest

from hurwitzhodge.onevar import (NotInvertible, OneVarSeries, phi, revert, revert_lagrange,
                                 revert_newton, tree_series)

X = OneVarSeries.x


def test_tree_series_prefix():
    assert tree_series(4).coeffs == [0, 1, 1, Fraction(3, 2), Fraction(8, 3)]


@pytest.mark.parametrize("order", [1, 5, 12, 30])
def test_tree_series_functional_equation(order):
    w = tree_series(order)
    assert w == X(order) * w.exp()


def test_one_plus_phi0_is_inverse_of_one_minus_w():
    w = tree_series(30)
    assert (1 - w).inverse() == phi(0, 30) + 1


def test_phi_examples():
    assert phi(0, 3).coeffs == [0, 1, 2, Fraction(9, 2)]
    assert phi(1, 2).coeffs == [0, 1, 4]
    for i in range(1, 6):
        assert phi(i, 10) == phi(i - 1, 10).x_d_dx()


@pytest.mark.parametrize("j", range(1, 6))
def test_x_d_dx_in_terms_of_w(j):
    # x d/dx w^j = w/(1 - w) * d/dw w^j
    order = 14
    w = tree_series(order)
    lhs = (w ** j).x_d_dx()
    rhs = w * (1 - w).inverse() * (w ** (j - 1)) * j
    assert lhs == rhs


def test_reversion_examples():
    assert revert(X(6)) == X(6)
    s = X(8) + X(8) * X(8)
    g = revert(s)
    catalan = [1, 1, 2, 5, 14, 42, 132, 429]
    assert g.coeffs[1:] == [(-1) ** k * catalan[k] for k in range(8)]
    p0 = phi(0, 8)
    assert p0.compose(revert(p0)) == X(8)
    assert revert(p0).compose(p0) == X(8)


def test_reversion_methods_agree():
    s = phi(2, 12)
    assert revert_newton(s).coeffs == revert_lagrange(s).coeffs


def test_not_invertible():
    with pytest.raises(NotInvertible):
        revert(OneVarSeries([0, 0, 1], 4))
    with pytest.raises(NotInvertible):
        revert(OneVarSeries([1, 1], 4))
    with pytest.raises(NotInvertible):
        OneVarSeries([0, 1], 3).inverse()


def test_series_arithmetic():
    a = OneVarSeries([1, 2, 3], 4)
    assert (a * a.inverse()) == OneVarSeries.const(1, 4)
    assert (a ** 3) == a * a * a
    assert a.derivative().coeffs == [2, 6, 0, 0]
    e = X(6).exp()
    assert e.coeffs[3] == Fraction(1, 6)
