"""Truncated one-variable power series over the rationals.

Used for the rooted tree series ``w(x)``, the series ``phi_i(x)`` and the
compositional inverse of ``phi_0`` that drives the change of variables.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import List, Sequence


class NotInvertible(ValueError):
    pass


class OneVarSeries:
    """Coefficients ``c[0..order]``; everything above ``order`` is unknown."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, order: int = None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is not None:
            coeffs = (coeffs + [Fraction(0)] * (order + 1))[:order + 1]
        self.coeffs: List[Fraction] = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __repr__(self):
        terms = [f"{c}*x^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"OneVarSeries({' + '.join(terms) or '0'} + O(x^{self.order + 1}))"

    def __eq__(self, other):
        if not isinstance(other, OneVarSeries):
            return NotImplemented
        o = min(self.order, other.order)
        return all(self[k] == other[k] for k in range(o + 1))

    @classmethod
    def x(cls, order: int) -> "OneVarSeries":
        return cls([0, 1], order)

    @classmethod
    def const(cls, c, order: int) -> "OneVarSeries":
        return cls([c], order)

    def truncate(self, order: int) -> "OneVarSeries":
        return OneVarSeries(self.coeffs, order)

    def _common(self, other):
        if not isinstance(other, OneVarSeries):
            return OneVarSeries.const(other, self.order), self.order
        return other, min(self.order, other.order)

    def __add__(self, other):
        other, o = self._common(other)
        return OneVarSeries([self[k] + other[k] for k in range(o + 1)])

    __radd__ = __add__

    def __neg__(self):
        return OneVarSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        other, o = self._common(other)
        return OneVarSeries([self[k] - other[k] for k in range(o + 1)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, OneVarSeries):
            other = Fraction(other)
            return OneVarSeries([c * other for c in self.coeffs])
        o = min(self.order, other.order)
        out = [Fraction(0)] * (o + 1)
        for i, a in enumerate(self.coeffs[:o + 1]):
            if not a:
                continue
            for j in range(o + 1 - i):
                b = other[j]
                if b:
                    out[i + j] += a * b
        return OneVarSeries(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = OneVarSeries.const(1, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def derivative(self) -> "OneVarSeries":
        # order drops by one
        return OneVarSeries([k * c for k, c in enumerate(self.coeffs)][1:])

    def x_d_dx(self) -> "OneVarSeries":
        return OneVarSeries([k * c for k, c in enumerate(self.coeffs)])

    def inverse(self) -> "OneVarSeries":
        """Multiplicative inverse; needs a nonzero constant term."""
        if not self[0]:
            raise NotInvertible("zero constant term")
        out = [Fraction(0)] * (self.order + 1)
        out[0] = 1 / self[0]
        for k in range(1, self.order + 1):
            s = sum((self[j] * out[k - j] for j in range(1, k + 1)), Fraction(0))
            out[k] = -s / self[0]
        return OneVarSeries(out)

    def exp(self) -> "OneVarSeries":
        """``exp`` of a series with zero constant term (via ``E' = s' E``)."""
        if self[0]:
            raise ValueError("exp needs zero constant term")
        ds = self.derivative()
        out = [Fraction(0)] * (self.order + 1)
        out[0] = Fraction(1)
        for k in range(1, self.order + 1):
            out[k] = sum((ds[j] * out[k - 1 - j] for j in range(k)), Fraction(0)) / k
        return OneVarSeries(out)

    def compose(self, inner: "OneVarSeries") -> "OneVarSeries":
        """``self(inner(x))``; ``inner`` must have zero constant term."""
        if inner[0]:
            raise ValueError("inner series must have zero constant term")
        o = min(self.order, inner.order)
        out = OneVarSeries.const(0, o)
        power = OneVarSeries.const(1, o)
        inner = inner.truncate(o)
        for k in range(o + 1):
            if self[k]:
                out = out + power * self[k]
            power = power * inner
        return out


def tree_series(order: int) -> OneVarSeries:
    """Rooted tree series ``w(x) = sum m^(m-1) x^m / m!``."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return OneVarSeries([0] + [Fraction(m ** (m - 1), factorial(m)) for m in range(1, order + 1)])


def phi(i: int, order: int) -> OneVarSeries:
    """``phi_i(x) = sum m^(m+i)/m! x^m``, cross-checked against ``(x d/dx)^(i+1) w``."""
    if i < 0:
        raise ValueError("i must be >= 0")
    direct = OneVarSeries([0] + [Fraction(m ** (m + i), factorial(m)) for m in range(1, order + 1)])
    via_tree = tree_series(order)
    for _ in range(i + 1):
        via_tree = via_tree.x_d_dx()
    assert direct == via_tree, "phi_i disagrees with (x d/dx)^(i+1) w"
    return direct


def revert_newton(s: OneVarSeries) -> OneVarSeries:
    """Compositional inverse by order-doubling Newton iteration.

    Solves ``s(g) = x``: ``g <- g - (s(g) - x) / s'(g)``, doubling the
    number of correct coefficients each step.
    """
    _check_revertible(s)
    order = s.order
    g = OneVarSeries([0, 1 / s[1]], order)
    x = OneVarSeries.x(order)
    ds = s.derivative()
    correct = 2
    while True:
        prec = min(2 * correct, order + 1)
        gt = g.truncate(prec - 1)
        err = s.truncate(prec - 1).compose(gt) - x.truncate(prec - 1)
        slope = OneVarSeries(ds.coeffs, prec - 1).compose(gt)
        g = (gt - err * slope.inverse()).truncate(order)
        correct = prec
        if prec >= order + 1:
            break
    return g


def revert_lagrange(s: OneVarSeries) -> OneVarSeries:
    """Compositional inverse by Lagrange inversion.

    ``[x^k] g = (1/k) [t^(k-1)] (t / s(t))^k``.
    """
    _check_revertible(s)
    order = s.order
    q = OneVarSeries(s.coeffs[1:], order - 1)  # s(t)/t
    ratio = q.inverse()                          # t/s(t)
    out = [Fraction(0)] * (order + 1)
    power = OneVarSeries.const(1, order - 1)
    for k in range(1, order + 1):
        power = power * ratio
        out[k] = power[k - 1] / k
    return OneVarSeries(out)


def revert(s: OneVarSeries) -> OneVarSeries:
    """Compositional inverse; Newton and Lagrange results must agree."""
    g = revert_newton(s)
    h = revert_lagrange(s)
    if g.coeffs != h.coeffs:
        raise AssertionError("reversion methods disagree")
    return g


def _check_revertible(s: OneVarSeries):
    if s[0] or not s[1]:
        raise NotInvertible("need zero constant term and nonzero linear term")
    if s.order < 1:
        raise NotInvertible("series order must be at least 1")
