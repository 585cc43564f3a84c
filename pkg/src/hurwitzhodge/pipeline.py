"""Symmetrize, change variables, keep full terms.

``C`` substitutes ``x_j = g(y_j - 1)`` with ``g`` the compositional inverse
of ``phi_0``.  It is computed in the shifted frame ``u_j = y_j - 1``: since
``g(u) = u + O(u^2)``, the image of ``x^a`` has ``u``-order ``>= sum(a)``, so
all ``u``-coefficients of degree ``<= D`` are exact from tuples with
``sum(a) <= D``.  By ``C phi_b = ((y^3 - y^2) d/dy)^b (y - 1)`` the image of
the genus-``g`` series has degree ``<= 6g - 6 + 3n``; the coefficients of
degree ``6g - 6 + 3n < k <= D`` are checked to vanish.
"""
from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Dict, Tuple

from .elsv import MissingWittenEntries, WittenTable, c_g, check_range, witten_table
from . import tables
from .exact import format_rational, zero_padded_partitions
from .onevar import OneVarSeries, phi, revert
from .sympoly import (SymPoly, e_basis, format_m_expansion, full_terms, h_basis, m_basis,
                      multinomial, p_basis, to_m_basis, variables_product)
from .symmetrize import SymmetrizedSeries, symmetrize
from .workspace import as_workspace

log = logging.getLogger(__name__)


class TruncationTooLow(ArithmeticError):
    pass


def max_degree(g: int, n: int) -> int:
    return 6 * g - 6 + 3 * n


def working_degree(g: int, n: int) -> int:
    return max_degree(g, n) + 2


def min_full_degree(g: int, n: int) -> int:
    return 2 * g - 3 + 2 * n


_INVERSE_PHI0: Dict[int, OneVarSeries] = {}


def inverse_phi0(order: int) -> OneVarSeries:
    """Compositional inverse of ``phi_0``, memoized per order."""
    for o, g in _INVERSE_PHI0.items():
        if o >= order:
            return g.truncate(order)
    g = revert(phi(0, order))
    _INVERSE_PHI0[order] = g
    return g


def change_of_vars_series(s: OneVarSeries) -> OneVarSeries:
    """One-variable ``C``: ``s(g(u))`` as a series in ``u = y - 1``."""
    return s.compose(inverse_phi0(s.order))


def _power_table(D: int):
    g = inverse_phi0(D)
    table = {}
    power = OneVarSeries.const(1, D)
    for a in range(1, D + 1):
        power = power * g
        table[a] = [(e, power[e]) for e in range(a, D + 1) if power[e]]
    return table


def change_of_vars_tensor(coeffs: Dict[Tuple[int, ...], Fraction], n: int, D: int) -> SymPoly:
    """Exact ``u``-frame image of ``sum coeffs[a] x^a`` up to total degree ``D``.

    Applied one variable at a time: ``x_j^a -> sum_e [u^e] g(u)^a u_j^e``.
    """
    powers = _power_table(D)
    current = {a: c for a, c in coeffs.items() if sum(a) <= D and c}
    for j in range(n):
        nxt: Dict[Tuple[int, ...], Fraction] = defaultdict(Fraction)
        for idx, c in current.items():
            a = idx[j]
            room = D - (sum(idx) - a)
            head, tail = idx[:j], idx[j + 1:]
            for e, m in powers[a]:
                if e > room:
                    break
                nxt[head + (e,) + tail] += c * m
        current = nxt
    return SymPoly(n, current, "u")


def change_of_vars(S: SymmetrizedSeries) -> SymPoly:
    """The polynomial ``C Xi_n H^g_n`` in the y-frame."""
    top = max_degree(S.g, S.n)
    if S.D < top + 1:
        raise TruncationTooLow(f"D={S.D} leaves no room to witness degree <= {top}")
    U = change_of_vars_tensor(S.expanded(), S.n, S.D)
    tail = {e: c for e, c in U.terms.items() if sum(e) > top}
    if tail:
        raise TruncationTooLow(f"u-coefficients above degree {top} do not vanish "
                               f"(e.g. {next(iter(tail))})")
    return U.to_frame("y")


def transformed_series(g: int, n: int, ws=None) -> SymPoly:
    """``C Xi_n H^g_n`` computed from solved Hurwitz numbers (memoized)."""
    check_range(g, n)
    ws = as_workspace(ws)

    def build():
        D = working_degree(g, n)
        ws.ensure(D, g, n)
        return change_of_vars(symmetrize(g, n, D, ws.cache))

    return ws.cached(("CXH", g, n), build)


def lambda_series(g: int, n: int, k: int, ws=None) -> SymPoly:
    """Full terms of degree ``2g - 3 + 2n + k`` of the transformed series."""
    degree = min_full_degree(g, n) + k
    if degree < 0:
        return SymPoly.zero(n)
    return full_terms(transformed_series(g, n, ws), degree)


def omega_g(g: int, n: int, ws=None) -> SymPoly:
    """Full terms of minimum degree; zero for ``n = 0``."""
    if n == 0:
        return SymPoly.zero(0)
    return lambda_series(g, n, 0, ws)


# ------------------------------------------------------------- closed forms

def _factorials(beta) -> int:
    out = 1
    for b in beta:
        out *= factorial(b)
    return out


def minhur_closed_form(g: int, n: int, witten: WittenTable) -> SymPoly:
    """``y_1..y_n (-1)^(3g-3+n) sum <tau_beta lambda_g>_g beta! m_beta``."""
    total = 2 * g - 3 + n
    out = SymPoly.zero(n)
    if total < 0:
        return out
    for beta in zero_padded_partitions(total, n):
        value = witten.get(g, g, beta)
        if value:
            out = out + m_basis(beta, n) * (value * _factorials(beta))
    return out * variables_product(n) * (-1) ** (3 * g - 3 + n)


def harmonic(k: int) -> Fraction:
    return sum((Fraction(1, j) for j in range(1, k + 1)), Fraction(0))


def k1_closed_form(g: int, n: int, witten: WittenTable, cg: Fraction) -> SymPoly:
    """Full terms one above minimum degree, from ``lambda_{g-1}`` symbols and ``c_g``."""
    if g < 1:
        raise ValueError("needs g >= 1")
    top = 2 * g - 2 + n
    first = SymPoly.zero(n)
    for beta in zero_padded_partitions(top, n):
        value = witten.get(g, g - 1, beta)
        if value:
            first = first + m_basis(beta, n) * (value * _factorials(beta))
    first = first * (-1) ** (3 * g - 3 + n)
    second = SymPoly.zero(n)
    for k in range(2, top + 1):
        second = second + p_basis(k, n) * h_basis(top - k, n) * harmonic(k - 1)
    second = second * ((-1) ** (3 * g - 2 + n) * cg * factorial(2 * g - 3 + n))
    return (first + second) * variables_product(n)


def genus1_k1_closed_form(n: int) -> SymPoly:
    """Explicit genus-one series one above minimum degree."""
    if n < 1:
        raise ValueError("needs n >= 1")
    ys = variables_product(n)
    out = SymPoly.zero(n)
    for k in range(2, n + 1):
        out = out + p_basis(k, n) * h_basis(n - k, n) * harmonic(k - 1)
    out = out * Fraction((-1) ** (n + 1) * factorial(n - 1), 24)
    out = out + h_basis(n, n) * Fraction((-1) ** n * factorial(n), 24)
    triple = SymPoly.zero(n)
    for i in range(2, n + 1):
        for m in range(i, n + 1):
            em = e_basis(m, n)
            if em.is_zero():
                continue
            w = factorial(i - 2) * factorial(n - i) * (-1) ** (m - i) * _binom(m, i)
            for k in range(0, n - m + 1):
                triple = triple + em * h_basis(k, n) * h_basis(n - k - m, n) * w
    out = out + triple * Fraction((-1) ** (n - 1), 24)
    return out * ys


def _binom(a: int, b: int) -> int:
    from math import comb
    return comb(a, b)


def lambda_g_closed_form(g: int, n: int, cg: Fraction) -> SymPoly:
    """``c_g (-1)^(3g-3+n) (2g-3+n)! y_1..y_n h_{2g-3+n}(y)``."""
    m = 2 * g - 3 + n
    return h_basis(m, n) * variables_product(n) * (cg * (-1) ** (3 * g - 3 + n) * factorial(m))


def lambda_g_witten(g: int, n: int, cg: Fraction) -> WittenTable:
    """Witten symbols predicted by ``multinomial(2g-3+n; beta) c_g``."""
    table = WittenTable()
    m = 2 * g - 3 + n
    for beta in zero_padded_partitions(m, n):
        table.entries[(g, g, beta)] = cg * multinomial(m, beta)
    table.covered.add((g, n, g))
    return table


def lambda_g_theorem_check(g: int, n: int, ws=None) -> bool:
    """Pipeline minimum-degree terms against the closed form and against the
    minimum-degree formula fed with the predicted Witten symbols."""
    ws = as_workspace(ws)
    cg = c_g(g, ws)
    lam = lambda_series(g, n, 0, ws)
    return (lam == lambda_g_closed_form(g, n, cg)
            and lam == minhur_closed_form(g, n, lambda_g_witten(g, n, cg)))


# ---------------------------------------------------------- sym operators

def sym(n: int, i: int, j: int, f) -> SymPoly:
    """Sum of ``f(R, S, T)`` over ordered set partitions of ``range(n)`` with
    ``|R| = i``, ``|S| = j``; each block is an increasing tuple of indices and
    ``f`` returns an ``n``-variable polynomial."""
    if i < 0 or j < 0 or i + j > n:
        raise ValueError("need i, j >= 0 and i + j <= n")
    out = SymPoly.zero(n)
    everything = range(n)
    for R in combinations(everything, i):
        left = [k for k in everything if k not in R]
        for S in combinations(left, j):
            T = tuple(k for k in left if k not in S)
            out = out + f(R, S, T)
    return out


def sym_kernel(n: int, p: int, q: int, G: SymPoly) -> SymPoly:
    """``sym_{1,1} y_1^p y_2^q / (y_1 - y_2) G(y_1, y_3, ..., y_n)``.

    ``G`` has ``n - 1`` variables.  Each unordered pair ``a < b`` contributes
    ``(N_ab - N_ba) / (y_a - y_b)`` with the division done exactly.
    """
    if G.n != n - 1:
        raise ValueError(f"operand must have {n - 1} variables")
    out = SymPoly.zero(n)
    if G.is_zero():
        return out
    for a, b in combinations(range(n), 2):
        rest = [k for k in range(n) if k not in (a, b)]
        N_ab = _placed(G, n, a, rest, p, b, q)
        N_ba = _placed(G, n, b, rest, p, a, q)
        out = out + (N_ab - N_ba).divide_by_difference(a, b)
    return out


def _placed(G: SymPoly, n: int, first: int, rest, p: int, other: int, q: int) -> SymPoly:
    e = [0] * n
    e[first] += p
    e[other] += q
    return G.embed(n, [first] + list(rest)).times_monomial(e)


def kernel_term(n: int, F: SymPoly) -> SymPoly:
    """``sym_{1,1} (y_1^3 y_2 / (y_1 - y_2)) d/dy_1 F(y_1, y_3, ..., y_n)``."""
    if n < 2 or F.is_zero():
        return SymPoly.zero(n)
    return sym_kernel(n, 3, 1, F.diff(0))


def verify_dfeqzero(g: int, n: int, ws=None) -> bool:
    """``(1 - n) Omega^g_n = sym_{1,1} y_1^3 y_2/(y_1 - y_2) d/dy_1 Omega^g_{n-1}``."""
    if n < 2 or g < 1:
        raise ValueError("needs n >= 2, g >= 1")
    ws = as_workspace(ws)
    return omega_g(g, n, ws) * (1 - n) == kernel_term(n, omega_g(g, n - 1, ws))


# -------------------------------------------------------------- Omega_n

class ZeroConstant(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class OmegaSeries:
    """Coefficients of ``t^(2g-3+n)`` for ``g = 1..g_max``."""

    n: int
    coeffs: Dict[int, SymPoly]

    def __getitem__(self, m: int) -> SymPoly:
        return self.coeffs.get(m, SymPoly.zero(self.n))

    def exponents(self):
        return sorted(m for m, c in self.coeffs.items() if not c.is_zero())

    def parity_ok(self) -> bool:
        return all(m % 2 == (self.n - 1) % 2 for m in self.exponents())

    def t_derivative(self) -> "OmegaSeries":
        return OmegaSeries(self.n, {m - 1: c * m for m, c in self.coeffs.items() if m})


def omega(n: int, g_max: int, ws=None, c=None) -> OmegaSeries:
    """Truncated ``Omega_n(y; t)`` with the ``c_g`` from the interpolated polynomials
    unless supplied."""
    ws = as_workspace(ws)
    coeffs = {}
    for g in range(1, g_max + 1):
        cg = c[g - 1] if c is not None else c_g(g, ws)
        if not cg:
            raise ZeroConstant(f"c_{g} = 0")
        m = 2 * g - 3 + n
        coeffs[m] = omega_g(g, n, ws) * (Fraction((-1) ** (3 * g - 3 + n)) / (cg * factorial(m)))
    return OmegaSeries(n, coeffs)


def omega_expected(n: int, g_max: int) -> OmegaSeries:
    """The matching-parity part of ``prod y_i/(1 - y_i t)`` through ``t^(2 g_max - 3 + n)``."""
    ys = variables_product(n)
    return OmegaSeries(n, {2 * g - 3 + n: ys * h_basis(2 * g - 3 + n, n)
                           for g in range(1, g_max + 1)})


def verify_solpde(n: int, g_max: int, ws=None) -> bool:
    om = omega(n, g_max, ws)
    return om.parity_ok() and om.coeffs == omega_expected(n, g_max).coeffs


def newpde_residual(n: int, g_max: int, ws=None) -> OmegaSeries:
    """``(n - 1) d/dt Omega_n - sym_{1,1} y_1^3 y_2/(y_1 - y_2) d/dy_1 Omega_{n-1}``,
    genus by genus; ``n >= 2``."""
    if n < 2:
        raise ValueError("needs n >= 2")
    ws = as_workspace(ws)
    lhs = omega(n, g_max, ws).t_derivative()
    rhs = omega(n - 1, g_max, ws)
    out = {}
    for m, c in lhs.coeffs.items():
        out[m] = c * (n - 1) - kernel_term(n, rhs[m])
    return OmegaSeries(n, out)


def verify_newpde(n: int, g_max: int, ws=None) -> bool:
    return all(c.is_zero() for c in newpde_residual(n, g_max, ws).coeffs.values())


# ------------------------------------------------- k = 1 partial differential equation

def _omega_or_zero(g: int, n: int, ws) -> SymPoly:
    if g < 0 or n < 1 or (g == 0 and n < 3):
        return SymPoly.zero(max(n, 0))
    return omega_g(g, n, ws)


def _lambda1_or_zero(g: int, n: int, ws) -> SymPoly:
    if n < 1:
        return SymPoly.zero(0)
    return lambda_series(g, n, 1, ws)


def _split_product(n: int, k: int, A: SymPoly, B: SymPoly) -> SymPoly:
    """``sym_{1,k-1} A(y_1, y_2..y_k) B(y_1, y_{k+1}..y_n)`` with ``A, B`` already
    carrying the ``y_1^2 d/dy_1``."""
    if A.is_zero() or B.is_zero():
        return SymPoly.zero(n)

    def term(R, S, T):
        return A.embed(n, R + S) * B.embed(n, R + T)

    return sym(n, 1, k - 1, term)


def _y2d1(P: SymPoly) -> SymPoly:
    return P.euler(0, 2) if P.n else P


def k1r_sides(g: int, n: int, ws=None, t1_genus_shift: int = 0):
    """Both sides of the ``k = 1`` equation, each multiplied by ``n``.

    ``t1_genus_shift = 0`` applies ``sum y_i^2 d/dy_i`` to ``Omega^g_n``;
    ``-1`` uses ``Omega^g_{n-1}(y_1..y_{n-1})`` instead, which has the wrong
    degree and is kept only to show that reading fails.
    """
    if g < 1 or n < 1:
        raise ValueError("needs g, n >= 1")
    ws = as_workspace(ws)
    lhs = _lambda1_or_zero(g, n, ws) * n + kernel_term(n, _lambda1_or_zero(g, n - 1, ws))

    base = _omega_or_zero(g, n + t1_genus_shift, ws)
    base = base.embed(n, range(base.n))
    t1 = SymPoly.zero(n)
    for i in range(n):
        t1 = t1 + base.euler(i, 2)
    prev = _omega_or_zero(g, n - 1, ws)
    t2 = sym_kernel(n, 4, 1, prev.diff(0)) * 2 if n >= 2 and not prev.is_zero() else SymPoly.zero(n)
    t3 = SymPoly.zero(n)
    for k in range(3, n + 1):
        t3 = t3 - _split_product(n, k, _y2d1(_omega_or_zero(0, k, ws)),
                                 _y2d1(_omega_or_zero(g, n - k + 1, ws)))
    t4 = SymPoly.zero(n)
    for k in range(1, n + 1):
        for a in range(1, g):
            t4 = t4 - _split_product(n, k, _y2d1(_omega_or_zero(a, k, ws)),
                                     _y2d1(_omega_or_zero(g - a, n - k + 1, ws))) * Fraction(1, 2)
    return lhs, t1 + t2 + t3 + t4


def verify_k1r_residual(g: int, n: int, ws=None) -> bool:
    lhs, rhs = k1r_sides(g, n, ws)
    return lhs == rhs


# ----------------------------------------------------------------- tables

@dataclass(frozen=True)
class TableRow:
    which: str
    g: int
    n: int
    scale: Fraction
    computed: Dict[Tuple[int, ...], Fraction]
    printed: Dict[Tuple[int, ...], int]
    resolved: Dict[Tuple[int, ...], Tuple[int, ...]]
    match: bool
    ratio: object  # printed / computed when they are proportional, else None

    def line(self) -> str:
        verdict = "match" if self.match else "MISMATCH"
        if not self.match and self.ratio is not None:
            verdict += f" (printed = {format_rational(self.ratio)} x computed"
            if self.ratio == 2 ** (2 * self.g - 1) - 1:
                verdict += f" = (2^{2 * self.g - 1}-1) x computed"
            verdict += ")"
        notes = "".join(f" [printed {_label(a)} read as {_label(b)}]"
                        for a, b in self.resolved.items())
        return (f"g={self.g} n={self.n} scale={format_rational(self.scale)}: "
                f"{format_m_expansion(_padded(self.computed, self.n))}  {verdict}{notes}")

    def to_json(self) -> dict:
        items = sorted(self.computed.items(), key=lambda t: tuple(-x for x in t[0]))
        return {"g": self.g, "n": self.n, "k": 1, "scale": format_rational(self.scale),
                "terms": [{"m": list(b), "c": format_rational(c)} for b, c in items],
                "match": self.match,
                "ratio": None if self.ratio is None else format_rational(self.ratio),
                "resolved": [{"printed": list(a), "computed": list(b)}
                             for a, b in self.resolved.items()]}


def _label(beta) -> str:
    return format_m_expansion({tuple(beta): Fraction(1)})


def _padded(coeffs, n):
    return {tuple(b) + (0,) * (n - len(b)): c for b, c in coeffs.items()}


def scaled_k1_row(g: int, n: int, ws=None) -> Tuple[Fraction, Dict[Tuple[int, ...], Fraction]]:
    """``(1/c_g, c_g^{-1} Lambda^g_{n,1})`` with the row in the m-basis."""
    ws = as_workspace(ws)
    cg = c_g(g, ws)
    scale = 1 / cg
    row = to_m_basis(lambda_series(g, n, 1, ws))
    return scale, {tuple(p for p in b if p): c * scale for b, c in row.items()}


def table_row(which: str, g: int, n: int, ws=None) -> TableRow:
    printed = tables.printed_row(which, g, n)
    scale, computed = scaled_k1_row(g, n, ws)
    degree = min_full_degree(g, n) + 1
    ok = tables.degree_consistent(printed, n, degree)
    resolved = {}
    expected = {}
    for beta, c in printed.items():
        if not ok[beta]:
            target = tables.RESOLUTIONS.get((which, (g, n)), {}).get(beta)
            if target is None:
                target = beta
            else:
                resolved[beta] = target
            beta = target
        expected[beta] = Fraction(c)
    match = computed == expected
    ratio = None
    if computed and set(computed) == set(expected):
        ratios = {expected[b] / c for b, c in computed.items()}
        if len(ratios) == 1:
            ratio = ratios.pop()
    return TableRow(which, g, n, scale, computed, printed, resolved, match, ratio)


def table_report(which: str, rows=None, ws=None):
    """Computed rows next to the printed ones, with a per-row verdict.

    ``rows`` selects ``n`` for the genus-one table and ``g`` for the other.
    """
    ws = as_workspace(ws)
    keys = tables.rows(which)
    if rows is not None:
        # genus-one rows are selected by n, the others by genus
        wanted = set(rows)
        pick = 1 if which == "g1" else 0
        keys = [k for k in keys if k[pick] in wanted]
    return [table_row(which, g, n, ws) for g, n in keys]
