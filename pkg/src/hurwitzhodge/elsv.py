"""Polynomiality of Hurwitz numbers, Witten symbols and the lambda_g check.

For ``n, g >= 1`` or ``g = 0, n >= 3``,

    H(g, alpha) = r! * prod(alpha_i^alpha_i / alpha_i!) * P_{g,n}(alpha)

with ``P_{g,n}`` symmetric of degree at most ``3g - 3 + n``.  We recover
``P_{g,n}`` exactly by interpolation in the monomial symmetric basis; its
coefficients are signed Witten symbols ``(-1)^k <tau_b lambda_k>_g``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, permutations
from math import comb, factorial
from typing import Dict, List, Optional, Sequence, Tuple

from .exact import (Partition, ZeroPaddedPartition, format_rational, partition, partitions_of,
                    transposition_count, zero_padded, zero_padded_partitions)
from .onevar import phi
from .sympoly import m_basis, multinomial
from .symmetrize import symmetrize
from .workspace import Workspace, as_workspace


class InvalidRange(ValueError):
    pass


class SingularSystem(ArithmeticError):
    pass


class PolynomialityViolation(ArithmeticError):
    pass


class DimensionViolation(ArithmeticError):
    pass


class MissingWittenEntries(LookupError):
    pass


HELD_OUT = 10


def check_range(g: int, n: int):
    if not ((g >= 1 and n >= 1) or (g == 0 and n >= 3)):
        raise InvalidRange(f"(g, n) = ({g}, {n}) is outside n,g >= 1 or g = 0, n >= 3")


def top_degree(g: int, n: int) -> int:
    return 3 * g - 3 + n


def lowest_degree(g: int, n: int) -> int:
    return max(0, 2 * g - 3 + n)


def elsv_weight(alpha: Sequence[int]) -> Fraction:
    """``prod(alpha_i^alpha_i / alpha_i!)``."""
    out = Fraction(1)
    for a in alpha:
        out *= Fraction(a ** a, factorial(a))
    return out


# ---------------------------------------------------------------- evaluation

def eval_P(g: int, alpha, ws=None) -> Fraction:
    """``P_{g,n}(alpha)`` from the solved Hurwitz number."""
    alpha = partition(alpha)
    check_range(g, len(alpha))
    ws = as_workspace(ws)
    ws.ensure(sum(alpha), g, len(alpha))
    H = ws.cache.H(g, alpha)
    return H / (factorial(transposition_count(g, alpha)) * elsv_weight(alpha))


@dataclass
class SymmetricAlphaPolynomial:
    g: int
    n: int
    coeffs: Dict[ZeroPaddedPartition, Fraction]
    window: Tuple[int, int]
    fit_points: List[Partition] = field(default_factory=list)
    held_out: List[Partition] = field(default_factory=list)

    def __call__(self, alpha) -> Fraction:
        return sum((c * _m_value(beta, alpha) for beta, c in self.coeffs.items()), Fraction(0))

    def nonzero(self) -> Dict[ZeroPaddedPartition, Fraction]:
        return {b: c for b, c in self.coeffs.items() if c}

    def degree_part(self, degree: int) -> Dict[ZeroPaddedPartition, Fraction]:
        return {b: c for b, c in self.coeffs.items() if sum(b) == degree and c}


def _m_value(beta: Sequence[int], point: Sequence[int]) -> Fraction:
    return m_basis(beta, len(point)).evaluate(point)


def grid_size(g: int, n: int) -> int:
    """Smallest ``s`` with enough sorted ``n``-tuples from ``{1..s}``.

    ``s`` is also kept above the top degree: a symmetric polynomial such as
    ``sum_i prod_{j <= s} (alpha_i - j)`` vanishes on the whole grid
    ``{1..s}^n``, while ``s > degree`` makes the grid unisolvent.
    """
    unknowns = sum(len(zero_padded_partitions(k, n)) for k in range(top_degree(g, n) + 1))
    s = top_degree(g, n) + 1
    while comb(s + n - 1, n) < unknowns + HELD_OUT:
        s += 1
    return s


def _size(q: Fraction) -> int:
    return q.numerator.bit_length() + q.denominator.bit_length()


def solve_exact(rows: List[List[Fraction]], rhs: List[Fraction]):
    """Exact elimination on an overdetermined consistent system.

    Returns ``(solution, pivot_rows)``.  Pivot choice: among candidate rows,
    the entry of smallest bit size.  Raises :class:`SingularSystem` if the
    columns are not independent.
    """
    m = len(rows[0]) if rows else 0
    A = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots: List[int] = []
    used = set()
    for col in range(m):
        best = None
        for i, row in enumerate(A):
            if i in used or not row[col]:
                continue
            if best is None or _size(row[col]) < _size(A[best][col]):
                best = i
        if best is None:
            raise SingularSystem(f"column {col} has no pivot")
        used.add(best)
        pivots.append(best)
        prow = A[best]
        inv = 1 / prow[col]
        for j in range(col, m + 1):
            prow[j] *= inv
        for i, row in enumerate(A):
            if i != best and row[col]:
                f = row[col]
                for j in range(col, m + 1):
                    if prow[j]:
                        row[j] -= f * prow[j]
    solution = [A[pivots[col]][m] for col in range(m)]
    return solution, pivots


def interpolate_P(g: int, n: int, ws=None) -> SymmetricAlphaPolynomial:
    """Exact ``P_{g,n}`` in the monomial symmetric basis of ``alpha``."""
    check_range(g, n)
    ws = as_workspace(ws)
    return ws.cached(("P", g, n), lambda: _interpolate(g, n, ws))


def _interpolate(g: int, n: int, ws: Workspace) -> SymmetricAlphaPolynomial:
    top = top_degree(g, n)
    basis = [beta for k in range(top + 1) for beta in zero_padded_partitions(k, n)]
    s = grid_size(g, n)
    points = [partition(t) for t in combinations_with_replacement(range(s, 0, -1), n)]
    points.sort(key=lambda a: (max(a), sum(a), a))
    ws.ensure(n * s, g, n)
    values = [eval_P(g, a, ws) for a in points]
    rows = [[_m_value(beta, a) for beta in basis] for a in points]
    solution, pivots = solve_exact(rows, values)
    coeffs = dict(zip(basis, solution))
    poly = SymmetricAlphaPolynomial(g, n, coeffs, (lowest_degree(g, n), top))
    chosen = set(pivots)
    poly.fit_points = [points[i] for i in sorted(chosen)]
    poly.held_out = [points[i] for i in range(len(points)) if i not in chosen]
    if len(poly.held_out) < HELD_OUT:
        raise SingularSystem("not enough held-out points")
    for i, a in enumerate(points):
        if poly(a) != values[i]:
            kind = "held-out" if i not in chosen else "fitting"
            raise PolynomialityViolation(f"P_{g},{n} misses the {kind} point {a}")
    low, high = poly.window
    for beta, c in coeffs.items():
        if c and not (low <= sum(beta) <= high):
            raise PolynomialityViolation(
                f"P_{g},{n} has a degree-{sum(beta)} term outside [{low}, {high}]")
    return poly


# ------------------------------------------------------------------- Witten

@dataclass
class WittenTable:
    """``<tau_b lambda_k>_g`` keyed by ``(g, k, b)`` with ``b`` zero-padded.

    ``covered`` lists the ``(g, n, k)`` blocks that were extracted; inside a
    covered block a missing entry is zero.
    """
    entries: Dict[Tuple[int, int, ZeroPaddedPartition], Fraction] = field(default_factory=dict)
    covered: set = field(default_factory=set)

    def get(self, g: int, k: int, b: Sequence[int]) -> Fraction:
        b = zero_padded(b, len(b))
        n = len(b)
        if k < 0 or k > g or sum(b) != 3 * g - 3 + n - k:
            return Fraction(0)
        if (g, n, k) not in self.covered:
            raise MissingWittenEntries(f"no Witten symbols for g={g}, n={n}, k={k}")
        return self.entries.get((g, k, b), Fraction(0))

    def update(self, other: "WittenTable") -> "WittenTable":
        self.entries.update(other.entries)
        self.covered |= other.covered
        return self

    def records(self):
        out = []
        for (g, k, b), v in sorted(self.entries.items(), key=lambda t: (t[0][0], len(t[0][2]), t[0][1], tuple(-x for x in t[0][2]))):
            out.append({"g": g, "k": k, "b": list(b), "value": format_rational(v)})
        return out

    def to_json(self) -> str:
        return "\n".join(json.dumps(r, sort_keys=True) for r in self.records()) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "WittenTable":
        table = cls()
        for line in text.splitlines():
            if not line.strip():
                continue
            rec = json.loads(line)
            b = zero_padded(rec["b"], len(rec["b"]))
            table.entries[(rec["g"], rec["k"], b)] = Fraction(rec["value"])
            table.covered.add((rec["g"], len(b), rec["k"]))
        return table


def extract_witten(P: SymmetricAlphaPolynomial) -> WittenTable:
    g, n = P.g, P.n
    table = WittenTable()
    for beta, c in P.coeffs.items():
        k = top_degree(g, n) - sum(beta)
        if not 0 <= k <= g:
            if c:
                raise DimensionViolation(f"coefficient of m_{beta} implies k={k}")
            continue
        table.entries[(g, k, beta)] = (-1) ** k * c
    for k in range(g + 1):
        if top_degree(g, n) - k >= 0:
            table.covered.add((g, n, k))
    return table


def witten_table(g: int, n: int, ws=None) -> WittenTable:
    ws = as_workspace(ws)
    return ws.cached(("W", g, n), lambda: extract_witten(interpolate_P(g, n, ws)))


# ----------------------------------------------------------------- lambda_g

@dataclass
class LambdaGReport:
    g: int
    n: int
    c_g: Optional[Fraction]
    passed: bool
    lowest_part: Dict[ZeroPaddedPartition, Fraction]

    def line(self) -> str:
        c = "?" if self.c_g is None else format_rational(self.c_g)
        return f"g={self.g} n={self.n} c_g={c} {'PASS' if self.passed else 'FAIL'}"


def lambda_g_check(g: int, n: int, ws=None) -> LambdaGReport:
    """Lowest-degree part of ``P_{g,n}`` against ``(-1)^g c_g (sum alpha)^(2g-3+n)``."""
    if g < 1 or n < 1:
        raise InvalidRange("lambda_g check needs g, n >= 1")
    ws = as_workspace(ws)
    P = interpolate_P(g, n, ws)
    low = 2 * g - 3 + n
    part = {beta: P.coeffs.get(beta, Fraction(0)) for beta in zero_padded_partitions(low, n)}
    lead = zero_padded((low,), n)
    c = (-1) ** g * part[lead]
    passed = all(v == (-1) ** g * c * multinomial(low, beta) for beta, v in part.items())
    return LambdaGReport(g, n, c if passed else None, passed, part)


def c_g(g: int, ws=None) -> Fraction:
    """``<tau_{2g-2} lambda_g>_g``, always computed from the n = 1 check."""
    ws = as_workspace(ws)

    def build():
        report = lambda_g_check(g, 1, ws)
        if not report.passed or report.c_g is None:
            raise PolynomialityViolation(f"lambda_g check failed for g={g}, n=1")
        return report.c_g

    return ws.cached(("c", g), build)


# ------------------------------------------------------------------- ansatz

def ansatz_coefficients(g: int, n: int, order: int, table: WittenTable) -> Dict[Partition, Fraction]:
    """Coefficients of the symmetrized series rebuilt from Witten symbols.

    The coefficient of ``x^a`` is
    ``sum_k sum_b (-1)^k <tau_b lambda_k>_g prod_i [x^{a_i}] phi_{b_i}``
    over ordered ``b``.
    """
    top = top_degree(g, n)
    phis = {b: phi(b, order) for b in range(top + 1)}
    compositions = []
    for k in range(g + 1):
        total = top - k
        if total < 0:
            continue
        for beta in zero_padded_partitions(total, n):
            value = table.get(g, k, beta)
            if not value:
                continue
            for b in set(permutations(beta)):
                compositions.append(((-1) ** k * value, b))
    out: Dict[Partition, Fraction] = {}
    for d in range(n, order + 1):
        for alpha in partitions_of(d, exact_parts=n):
            acc = Fraction(0)
            for w, b in compositions:
                term = w
                for a_i, b_i in zip(alpha, b):
                    term *= phis[b_i][a_i]
                acc += term
            if acc:
                out[alpha] = acc
    return out


def verify_genus_ansatz(g: int, n: int, order: int, ws=None) -> bool:
    """Rebuild the symmetrized series from Witten symbols and compare with the
    direct symmetrization of solved Hurwitz numbers up to total degree ``order``."""
    check_range(g, n)
    ws = as_workspace(ws)
    table = witten_table(g, n, ws)
    rebuilt = ansatz_coefficients(g, n, order, table)
    ws.ensure(order, g, n)
    direct = symmetrize(g, n, order, ws.cache).coeffs
    return rebuilt == direct
