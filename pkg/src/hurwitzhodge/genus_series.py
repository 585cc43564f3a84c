"""Truncated genus series and the operators of the join-cut equation.

A :class:`GenusSeries` stores the coefficient ``c(g, alpha)`` of
``p_alpha z^d x^g``.  With the normalization used throughout the package,

    c(g, alpha) = H(g, alpha) / (r! * |Aut alpha|),

where ``H(g, alpha) = F(g, alpha) / prod(alpha)`` and ``F`` counts the
transitive factorizations of one fixed permutation of cycle type ``alpha``.

The three right-hand operators come in two flavours: *push* (apply to a whole
series, used by :func:`joincut_residual`) and *pull* (coefficient of one
target key, used by the solver).  The two are written independently so the
residual is a genuine check on the solver.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, Mapping, Optional, Tuple

from .exact import (Partition, add_parts, partition, remove_part, sub_multisets,
                    transposition_count)

Key = Tuple[int, Partition]
Lookup = Callable[[int, Partition], Fraction]

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class GenusSeries:
    coeffs: Mapping[Key, Fraction] = field(default_factory=dict)
    d_max: int = 0
    g_max: int = 0

    def __post_init__(self):
        clean = {}
        for (g, alpha), c in self.coeffs.items():
            alpha = partition(alpha)
            if not alpha:
                raise ValueError("the empty partition has no series coefficient")
            if sum(alpha) > self.d_max or g > self.g_max or g < 0:
                raise ValueError(f"key {(g, alpha)} outside bounds d<={self.d_max}, g<={self.g_max}")
            c = Fraction(c)
            if c:
                clean[(g, alpha)] = clean.get((g, alpha), 0) + c
        object.__setattr__(self, "coeffs", {k: v for k, v in clean.items() if v})

    def __getitem__(self, key: Key) -> Fraction:
        g, alpha = key
        return self.coeffs.get((g, partition(alpha)), Fraction(0))

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def items(self):
        return self.coeffs.items()

    def __eq__(self, other):
        if not isinstance(other, GenusSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other: "GenusSeries") -> "GenusSeries":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return GenusSeries(out, max(self.d_max, other.d_max), max(self.g_max, other.g_max))

    def __sub__(self, other: "GenusSeries") -> "GenusSeries":
        return self + other.scale(-1)

    def scale(self, factor) -> "GenusSeries":
        factor = Fraction(factor)
        return GenusSeries({k: v * factor for k, v in self.coeffs.items()}, self.d_max, self.g_max)

    def is_zero(self) -> bool:
        return not self.coeffs

    def layers(self) -> Dict[int, Dict[Key, Fraction]]:
        """Group coefficients by transposition count ``r``."""
        out: Dict[int, Dict[Key, Fraction]] = defaultdict(dict)
        for (g, alpha), c in self.coeffs.items():
            out[transposition_count(g, alpha)][(g, alpha)] = c
        return dict(out)

    def restrict(self, keep: Callable[[int, Partition], bool]) -> "GenusSeries":
        return GenusSeries({k: v for k, v in self.coeffs.items() if keep(*k)}, self.d_max, self.g_max)


def _in_bounds(S: GenusSeries, g: int, alpha: Partition) -> bool:
    return sum(alpha) <= S.d_max and g <= S.g_max


def _collect(acc: Dict[Key, Fraction], S: GenusSeries) -> GenusSeries:
    return GenusSeries({k: v for k, v in acc.items() if v and _in_bounds(S, *k)}, S.d_max, S.g_max)


# ----------------------------------------------------------------- push form

def join_within(S: GenusSeries) -> GenusSeries:
    """Image of ``1/2 sum ij x p_{i+j} d^2/dp_i dp_j``."""
    acc: Dict[Key, Fraction] = defaultdict(Fraction)
    for (g, beta), c in S.items():
        if g + 1 > S.g_max:
            continue
        mult = Counter(beta)
        values = sorted(mult)
        for a, i in enumerate(values):
            for j in values[a:]:
                if i == j:
                    if mult[i] < 2:
                        continue
                    weight = HALF * i * i * mult[i] * (mult[i] - 1)
                else:
                    # ordered (i, j) and (j, i) contribute equally
                    weight = Fraction(i * j * mult[i] * mult[j])
                target = add_parts(remove_part(remove_part(beta, i), j), i + j)
                acc[(g + 1, target)] += weight * c
    return _collect(acc, S)


def join_across(S: GenusSeries) -> GenusSeries:
    """Image of ``1/2 sum ij p_{i+j} (dH/dp_i)(dH/dp_j)``."""
    acc: Dict[Key, Fraction] = defaultdict(Fraction)
    items = list(S.items())
    derivs = []
    for (g, beta), c in items:
        for i, m in Counter(beta).items():
            derivs.append((g, sum(beta), i, remove_part(beta, i), i * m * c))
    for g1, d1, i, rest1, a1 in derivs:
        for g2, d2, j, rest2, a2 in derivs:
            if g1 + g2 > S.g_max or d1 + d2 > S.d_max:
                continue
            target = add_parts(rest1 + rest2, i + j)
            acc[(g1 + g2, target)] += HALF * a1 * a2
    return _collect(acc, S)


def cut(S: GenusSeries) -> GenusSeries:
    """Image of ``1/2 sum (i+j) p_i p_j dH/dp_{i+j}``."""
    acc: Dict[Key, Fraction] = defaultdict(Fraction)
    for (g, beta), c in S.items():
        for k, m in Counter(beta).items():
            rest = remove_part(beta, k)
            for i in range(1, k):
                acc[(g, add_parts(rest, i, k - i))] += HALF * k * m * c
    return _collect(acc, S)


def lhs_eigenvalue(g: int, alpha) -> int:
    """Eigenvalue of ``z d/dz + 2x d/dx - 2 + sum p_i d/dp_i`` on ``p_alpha z^d x^g``."""
    return sum(alpha) + 2 * g - 2 + len(alpha)


def lhs(S: GenusSeries) -> GenusSeries:
    return GenusSeries({k: lhs_eigenvalue(*k) * v for k, v in S.items()}, S.d_max, S.g_max)


def joincut_residual(S: GenusSeries, max_r: Optional[int] = None) -> GenusSeries:
    """LHS minus RHS of the join-cut equation applied to ``S``.

    Every source key of a target ``(g, alpha)`` has degree ``<= d`` and genus
    ``<= g``, so inside the bounds each equation sees its whole dependency
    cone.  ``max_r`` further restricts to layers ``r <= max_r``, which is the
    region a partially filled series can be expected to satisfy.
    """
    res = lhs(S) - join_within(S) - join_across(S) - cut(S)
    if max_r is not None:
        res = res.restrict(lambda g, a: transposition_count(g, a) <= max_r)
    return res


# ----------------------------------------------------------------- pull form
# These accept any exact rational type from ``get`` (Fraction or gmpy2.mpq):
# weights are accumulated as integers and halved once at the end.

def join_within_at(get: Lookup, g: int, alpha: Partition):
    """Coefficient of ``p_alpha x^g`` in the join-within image."""
    if g < 1:
        return 0
    total = 0
    for k in set(alpha):
        rest = remove_part(alpha, k)
        for i in range(1, k):
            j = k - i
            beta = add_parts(rest, i, j)
            c = get(g - 1, beta)
            if not c:
                continue
            if i == j:
                m = beta.count(i)
                d2 = m * (m - 1)
            else:
                d2 = beta.count(i) * beta.count(j)
            total += (i * j * d2) * c
    return total / 2 if total else 0


def join_across_at(get: Lookup, g: int, alpha: Partition):
    """Coefficient of ``p_alpha x^g`` in the join-across image.

    Enumerates sub-multisets of ``alpha`` minus the joined part.
    """
    total = 0
    for k in set(alpha):
        if k < 2:
            continue
        rest = remove_part(alpha, k)
        splits = list(sub_multisets(rest))
        for i in range(1, k):
            j = k - i
            for gamma1, gamma2 in splits:
                beta1 = add_parts(gamma1, i)
                beta2 = add_parts(gamma2, j)
                inner = 0
                for g1 in range(g + 1):
                    c1 = get(g1, beta1)
                    if c1:
                        c2 = get(g - g1, beta2)
                        if c2:
                            inner += c1 * c2
                if inner:
                    total += (i * j * beta1.count(i) * beta2.count(j)) * inner
    return total / 2 if total else 0


def cut_at(get: Lookup, g: int, alpha: Partition):
    """Coefficient of ``p_alpha x^g`` in the cut image."""
    total = 0
    mult = Counter(alpha)
    values = sorted(mult)
    for a, i in enumerate(values):
        for j in values[a:]:
            if i == j and mult[i] < 2:
                continue
            k = i + j
            beta = add_parts(remove_part(remove_part(alpha, i), j), k)
            c = get(g, beta)
            if not c:
                continue
            ordered = 1 if i == j else 2
            total += (ordered * k * beta.count(k)) * c
    return total / 2 if total else 0


def rhs_at(get: Lookup, g: int, alpha: Partition):
    return join_within_at(get, g, alpha) + join_across_at(get, g, alpha) + cut_at(get, g, alpha)


def series_from(values: Iterable[Tuple[Key, Fraction]], d_max: int, g_max: int) -> GenusSeries:
    return GenusSeries(dict(values), d_max, g_max)
