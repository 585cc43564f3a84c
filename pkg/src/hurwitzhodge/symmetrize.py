"""Symmetrization of the degree-``n`` Hurwitz series.

The symmetrizer sends ``p_alpha z^d`` (``n`` parts) to the sum of
``x_{s(1)}^{alpha_1} ... x_{s(n)}^{alpha_n}`` over all ``s`` in S_n.  Since a
monomial ``x^a`` arises ``|Aut alpha|`` times, its coefficient in the
symmetrized genus-``g`` series is ``H(g, sort(a)) / r!``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Dict, Tuple

from .exact import Partition, enumerate_partitions, transposition_count
from .hurwitz import HurwitzCache


class CacheIncomplete(LookupError):
    pass


@dataclass(frozen=True)
class SymmetrizedSeries:
    g: int
    n: int
    D: int
    coeffs: Dict[Partition, Fraction]  # sorted exponent tuple -> coefficient

    def coefficient(self, a) -> Fraction:
        return self.coeffs.get(tuple(sorted(a, reverse=True)), Fraction(0))

    def expanded(self) -> Dict[Tuple[int, ...], Fraction]:
        """Coefficient of every exponent vector (all orderings)."""
        out = {}
        for alpha, c in self.coeffs.items():
            for a in set(permutations(alpha)):
                out[a] = c
        return out


def symmetrize(g: int, n: int, D: int, cache: HurwitzCache) -> SymmetrizedSeries:
    coeffs = {}
    for alpha in enumerate_partitions(D, exact_parts=n):
        if not cache.covers(g, alpha):
            raise CacheIncomplete(f"no Hurwitz number for g={g}, alpha={alpha}")
        H = cache.H(g, alpha)
        if H:
            coeffs[alpha] = H / factorial(transposition_count(g, alpha))
    return SymmetrizedSeries(g, n, D, coeffs)
