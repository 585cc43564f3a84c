"""Hurwitz numbers: brute-force factorization oracle, join-cut solver, cache.

Convention: ``H(g, alpha) = F(g, alpha) / prod(alpha)`` where ``F`` is the
number of ordered transitive factorizations of one fixed permutation of
cycle type ``alpha`` into ``r = d + n + 2g - 2`` transpositions.
"""
from __future__ import annotations

import json
import logging
import os
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial, prod
from typing import Dict, Iterable, Optional, Tuple

from .exact import (Partition, aut_order, canonical_permutation, compose, enumerate_partitions,
                    format_rational, parse_rational, partition, partition_order_key,
                    transposition_count)
from .genus_series import GenusSeries, rhs_at

try:  # several times faster than Fraction in the solver's inner loop
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10 ** 7
CACHE_FORMAT = "hurwitzhodge-cache"
CACHE_VERSION = 1
NORMALIZATION = "F-over-prod-alpha"


class BudgetExceeded(RuntimeError):
    pass


class InvalidDomain(ValueError):
    pass


class CacheError(ValueError):
    pass


@dataclass(frozen=True)
class HurwitzValue:
    g: int
    alpha: Partition
    r: int
    H: Fraction
    provenance: str  # "oracle" | "solver" | "cache"
    F: Optional[int] = None


# -------------------------------------------------------------------- oracle

def _transpositions(d: int):
    return list(combinations(range(d), 2))


def _is_transitive(d: int, pairs) -> bool:
    parent = list(range(d))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    components = d
    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            components -= 1
    return components == 1


def oracle_count_F(g: int, alpha, budget: int = DEFAULT_BUDGET,
                   sigma: Optional[Tuple[int, ...]] = None) -> int:
    """Count ordered transitive r-tuples of transpositions with product ``sigma``.

    ``sigma`` defaults to the canonical permutation of cycle type ``alpha``.
    The last factor is determined by the first ``r - 1``, so only
    ``T**(r-1)`` tuples are visited, but the budget is checked against the
    full ``T**r`` search space.
    """
    alpha = partition(alpha)
    d = sum(alpha)
    r = transposition_count(g, alpha)
    if r < 0:
        raise InvalidDomain(f"r = {r} < 0 for g={g}, alpha={alpha}")
    trans = _transpositions(d)
    if len(trans) ** r > budget:
        raise BudgetExceeded(f"search space {len(trans)}^{r} exceeds budget {budget}")
    if sigma is None:
        sigma = canonical_permutation(alpha)
    if r == 0:
        return int(d == 1 and sigma == (0,))

    # tau_1 ... tau_r = sigma, so tau_r = (tau_1 ... tau_{r-1})^{-1} sigma
    index = {}
    for a, b in trans:
        images = list(range(d))
        images[a], images[b] = b, a
        index[tuple(images)] = (a, b)
    perm_of = {pair: perm for perm, pair in index.items()}

    count = 0
    chosen = []

    def rec(prefix_inv, depth):
        # prefix_inv is (tau_1 ... tau_depth)^{-1}
        nonlocal count
        if depth == r - 1:
            last = index.get(compose(prefix_inv, sigma))
            if last is not None and _is_transitive(d, chosen + [last]):
                count += 1
            return
        for pair in trans:
            chosen.append(pair)
            # (P t)^{-1} = t P^{-1}
            rec(compose(perm_of[pair], prefix_inv), depth + 1)
            chosen.pop()

    rec(tuple(range(d)), 0)
    return count


def hurwitz_oracle(g: int, alpha, budget: int = DEFAULT_BUDGET) -> HurwitzValue:
    alpha = partition(alpha)
    F = oracle_count_F(g, alpha, budget)
    return HurwitzValue(g, alpha, transposition_count(g, alpha), Fraction(F, prod(alpha)), "oracle", F)


def oracle_feasible(g: int, alpha, budget: int = DEFAULT_BUDGET) -> bool:
    d = sum(alpha)
    r = transposition_count(g, alpha)
    return r >= 0 and (d * (d - 1) // 2) ** r <= budget


# --------------------------------------------------------------------- cache

@dataclass
class HurwitzCache:
    """Solved Hurwitz numbers keyed by ``(g, alpha)``.

    Every solved key is stored, zeros included, so coverage is a per-key
    question.  The header bounds describe the bounding box of all solves;
    ``max_weight`` is set when every solve was restricted to
    ``g + len(alpha) <= max_weight``.
    """
    d_max: int = 0
    g_max: int = 0
    max_weight: Optional[int] = None
    entries: Dict[Tuple[int, Partition], Fraction] = field(default_factory=dict)

    def covers(self, g: int, alpha) -> bool:
        return (g, partition(alpha)) in self.entries

    def H(self, g: int, alpha) -> Fraction:
        alpha = partition(alpha)
        try:
            return self.entries[(g, alpha)]
        except KeyError:
            raise CacheError(f"cache does not cover g={g}, alpha={alpha}") from None

    def coefficient(self, g: int, alpha) -> Fraction:
        alpha = partition(alpha)
        h = self.entries.get((g, alpha))
        if not h:
            return Fraction(0)
        return h / (factorial(transposition_count(g, alpha)) * aut_order(alpha))

    def series(self) -> GenusSeries:
        return GenusSeries({k: self.coefficient(*k) for k in self.entries}, self.d_max, self.g_max)

    def header(self) -> dict:
        return {"format": CACHE_FORMAT, "version": CACHE_VERSION, "d_max": self.d_max,
                "g_max": self.g_max, "max_weight": self.max_weight,
                "normalization": NORMALIZATION}

    def sorted_keys(self):
        return sorted(self.entries, key=lambda k: (transposition_count(*k), k[0],
                                                   partition_order_key(k[1])))

    def dumps(self) -> str:
        lines = [json.dumps(self.header(), sort_keys=True)]
        for g, alpha in self.sorted_keys():
            lines.append(json.dumps({"g": g, "alpha": list(alpha),
                                     "H": format_rational(self.entries[(g, alpha)])},
                                    sort_keys=True))
        return "\n".join(lines) + "\n"

    def save(self, path) -> None:
        """Write atomically (temp file then rename)."""
        path = os.fspath(path)
        directory = os.path.dirname(os.path.abspath(path))
        fd, tmp = tempfile.mkstemp(prefix=".hwz-", dir=directory)
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(self.dumps())
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    @classmethod
    def loads(cls, text: str) -> "HurwitzCache":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise CacheError("empty cache file")
        header = json.loads(lines[0])
        if header.get("format") != CACHE_FORMAT:
            raise CacheError(f"unknown cache format {header.get('format')!r}")
        if header.get("version") != CACHE_VERSION:
            raise CacheError(f"unsupported cache version {header.get('version')!r}")
        if header.get("normalization") != NORMALIZATION:
            raise CacheError(f"cache normalization {header.get('normalization')!r} "
                             f"!= {NORMALIZATION!r}")
        cache = cls(header["d_max"], header["g_max"], header.get("max_weight"))
        for line in lines[1:]:
            rec = json.loads(line)
            cache.entries[(rec["g"], partition(rec["alpha"]))] = parse_rational(rec["H"])
        return cache

    @classmethod
    def load(cls, path) -> "HurwitzCache":
        with open(path) as fh:
            return cls.loads(fh.read())


# -------------------------------------------------------------------- solver

def _closure_keys(d_max: int, g_max: int, max_weight: Optional[int]):
    keys = []
    for alpha in enumerate_partitions(d_max, max_parts=max_weight):
        if not alpha:
            continue
        for g in range(g_max + 1):
            if max_weight is None or g + len(alpha) <= max_weight:
                keys.append((g, alpha))
    keys.sort(key=lambda k: (transposition_count(*k), k[0], partition_order_key(k[1])))
    return keys


def solve_closure(d_max: int, g_max: int, cache: Optional[HurwitzCache] = None,
                  max_weight: Optional[int] = None) -> HurwitzCache:
    """Solve the join-cut recursion for every key within the bounds.

    Keys are processed in increasing ``r``; the right-hand side at a key only
    involves keys of layer ``r - 1``, and every source of ``(g, alpha)`` has
    degree ``<= d``, genus ``<= g`` and ``g' + n' <= g + n``.  So the region
    ``d <= d_max, g <= g_max`` (optionally ``g + n <= max_weight``) is closed
    and can be solved on its own.  An existing cache is extended in place;
    keys it already holds are reused, not recomputed.
    """
    if d_max < 1 or g_max < 0:
        raise ValueError("need d_max >= 1 and g_max >= 0")
    fresh = cache is None or not cache.entries
    if cache is None:
        cache = HurwitzCache()
    coeff = {}
    for key in cache.entries:
        c = cache.coefficient(*key)
        if c:
            coeff[key] = _Q(c.numerator, c.denominator)
    get = lambda g, alpha: coeff.get((g, alpha), 0)  # noqa: E731

    added = 0
    for g, alpha in _closure_keys(d_max, g_max, max_weight):
        if (g, alpha) in cache.entries:
            continue
        r = transposition_count(g, alpha)
        value = _Q(1) if r == 0 else _Q(rhs_at(get, g, alpha)) / r
        if value:
            coeff[(g, alpha)] = value
        H = value * (factorial(r) * aut_order(alpha))
        cache.entries[(g, alpha)] = Fraction(int(H.numerator), int(H.denominator))
        added += 1

    if fresh:
        cache.max_weight = max_weight
    elif cache.max_weight is not None:
        cache.max_weight = None if max_weight is None else max(cache.max_weight, max_weight)
    cache.d_max = max(cache.d_max, d_max)
    cache.g_max = max(cache.g_max, g_max)
    log.debug("solve_closure: %d new keys (d_max=%d, g_max=%d, max_weight=%s)",
              added, d_max, g_max, max_weight)
    return cache


def hurwitz_solve(g: int, alpha, cache: Optional[HurwitzCache] = None) -> HurwitzValue:
    """Hurwitz number from the join-cut recursion (total function).

    Solves (and stores into ``cache``) the minimal closed region containing
    the key: degree ``<= d``, genus ``<= g``, ``g' + n' <= g + n``.
    """
    alpha = partition(alpha)
    r = transposition_count(g, alpha)
    if r < 0 or not alpha:
        return HurwitzValue(g, alpha, r, Fraction(0), "solver")
    if cache is not None and cache.covers(g, alpha):
        return HurwitzValue(g, alpha, r, cache.H(g, alpha), "cache")
    cache = solve_closure(sum(alpha), g, cache, max_weight=g + len(alpha))
    return HurwitzValue(g, alpha, r, cache.H(g, alpha), "solver")
