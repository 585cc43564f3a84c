"""Exact scalars, integer partitions and permutations.

Everything numeric in this package is a :class:`fractions.Fraction` (always
in lowest terms, positive denominator).  Partitions are plain tuples of
ints, weakly decreasing; zero-padded partitions are tuples that may end in
zeros and whose length is significant.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Iterator, Optional, Sequence, Tuple

Rational = Fraction
Partition = Tuple[int, ...]
ZeroPaddedPartition = Tuple[int, ...]
Permutation = Tuple[int, ...]


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`."""
    return Fraction(text.strip())


def format_rational(value) -> str:
    """Render as ``num/den`` (or ``num`` for integers); never a decimal."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# ---------------------------------------------------------------- partitions

def partition(parts: Iterable[int]) -> Partition:
    """Canonicalize ``parts`` into a weakly decreasing tuple of positive ints."""
    out = tuple(sorted((int(p) for p in parts), reverse=True))
    if out and out[-1] < 1:
        raise ValueError(f"partition parts must be positive: {out}")
    return out


def zero_padded(parts: Iterable[int], length: Optional[int] = None) -> ZeroPaddedPartition:
    parts = sorted((int(p) for p in parts), reverse=True)
    if parts and parts[-1] < 0:
        raise ValueError(f"parts must be non-negative: {parts}")
    if length is not None:
        if len(parts) > length:
            if any(parts[length:]):
                raise ValueError(f"{parts} has more than {length} nonzero parts")
            parts = parts[:length]
        parts = parts + [0] * (length - len(parts))
    return tuple(parts)


def multiplicities(parts: Sequence[int]) -> Counter:
    return Counter(parts)


def transposition_count(g: int, alpha: Sequence[int]) -> int:
    """Number of simple branch points, ``d + n + 2g - 2``.

    A negative value means no such cover exists; it is returned, not raised.
    """
    return sum(alpha) + len(alpha) + 2 * g - 2


def aut_order(beta: Sequence[int]) -> int:
    """Order of the stabilizer of ``beta`` under coordinate permutations.

    Zero entries count like any other value.
    """
    return prod(factorial(m) for m in Counter(beta).values())


def class_size(alpha: Sequence[int]) -> int:
    """Size of the conjugacy class of cycle type ``alpha`` in S_d."""
    d = sum(alpha)
    return factorial(d) // (prod(alpha) * aut_order(alpha))


def _partitions_of(d: int, max_part: int, max_parts: Optional[int]) -> Iterator[Partition]:
    # reverse-lexicographic: largest first part first
    if d == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(d, max_part), 0, -1):
        if max_parts is not None and first * max_parts < d:
            break
        rest_max = None if max_parts is None else max_parts - 1
        for rest in _partitions_of(d - first, first, rest_max):
            yield (first,) + rest


def partitions_of(d: int, max_parts: Optional[int] = None, exact_parts: Optional[int] = None,
                  max_part: Optional[int] = None) -> list[Partition]:
    """Partitions of exactly ``d`` in reverse-lexicographic order."""
    cap = d if max_part is None else max_part
    limit = max_parts
    if exact_parts is not None:
        limit = exact_parts if limit is None else min(limit, exact_parts)
    out = [p for p in _partitions_of(d, cap, limit)]
    if exact_parts is not None:
        out = [p for p in out if len(p) == exact_parts]
    return out


def enumerate_partitions(d_max: int, max_parts: Optional[int] = None,
                         exact_parts: Optional[int] = None,
                         max_part: Optional[int] = None) -> list[Partition]:
    """All partitions of every ``d <= d_max`` meeting the constraints.

    Graded reverse-lexicographic order: by ``d`` ascending, then reverse lex.
    The empty partition of 0 is included unless ``exact_parts`` is set
    (to a positive value).
    """
    if d_max < 0:
        raise ValueError("d_max must be non-negative")
    out: list[Partition] = []
    for d in range(d_max + 1):
        out.extend(partitions_of(d, max_parts=max_parts, exact_parts=exact_parts, max_part=max_part))
    return out


def partition_order_key(alpha: Sequence[int]):
    """Sort key realizing the graded reverse-lexicographic order."""
    return (sum(alpha), tuple(-a for a in alpha))


def zero_padded_partitions(total: int, length: int) -> list[ZeroPaddedPartition]:
    """Partitions of ``total`` with at most ``length`` parts, padded to ``length``."""
    return [p + (0,) * (length - len(p)) for p in partitions_of(total, max_parts=length)]


def remove_part(alpha: Sequence[int], part: int) -> Partition:
    parts = list(alpha)
    parts.remove(part)
    return tuple(parts)


def add_parts(alpha: Sequence[int], *new: int) -> Partition:
    return tuple(sorted((*alpha, *new), reverse=True))


def sub_multisets(alpha: Sequence[int]) -> Iterator[Tuple[Partition, Partition]]:
    """Yield every split of the multiset ``alpha`` into ``(gamma1, gamma2)``.

    One choice per value count, so there are ``prod(m_j + 1)`` splits,
    never ``2**len(alpha)``.
    """
    items = sorted(Counter(alpha).items(), reverse=True)

    def rec(i):
        if i == len(items):
            yield (), ()
            return
        value, mult = items[i]
        for left, right in rec(i + 1):
            for k in range(mult + 1):
                yield (value,) * k + left, (value,) * (mult - k) + right

    yield from rec(0)


# -------------------------------------------------------------- permutations
# Permutations act on {0..d-1} as tuples of images.  Composition is
# (s * t)(i) = s(t(i)): the right factor acts first.

def identity(d: int) -> Permutation:
    return tuple(range(d))


def compose(s: Permutation, t: Permutation) -> Permutation:
    return tuple(s[t[i]] for i in range(len(t)))


def inverse(s: Permutation) -> Permutation:
    out = [0] * len(s)
    for i, si in enumerate(s):
        out[si] = i
    return tuple(out)


def transposition(d: int, a: int, b: int) -> Permutation:
    images = list(range(d))
    images[a], images[b] = b, a
    return tuple(images)


def cycles(s: Permutation) -> list[Tuple[int, ...]]:
    seen = [False] * len(s)
    out = []
    for start in range(len(s)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = s[i]
        out.append(tuple(cyc))
    return out


def cycle_type(s: Permutation) -> Partition:
    return partition(len(c) for c in cycles(s))


def canonical_permutation(alpha: Sequence[int]) -> Permutation:
    """Cycles laid out on consecutive points, largest part first."""
    alpha = partition(alpha)
    images = []
    start = 0
    for part in alpha:
        images.extend(range(start + 1, start + part))
        images.append(start)
        start += part
    return tuple(images)
