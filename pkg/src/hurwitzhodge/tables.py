"""Reference rows for the coefficient tables of ``Lambda^g_{n,1}``.

Rows are stored exactly as printed, as ``{partition: coefficient}`` with
partitions written without zero parts.  Two printed terms are degree
inconsistent with the rest of their row; ``RESOLUTIONS`` records the term
the computation puts in their place.
"""
from __future__ import annotations

from typing import Dict, Tuple

Row = Dict[Tuple[int, ...], int]

# 24 * Lambda^1_{n,1}
GENUS_ONE: Dict[int, Row] = {
    1: {(2,): -1},
    2: {(3, 1): 1, (2, 2): 1},
    3: {(4, 1, 1): -1, (3, 2, 1): -2, (2, 2): -2},
    4: {(5, 1, 1, 1): -2, (4, 2, 1, 1): 3, (3, 3, 1, 1): 4, (3, 2, 2, 1): 6, (2, 2, 2, 2): 6},
    5: {(6, 1, 1, 1, 1): 34, (5, 2, 1, 1, 1): 8, (4, 2, 2, 1, 1): -12, (3, 3, 2, 1, 1): -16,
        (3, 2, 2, 2, 1): -24, (2, 2, 2, 2, 2): -24},
    6: {(7, 1, 1, 1, 1, 1): -324, (6, 2, 1, 1, 1, 1): -170, (5, 3, 1, 1, 1, 1): -112,
        (5, 2, 2, 1, 1, 1): -40, (4, 4, 1, 1, 1, 1): -96, (4, 2, 2, 2, 1, 1): 60,
        (3, 3, 3, 1, 1, 1): 24, (3, 3, 2, 2, 1, 1): 80, (3, 2, 2, 2, 2, 1): 120,
        (2, 2, 2, 2, 2, 2): 120},
}

# "c_g^{-1}" Lambda^g_{n,1}, keyed by (g, n)
HIGHER_GENUS: Dict[Tuple[int, int], Row] = {
    (2, 1): {(4,): 37},
    (2, 2): {(5, 1): -106, (4, 2): -111, (3, 3): -116},
    (2, 3): {(6, 1, 1): 362, (5, 2, 1): 424, (4, 3, 2): 444, (4, 2, 2): 444, (3, 3, 2): 464},
    (3, 1): {(6,): -3426},
    (3, 2): {(7, 1): 16836, (6, 2): 17130, (5, 3): 17424, (4, 4): 17424},
    (4, 1): {(8,): 61164},
    (4, 2): {(9, 1): -4249232, (8, 2): -4278148, (7, 3): -4307064, (6, 4): -4311180,
             (5, 5): -4315296},
    (5, 1): {(10,): -180519696},
    (5, 2): {(11, 1): 1619765280, (10, 2): 1624677264, (9, 3): 1629589248, (8, 4): 1630276704,
             (7, 5): 1630964160, (6, 6): 1630964160},
}

# printed term -> term found by computation, per row
RESOLUTIONS: Dict[Tuple[str, Tuple[int, int]], Dict[Tuple[int, ...], Tuple[int, ...]]] = {
    ("g1", (1, 3)): {(2, 2): (2, 2, 2)},
    ("higher", (2, 3)): {(4, 3, 2): (4, 3, 1)},
}


def printed_row(which: str, g: int, n: int) -> Row:
    if which == "g1":
        if g != 1:
            raise KeyError("genus-one table only")
        return dict(GENUS_ONE[n])
    return dict(HIGHER_GENUS[(g, n)])


def rows(which: str):
    if which == "g1":
        return [(1, n) for n in sorted(GENUS_ONE)]
    if which == "higher":
        return sorted(HIGHER_GENUS)
    raise KeyError(which)


def degree_consistent(row: Row, n: int, degree: int) -> Dict[Tuple[int, ...], bool]:
    return {beta: len(beta) <= n and sum(beta) == degree for beta in row}
