"""Sparse exact polynomials in ``y_1..y_n`` and symmetric-function bases.

A :class:`SymPoly` is a map from exponent tuples to Fractions.  The frame
marker says whether the variables are ``y_j`` or the shifted ``u_j = y_j - 1``;
:meth:`SymPoly.to_frame` converts exactly between the two.
"""
from __future__ import annotations

import json
from collections import Counter, defaultdict
from fractions import Fraction
from itertools import permutations
from math import comb, factorial
from typing import Callable, Dict, Iterable, Mapping, Optional, Sequence, Tuple

from .exact import (ZeroPaddedPartition, aut_order, format_rational, zero_padded,
                    zero_padded_partitions)

Exponent = Tuple[int, ...]


class NotSymmetric(ValueError):
    pass


class NotDivisible(ArithmeticError):
    pass


class SymPoly:
    __slots__ = ("n", "terms", "frame")

    def __init__(self, n: int, terms: Optional[Mapping[Exponent, object]] = None, frame: str = "y"):
        if frame not in ("y", "u"):
            raise ValueError(f"unknown frame {frame!r}")
        self.n = n
        self.frame = frame
        clean: Dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent {e} has length != {n}")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    # -- construction
    @classmethod
    def zero(cls, n: int, frame: str = "y") -> "SymPoly":
        return cls(n, {}, frame)

    @classmethod
    def constant(cls, n: int, c, frame: str = "y") -> "SymPoly":
        return cls(n, {(0,) * n: c}, frame)

    @classmethod
    def monomial(cls, exponent: Sequence[int], c=1, frame: str = "y") -> "SymPoly":
        return cls(len(exponent), {tuple(exponent): c}, frame)

    @classmethod
    def variable(cls, n: int, i: int, frame: str = "y") -> "SymPoly":
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): 1}, frame)

    @classmethod
    def _raw(cls, n, terms, frame):
        # trusted constructor: terms already clean
        obj = cls.__new__(cls)
        obj.n, obj.terms, obj.frame = n, terms, frame
        return obj

    # -- basic protocol
    def __repr__(self):
        return f"SymPoly(n={self.n}, frame={self.frame!r}, {self.pretty()})"

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymPoly.constant(self.n, other, self.frame)
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.n == other.n and self.frame == other.frame and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.frame, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "SymPoly"):
        if self.n != other.n or self.frame != other.frame:
            raise ValueError(f"incompatible polynomials: n={self.n}/{other.n}, "
                             f"frame={self.frame}/{other.frame}")

    def _coerce(self, other):
        if isinstance(other, SymPoly):
            self._check(other)
            return other
        return SymPoly.constant(self.n, other, self.frame)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return SymPoly._raw(self.n, out, self.frame)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly._raw(self.n, {e: -c for e, c in self.terms.items()}, self.frame)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, SymPoly):
            other = Fraction(other)
            if not other:
                return SymPoly.zero(self.n, self.frame)
            return SymPoly._raw(self.n, {e: c * other for e, c in self.terms.items()}, self.frame)
        self._check(other)
        acc: Dict[Exponent, Fraction] = defaultdict(Fraction)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return SymPoly(self.n, acc, self.frame)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        scalar = Fraction(scalar)
        return SymPoly._raw(self.n, {e: c / scalar for e, c in self.terms.items()}, self.frame)

    def __pow__(self, k: int):
        out = SymPoly.constant(self.n, 1, self.frame)
        for _ in range(k):
            out = out * self
        return out

    # -- inspection
    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exponent), Fraction(0))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def min_degree(self) -> int:
        return min((sum(e) for e in self.terms), default=-1)

    def sorted_terms(self):
        """Terms in graded lexicographic order (degree descending, then lex descending)."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0])))

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term *= Fraction(x) ** k
            total += term
        return total

    def homogeneous_part(self, k: int) -> "SymPoly":
        return SymPoly._raw(self.n, {e: c for e, c in self.terms.items() if sum(e) == k}, self.frame)

    def filter(self, keep: Callable[[Exponent], bool]) -> "SymPoly":
        return SymPoly._raw(self.n, {e: c for e, c in self.terms.items() if keep(e)}, self.frame)

    def is_symmetric(self) -> bool:
        for e, c in self.terms.items():
            for f in set(permutations(e)):
                if self.terms.get(f) != c:
                    return False
        return True

    def divisible_by_all_variables(self) -> bool:
        return all(min(e, default=1) >= 1 for e in self.terms)

    # -- calculus and variable manipulation
    def diff(self, i: int) -> "SymPoly":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return SymPoly._raw(self.n, out, self.frame)

    def times_monomial(self, exponent: Sequence[int], c=1) -> "SymPoly":
        c = Fraction(c)
        if not c:
            return SymPoly.zero(self.n, self.frame)
        return SymPoly._raw(self.n, {tuple(a + b for a, b in zip(e, exponent)): v * c
                                     for e, v in self.terms.items()}, self.frame)

    def euler(self, i: int, power: int = 1) -> "SymPoly":
        """Apply ``y_i^power d/dy_i``."""
        e = [0] * self.n
        e[i] = power
        return self.diff(i).times_monomial(e)

    def embed(self, n: int, positions: Sequence[int]) -> "SymPoly":
        """Re-home variable ``k`` as variable ``positions[k]`` of an ``n``-variable ring."""
        if len(positions) != self.n:
            raise ValueError("positions must list one slot per variable")
        out = {}
        for e, c in self.terms.items():
            f = [0] * n
            for k, pos in enumerate(positions):
                f[pos] += e[k]
            out[tuple(f)] = out.get(tuple(f), 0) + c
        return SymPoly(n, out, self.frame)

    def permute(self, perm: Sequence[int]) -> "SymPoly":
        """Send variable ``k`` to variable ``perm[k]``."""
        return self.embed(self.n, perm)

    def identify(self, src: int, dst: int) -> "SymPoly":
        """Set ``y_src = y_dst`` and drop variable ``src``."""
        out = {}
        for e, c in self.terms.items():
            f = list(e)
            f[dst] += f[src]
            del f[src]
            out[tuple(f)] = out.get(tuple(f), 0) + c
        return SymPoly(self.n - 1, out, self.frame)

    def divide_by_difference(self, a: int, b: int) -> "SymPoly":
        """Exact quotient by ``(y_a - y_b)``; raises :class:`NotDivisible`.

        Synthetic division in ``y_a`` with root ``y_b``.
        """
        if a == b:
            raise ValueError("need two distinct variables")
        by_power: Dict[int, Dict[Exponent, Fraction]] = defaultdict(dict)
        for e, c in self.terms.items():
            f = list(e)
            k = f[a]
            f[a] = 0
            by_power[k][tuple(f)] = c
        if not by_power:
            return SymPoly.zero(self.n, self.frame)
        top = max(by_power)
        shift_b = [0] * self.n
        shift_b[b] = 1
        quotient: Dict[Exponent, Fraction] = {}
        carry: Dict[Exponent, Fraction] = {}
        for k in range(top, 0, -1):
            # q_{k-1} = p_k + y_b * q_k
            cur = dict(by_power.get(k, {}))
            for e, c in carry.items():
                f = tuple(x + s for x, s in zip(e, shift_b))
                v = cur.get(f, 0) + c
                if v:
                    cur[f] = v
                else:
                    cur.pop(f, None)
            for e, c in cur.items():
                f = list(e)
                f[a] = k - 1
                quotient[tuple(f)] = c
            carry = cur
        # remainder p_0 + y_b * q_0 must vanish
        rem = dict(by_power.get(0, {}))
        for e, c in carry.items():
            f = tuple(x + s for x, s in zip(e, shift_b))
            rem[f] = rem.get(f, 0) + c
        if any(rem.values()):
            raise NotDivisible(f"polynomial is not divisible by (y{a + 1} - y{b + 1})")
        return SymPoly(self.n, quotient, self.frame)

    # -- frames
    def to_frame(self, frame: str) -> "SymPoly":
        """Exact conversion between ``y`` and ``u = y - 1`` coordinates,
        one variable at a time."""
        if frame == self.frame:
            return self
        sign = 1 if frame == "u" else -1  # y = u + 1  /  u = y - 1
        current: Dict[Exponent, Fraction] = dict(self.terms)
        rows: Dict[int, list] = {}
        for j in range(self.n):
            acc: Dict[Exponent, Fraction] = defaultdict(Fraction)
            for e, c in current.items():
                k = e[j]
                if k not in rows:
                    rows[k] = [(i, comb(k, i) * sign ** (k - i)) for i in range(k + 1)]
                head, tail = e[:j], e[j + 1:]
                for i, w in rows[k]:
                    acc[head + (i,) + tail] += c * w
            current = acc
        return SymPoly(self.n, current, frame)

    # -- output
    def pretty(self, var: Optional[str] = None) -> str:
        if not self.terms:
            return "0"
        var = var or self.frame
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"{var}{i + 1}" + (f"^{k}" if k > 1 else "")
                            for i, k in enumerate(e) if k)
            coeff = format_rational(c)
            if mono:
                pieces.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{coeff}*{mono}")
            else:
                pieces.append(coeff)
        return " + ".join(pieces).replace("+ -", "- ")


# ------------------------------------------------------------- symmetric bases

def m_basis(beta: Sequence[int], n: Optional[int] = None, frame: str = "y") -> SymPoly:
    """Monomial symmetric function ``m_beta`` in ``n`` variables."""
    n = len(beta) if n is None else n
    beta = zero_padded(beta, n)
    return SymPoly(n, {e: 1 for e in set(permutations(beta))}, frame)


def h_basis(k: int, n: int) -> SymPoly:
    """Complete homogeneous symmetric function: sum of all ``m_beta``, ``|beta| = k``."""
    out = SymPoly.zero(n)
    for beta in zero_padded_partitions(k, n):
        out = out + m_basis(beta, n)
    return out


def e_basis(k: int, n: int) -> SymPoly:
    if k > n:
        return SymPoly.zero(n)
    return m_basis((1,) * k, n)


def p_basis(k: int, n: int) -> SymPoly:
    if k == 0:
        return SymPoly.constant(n, n)
    return m_basis((k,), n)


def variables_product(n: int) -> SymPoly:
    """``y_1 * ... * y_n``."""
    return SymPoly.monomial((1,) * n)


def to_m_basis(P: SymPoly) -> Dict[ZeroPaddedPartition, Fraction]:
    """Resolve a symmetric polynomial as ``sum c_beta m_beta``."""
    if not P.is_symmetric():
        raise NotSymmetric("polynomial is not symmetric")
    return {e: c for e, c in P.terms.items() if list(e) == sorted(e, reverse=True)}


def from_m_basis(coeffs: Mapping[Sequence[int], object], n: int) -> SymPoly:
    out = SymPoly.zero(n)
    for beta, c in coeffs.items():
        out = out + m_basis(beta, n) * Fraction(c)
    return out


def _theta_label(theta: Sequence[int]) -> str:
    parts = [p for p in theta if p]
    if not parts:
        return "m_{}"
    counts = Counter(parts)
    labels = []
    for value in sorted(counts, reverse=True):
        mult = counts[value]
        labels.append(str(value) if mult == 1 else f"{value}^{mult}")
    return "m_{" + " ".join(labels) + "}"


def format_m_expansion(coeffs: Mapping[Sequence[int], Fraction]) -> str:
    """Table notation, e.g. ``m_{3 1}+m_{2^2}`` or ``-2m_{5 1^3}+3m_{4 2 1^2}``."""
    if not coeffs:
        return "0"
    items = sorted(coeffs.items(), key=lambda t: tuple(-x for x in t[0]))
    out = []
    for beta, c in items:
        label = _theta_label(beta)
        if c == 1:
            term = label
        elif c == -1:
            term = "-" + label
        else:
            term = format_rational(c) + label
        if out and not term.startswith("-"):
            term = "+" + term
        out.append(term)
    return "".join(out)


def m_expansion_json(coeffs: Mapping[Sequence[int], Fraction]) -> dict:
    items = sorted(coeffs.items(), key=lambda t: tuple(-x for x in t[0]))
    return {"m": [[p for p in beta if p] for beta, _ in items],
            "c": [format_rational(c) for _, c in items]}


def m_expansion_from_json(data) -> Dict[ZeroPaddedPartition, Fraction]:
    if isinstance(data, str):
        data = json.loads(data)
    n = max((len(b) for b in data["m"]), default=0)
    return {zero_padded(b, n): Fraction(c) for b, c in zip(data["m"], data["c"])}


# ------------------------------------------------------------------ full terms

def full_terms(P: SymPoly, k: int) -> SymPoly:
    """Terms with every exponent ``>= 1`` and total degree exactly ``k``."""
    if P.frame != "y":
        raise ValueError("full terms are defined in the y-frame")
    return P.filter(lambda e: sum(e) == k and min(e, default=1) >= 1)


def multinomial(total: int, parts: Iterable[int]) -> int:
    parts = list(parts)
    if sum(parts) != total:
        return 0
    out = factorial(total)
    for p in parts:
        out //= factorial(p)
    return out


def orbit_count(beta: Sequence[int]) -> int:
    """Number of distinct rearrangements of ``beta``."""
    return factorial(len(beta)) // aut_order(beta)
