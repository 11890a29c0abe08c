"""Dense exact ground truth, independent of the cotree algorithms.

Inertia is computed by symmetric Gaussian elimination.  The rational matrix
is scaled to integers first (a positive scale keeps the inertia) and then
eliminated fraction-free: after each pivot the trailing block equals the
previous pivot times the rational Schur complement, so every division is
exact and every entry stays an integer.  A zero pivot with a nonzero row is
repaired by the congruence "add row j and column j to row/column k" (or the
subtracting variant when that still leaves zero).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cotree import Graph
from .diagonalize import InertiaTriple, Located
from .numeric import RationalLike, as_rational


@dataclass(frozen=True)
class DenseSymmetric:
    n: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        for i in range(self.n):
            for j in range(i):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")

    @classmethod
    def from_rows(cls, rows) -> "DenseSymmetric":
        entries = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if any(len(row) != len(entries) for row in entries):
            raise ValueError("matrix must be square")
        return cls(len(entries), entries)

    def row_sums(self) -> list[Fraction]:
        return [sum(row, Fraction(0)) for row in self.entries]


def adjacency(g: Graph) -> DenseSymmetric:
    rows = [[Fraction(0)] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        rows[u][v] = rows[v][u] = Fraction(1)
    return DenseSymmetric(g.n, tuple(tuple(r) for r in rows))


def _integer_rows(mat: DenseSymmetric, shift: Fraction) -> list[list[int]]:
    """Upper triangle of ``den * (mat + shift I)``; row ``i`` holds columns ``i..n-1``."""
    den = shift.denominator
    for row in mat.entries:
        for x in row:
            den = math.lcm(den, x.denominator)
    rows = []
    for i, row in enumerate(mat.entries):
        r = [int(x * den) for x in row[i:]]
        r[0] += int(shift * den)
        rows.append(r)
    return rows


def _entry(b: list[list[int]], i: int, j: int) -> int:
    return b[i][j - i] if i <= j else b[j][i - j]


def exact_inertia(mat: DenseSymmetric, shift: RationalLike = 0) -> InertiaTriple:
    """Numbers of positive, zero and negative pivots of ``mat + shift * I``."""
    shift = as_rational(shift)
    b = _integer_rows(mat, shift)
    prev = 1
    plus = zero = minus = 0
    while b:
        top = b[0]
        if top[0] == 0:
            j = next((k for k in range(1, len(top)) if top[k]), None)
            if j is None:
                zero += 1
                b = b[1:]
                continue
            # congruence: add sign * (row j, column j) to row/column 0
            sign = 1 if 2 * top[j] + b[j][0] else -1
            head = 2 * sign * top[j] + b[j][0]
            b[0] = top = [head] + [top[k] + sign * _entry(b, j, k) for k in range(1, len(top))]
        pivot = top[0]
        if (pivot > 0) == (prev > 0):
            plus += 1
        else:
            minus += 1
        nxt = []
        for i in range(1, len(b)):
            f = top[i]
            tail = top[i:]
            if prev == 1:
                nxt.append([pivot * v - f * w for v, w in zip(b[i], tail)])
            else:
                nxt.append([(pivot * v - f * w) // prev for v, w in zip(b[i], tail)])
        b = nxt
        prev = pivot
    return InertiaTriple(plus, zero, minus)


def _counts(mat: DenseSymmetric, lam: Fraction) -> tuple[int, int, int]:
    # eigenvalues greater / equal / less than lam = inertia of mat - lam I
    return tuple(exact_inertia(mat, -lam))


def eigenvalues_bisect(mat: DenseSymmetric, tol: RationalLike = Fraction(1, 2**40)) -> list[Located]:
    """All eigenvalues: integers exactly, the rest in open intervals of width <= ``tol``."""
    tol = as_rational(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if mat.n == 0:
        return []
    # Gershgorin radius
    radius = max(sum(abs(x) for x in row) for row in mat.entries)
    top = math.ceil(radius)
    items: list[Located] = []
    prev = _counts(mat, Fraction(-top))
    if prev[1]:
        items.append(Located(Fraction(-top), Fraction(-top), prev[1]))
    for k in range(-top + 1, top + 1):
        cur = _counts(mat, Fraction(k))
        if cur[1]:
            items.append(Located(Fraction(k), Fraction(k), cur[1]))
        inside = prev[0] - cur[0] - cur[1]
        if inside:
            items.extend(_bisect(mat, Fraction(k - 1), Fraction(k), prev, cur, tol))
        prev = cur
    items.sort(key=lambda it: (it.lo, it.hi))
    return items


def _bisect(mat, lo, hi, c_lo, c_hi, tol) -> list[Located]:
    inside = c_lo[0] - c_hi[0] - c_hi[1]
    if inside == 0:
        return []
    if hi - lo <= tol:
        return [Located(lo, hi, inside)]
    mid = (lo + hi) / 2
    c_mid = _counts(mat, mid)
    out = _bisect(mat, lo, mid, c_lo, c_mid, tol)
    if c_mid[1]:
        out.append(Located(mid, mid, c_mid[1]))
    out.extend(_bisect(mat, mid, hi, c_mid, c_hi, tol))
    return out
