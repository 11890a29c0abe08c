"""Congruence diagonalization of ``A + xI`` directly on the cotree.

Sibling leaves are duplicates (under a union) or coduplicates (under a join),
so a pair of them can be reduced by a congruence that touches only their two
rows.  Each reduction fixes the diagonal value of one leaf (``d_k``) and
updates the other (``d_l``).  Interior nodes are processed deepest level
first; once a node is down to a single leaf, that leaf moves up to the
grandparent.  By Sylvester's law of inertia the signs of the resulting
diagonal give the number of adjacency eigenvalues above, at and below ``-x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .cotree import Cotree, Kind
from .numeric import RationalLike, as_rational

ONE = Fraction(1)
ZERO = Fraction(0)


class InertiaTriple(NamedTuple):
    n_plus: int
    n_zero: int
    n_minus: int


class Counts(NamedTuple):
    greater: int
    equal: int
    less: int


@dataclass(frozen=True)
class DiagResult:
    diagonal: tuple[Fraction, ...]
    inertia: InertiaTriple


def inertia_of(values) -> InertiaTriple:
    plus = zero = minus = 0
    for d in values:
        if d > 0:
            plus += 1
        elif d < 0:
            minus += 1
        else:
            zero += 1
    return InertiaTriple(plus, zero, minus)


def reduce_pair(join: bool, alpha: Fraction, beta: Fraction, out: list) -> Fraction | None:
    """One step on sibling leaves with values ``alpha`` (v_k) and ``beta`` (v_l).

    Appends the values that became final to ``out`` and returns the new value
    of the surviving leaf, or ``None`` when both leaves were removed.
    """
    if join:
        s = alpha + beta
        if s != 2:
            out.append(s - 2)
            return (alpha * beta - 1) / (s - 2)
        if beta == 1:
            out.append(ZERO)
            return ONE
        out.append(-(1 - beta) ** 2)
        out.append(ONE)
        return None
    s = alpha + beta
    if s != 0:
        out.append(s)
        return alpha * beta / s
    if beta == 0:
        out.append(ZERO)
        return ZERO
    # both rows become diagonal: d_l <- beta, d_k <- -beta
    out.append(-beta)
    out.append(beta)
    return None


def reduce_uniform(join: bool, y: Fraction, m: int, out: list) -> Fraction:
    """Closed form for ``m`` sibling leaves that all hold ``y``.

    Requires ``y != 1`` under a join and ``y != 0`` under a union; then every
    step is the generic case and iteration ``j`` fixes ``(j+1)/j * (y-1)``
    (join) or ``(j+1)/j * y`` (union).
    """
    if join:
        base = y - 1
        for j in range(1, m):
            out.append(Fraction(j + 1, j) * base)
        return (y + m - 1) / m
    for j in range(1, m):
        out.append(Fraction(j + 1, j) * y)
    return y / m


def fold(join: bool, values, out: list) -> Fraction | None:
    """Reduce a sequence of sibling leaf values pairwise, left to right."""
    survivor = None
    for a in values:
        if survivor is None:
            survivor = a
        else:
            survivor = reduce_pair(join, a, survivor, out)
    return survivor


def diagonalize_shifted(t: Cotree, x: RationalLike, *, reverse: bool = False) -> DiagResult:
    """Diagonal matrix congruent to ``A + xI`` for the cograph of ``t``.

    ``reverse`` processes siblings right to left; the inertia is unchanged,
    the individual diagonal values generally are not.
    """
    x = as_rational(x)
    kinds = t.kinds
    children = t.children
    level = t.level
    out: list[Fraction] = []
    survivor: list[Fraction | None] = [None] * len(kinds)

    interior = [v for v in range(len(kinds)) if kinds[v] is not Kind.LEAF]
    interior.sort(key=lambda v: -level[v])
    for v in interior:
        join = kinds[v] is Kind.JOIN
        kids = children[v][::-1] if reverse else children[v]
        n_leaves = 0
        carried = []
        for c in kids:
            if kinds[c] is Kind.LEAF:
                n_leaves += 1
            elif survivor[c] is not None:
                carried.append(survivor[c])
        degenerate = x == 1 if join else x == 0
        if n_leaves >= 2 and not degenerate:
            first = reduce_uniform(join, x, n_leaves, out)
        else:
            first = fold(join, [x] * n_leaves, out)
        values = carried if first is None else [first] + carried
        survivor[v] = fold(join, values, out)

    if kinds[0] is Kind.LEAF:
        out.append(x)
    elif survivor[0] is not None:
        out.append(survivor[0])
    return DiagResult(tuple(out), inertia_of(out))


def eigenvalue_counts(t: Cotree, lam: RationalLike) -> Counts:
    """Exact numbers of adjacency eigenvalues greater than, equal to and less than ``lam``."""
    plus, zero, minus = diagonalize_shifted(t, -as_rational(lam)).inertia
    return Counts(plus, zero, minus)


def multiplicity(t: Cotree, lam: RationalLike) -> int:
    return eigenvalue_counts(t, lam).equal


# ---------------------------------------------------------------------------
# spectrum scanning built on the exact counts

DEFAULT_TOL = Fraction(1, 2**40)


@dataclass(frozen=True)
class SpectrumMultiset:
    """Integer eigenvalues with multiplicities plus the count of the rest.

    ``gaps[k]`` is the number of (necessarily irrational) eigenvalues in the
    open interval ``(k, k + 1)``.
    """

    integral: dict
    residual_count: int
    n: int
    gaps: dict

    def sorted_items(self) -> list[tuple[int, int]]:
        return sorted(self.integral.items())


@dataclass(frozen=True)
class Located:
    """Eigenvalues in ``[lo, hi]`` when ``lo == hi``, otherwise in the open ``(lo, hi)``."""

    lo: Fraction
    hi: Fraction
    count: int

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi


def integer_spectrum(t: Cotree, bound: int | None = None) -> SpectrumMultiset:
    """All integer eigenvalues of the cograph with exact multiplicities.

    Probes integers in ``[-bound, bound]`` (default ``n - 1``, which bounds the
    spectral radius) by recursive halving, skipping every stretch the counts
    show to be empty.
    """
    n = t.n
    radius = max(n - 1, 0) if bound is None else int(bound)
    integral: dict[int, int] = {}
    gaps: dict[int, int] = {}

    def probe(k: int) -> Counts:
        c = eigenvalue_counts(t, k)
        if c.equal:
            integral[k] = c.equal
        return c

    lo_counts = probe(-radius)
    if radius > 0:
        hi_counts = probe(radius)
        stack = [(-radius, radius, lo_counts, hi_counts)]
        while stack:
            lo, hi, c_lo, c_hi = stack.pop()
            inside = c_lo.greater - c_hi.greater - c_hi.equal
            if inside == 0:
                continue
            if hi - lo == 1:
                gaps[lo] = inside
                continue
            mid = (lo + hi) // 2
            c_mid = probe(mid)
            stack.append((mid, hi, c_mid, c_hi))
            stack.append((lo, mid, c_lo, c_mid))
    residual = n - sum(integral.values())
    return SpectrumMultiset(dict(sorted(integral.items())), residual, n, dict(sorted(gaps.items())))


def is_integral(t: Cotree) -> bool:
    return integer_spectrum(t).residual_count == 0


def locate_all(t: Cotree, tol: RationalLike = DEFAULT_TOL) -> list[Located]:
    """Every eigenvalue, either exactly (integers) or in a dyadic interval of width <= ``tol``.

    Items come out in increasing order and their counts add up to ``n``.
    """
    tol = as_rational(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    spec = integer_spectrum(t)
    items: list[Located] = [Located(Fraction(k), Fraction(k), m) for k, m in spec.integral.items()]

    for k in spec.gaps:
        lo, hi = Fraction(k), Fraction(k + 1)
        stack = [(lo, hi, eigenvalue_counts(t, lo), eigenvalue_counts(t, hi))]
        while stack:
            lo, hi, c_lo, c_hi = stack.pop()
            inside = c_lo.greater - c_hi.greater - c_hi.equal
            if inside == 0:
                continue
            if hi - lo <= tol:
                items.append(Located(lo, hi, inside))
                continue
            mid = (lo + hi) / 2
            c_mid = eigenvalue_counts(t, mid)
            if c_mid.equal:
                items.append(Located(mid, mid, c_mid.equal))
            stack.append((mid, hi, c_mid, c_hi))
            stack.append((lo, mid, c_lo, c_mid))
    items.sort(key=lambda it: (it.lo, it.hi))
    return items
