"""Closed-form spectra of balanced cotrees.

For the balanced cotree with branching ``(a_1, ..., a_r)`` every level
``1 <= i <= r - 1`` contributes one integer eigenvalue ``-x_r^i`` with
multiplicity ``a_1 ... a_{i-1} (a_i - 1)``; the leaves themselves contribute
``-1`` (``r`` odd) or ``0`` (``r`` even) with multiplicity
``a_1 ... a_{r-1} (a_r - 1)``; the one eigenvalue left over follows from the
trace of the adjacency matrix being zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cotree import BalancedParams


def _params(p) -> BalancedParams:
    return p if isinstance(p, BalancedParams) else BalancedParams(tuple(p))


def _check_level(p: BalancedParams, i: int, upper: int) -> None:
    if not 1 <= i <= upper:
        raise ValueError(f"level {i} out of range 1..{upper} for r = {p.r}")


def gamma(p, l: int) -> int:
    """Suffix product ``a_r * a_{r-1} * ... * a_l`` (1-based ``l``)."""
    p = _params(p)
    _check_level(p, l, p.r)
    return math.prod(p.a[l - 1:])


@dataclass(frozen=True)
class GammaTable:
    params: BalancedParams
    values: tuple[int, ...]  # values[l - 1] = gamma(params, l)

    @classmethod
    def of(cls, p) -> "GammaTable":
        p = _params(p)
        vals = [0] * p.r
        acc = 1
        for l in range(p.r, 0, -1):
            acc *= p.a[l - 1]
            vals[l - 1] = acc
        return cls(p, tuple(vals))

    def __call__(self, l: int) -> int:
        _check_level(self.params, l, self.params.r)
        return self.values[l - 1]


def x_level(p, i: int, table: GammaTable | None = None) -> int:
    """Shift recovered from level ``i``; ``-x_level(p, i)`` is an eigenvalue.

    Alternating sum of suffix products ``gamma(r, i + k)``, ``k = 1..r-i``,
    starting with ``-`` for even ``i`` and ``+`` for odd ``i``, plus one when
    ``r`` is odd.
    """
    p = _params(p)
    r = p.r
    _check_level(p, i, r - 1)
    g = table if table is not None else GammaTable.of(p)
    odd_i = i % 2
    total = 0
    for k in range(1, r - i + 1):
        sign = -1 if (k + odd_i) % 2 else 1
        total += sign * g(i + k)
    return total + (r % 2)


def level_multiplicity(p, i: int) -> int:
    p = _params(p)
    _check_level(p, i, p.r - 1)
    return math.prod(p.a[: i - 1]) * (p.a[i - 1] - 1)


def boundary_eigenvalue(p) -> tuple[int, int]:
    """``(-1, m)`` for odd depth, ``(0, m)`` for even, with ``m = a_1 ... a_{r-1} (a_r - 1)``."""
    p = _params(p)
    mult = math.prod(p.a[:-1]) * (p.a[-1] - 1)
    return (-1 if p.r % 2 else 0, mult)


def residual_eigenvalue(p) -> int:
    p = _params(p)
    g = GammaTable.of(p)
    trace = 0
    for i in range(1, p.r):
        trace += -x_level(p, i, g) * level_multiplicity(p, i)
    value, mult = boundary_eigenvalue(p)
    trace += value * mult
    return -trace


def backward_recurrence(p, i: int) -> list[int]:
    """Values ``x_i, x_{i+1}, ..., x_r`` obtained by undoing the level reductions.

    Starts at 1 (odd ``i``) or 0 (even ``i``); a union level multiplies by
    ``a_{j+1}``, a join level maps ``x`` to ``a_{j+1} x - a_{j+1} + 1``.
    """
    p = _params(p)
    _check_level(p, i, p.r - 1)
    x = 1 if i % 2 else 0
    seq = [x]
    for j in range(i, p.r):
        a = p.a[j]
        x = a * x if j % 2 else a * x - a + 1
        seq.append(x)
    return seq


@dataclass(frozen=True)
class BalancedSpectrum:
    params: BalancedParams
    level_eigenvalues: dict  # level i -> (eigenvalue, multiplicity)
    boundary: tuple[int, int]
    residual: tuple[int, int]
    n: int

    def as_dict(self) -> dict[int, int]:
        """Eigenvalue -> multiplicity, colliding entries summed, zero multiplicities dropped."""
        merged: dict[int, int] = {}
        for value, mult in [*self.level_eigenvalues.values(), self.boundary, self.residual]:
            if mult:
                merged[value] = merged.get(value, 0) + mult
        return dict(sorted(merged.items()))

    def sorted_items(self) -> list[tuple[int, int]]:
        return sorted(self.as_dict().items())

    def descending(self) -> list[tuple[int, int]]:
        return sorted(self.as_dict().items(), reverse=True)


def full_spectrum(p) -> BalancedSpectrum:
    p = _params(p)
    g = GammaTable.of(p)
    levels = {i: (-x_level(p, i, g), level_multiplicity(p, i)) for i in range(1, p.r)}
    return BalancedSpectrum(
        params=p,
        level_eigenvalues=levels,
        boundary=boundary_eigenvalue(p),
        residual=(residual_eigenvalue(p), 1),
        n=p.order,
    )


def spectrum_to_json(spectrum: dict[int, int]) -> list[dict]:
    return [{"eigenvalue": int(v), "multiplicity": int(m)} for v, m in sorted(spectrum.items())]


def spectrum_from_json(entries: list[dict]) -> dict[int, int]:
    return {int(e["eigenvalue"]): int(e["multiplicity"]) for e in entries}
