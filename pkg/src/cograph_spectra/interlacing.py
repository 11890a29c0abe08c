"""Certified eigenvalue intervals for arbitrary connected cographs.

The target cotree is completed to a balanced cotree, whose spectrum is known
in closed form.  The target's adjacency matrix is a principal submatrix of the
completion's, so Cauchy interlacing bounds each target eigenvalue between two
eigenvalues of the completion.  The bounds are then tightened with exact
counts at 0 and -1 taken from the target itself.
"""

from __future__ import annotations

import bisect
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .balanced import BalancedSpectrum, full_spectrum
from .cotree import BalancedParams, Cotree, CotreeStructureError, Kind, balance_completion
from .diagonalize import eigenvalue_counts
from .numeric import format_rational, rational_from_json, rational_to_json

log = logging.getLogger(__name__)

# completions this many times larger than the target give loose bounds
WIDTH_WARNING_RATIO = 16


@dataclass(frozen=True)
class Bound:
    lo: Fraction
    hi: Fraction
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi or (self.lo == self.hi and (self.lo_open or self.hi_open)):
            raise ValueError(f"empty interval {self.render()}")

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def contains(self, value) -> bool:
        above = value > self.lo if self.lo_open else value >= self.lo
        below = value < self.hi if self.hi_open else value <= self.hi
        return above and below

    def intersect(self, other: "Bound") -> "Bound":
        if self.lo > other.lo:
            lo, lo_open = self.lo, self.lo_open
        elif other.lo > self.lo:
            lo, lo_open = other.lo, other.lo_open
        else:
            lo, lo_open = self.lo, self.lo_open or other.lo_open
        if self.hi < other.hi:
            hi, hi_open = self.hi, self.hi_open
        elif other.hi < self.hi:
            hi, hi_open = other.hi, other.hi_open
        else:
            hi, hi_open = self.hi, self.hi_open or other.hi_open
        return Bound(lo, hi, lo_open, hi_open)

    def within(self, other: "Bound") -> bool:
        """True when this interval is a subset of ``other``."""
        lo_ok = self.lo > other.lo or (self.lo == other.lo and (self.lo_open or not other.lo_open))
        hi_ok = self.hi < other.hi or (self.hi == other.hi and (self.hi_open or not other.hi_open))
        return lo_ok and hi_ok

    def render(self) -> str:
        if self.lo == self.hi and not (self.lo_open or self.hi_open):
            return f"[{format_rational(self.lo)}]"
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        return f"{left}{format_rational(self.lo)}, {format_rational(self.hi)}{right}"


@dataclass(frozen=True)
class EigenBounds:
    """Bounds on ``beta_1 >= ... >= beta_m``; ``bounds[k - 1]`` belongs to ``beta_k``."""

    m: int
    bounds: tuple[Bound, ...]

    def __getitem__(self, k: int) -> Bound:
        if not 1 <= k <= self.m:
            raise IndexError(f"eigenvalue index {k} out of range 1..{self.m}")
        return self.bounds[k - 1]

    def __iter__(self):
        return iter(self.bounds)

    def __len__(self) -> int:
        return self.m

    def to_json(self) -> list[dict]:
        return [
            {
                "k": k,
                "lo": rational_to_json(b.lo),
                "hi": rational_to_json(b.hi),
                "lo_open": b.lo_open,
                "hi_open": b.hi_open,
            }
            for k, b in enumerate(self.bounds, 1)
        ]

    @classmethod
    def from_json(cls, rows: list[dict]) -> "EigenBounds":
        rows = sorted(rows, key=lambda r: r["k"])
        bounds = tuple(
            Bound(rational_from_json(r["lo"]), rational_from_json(r["hi"]), bool(r["lo_open"]), bool(r["hi_open"]))
            for r in rows
        )
        return cls(len(bounds), bounds)

    def render(self) -> str:
        width = len(str(self.m))
        return "\n".join(f"beta_{k:<{width}} in {b.render()}" for k, b in enumerate(self.bounds, 1))


class _Descending:
    """``lambda_k`` lookup on a multiset spectrum without expanding it."""

    def __init__(self, spectrum: Mapping[int, int]):
        items = sorted(((Fraction(v), m) for v, m in spectrum.items() if m), reverse=True)
        self.values = [v for v, _ in items]
        self.ends = []
        total = 0
        for _, m in items:
            if m < 0:
                raise ValueError("negative multiplicity")
            total += m
            self.ends.append(total)
        self.n = total

    def __call__(self, k: int) -> Fraction:
        return self.values[bisect.bisect_left(self.ends, k)]


def _as_mapping(spec) -> Mapping[int, int]:
    if isinstance(spec, BalancedSpectrum):
        return spec.as_dict()
    if isinstance(spec, Mapping):
        return spec
    raise TypeError("expected a BalancedSpectrum or an eigenvalue -> multiplicity mapping")


def interlace(spec, m: int) -> EigenBounds:
    """``lambda_{k+n-m} <= beta_k <= lambda_k`` for an ``m``-vertex induced subgraph."""
    lam = _Descending(_as_mapping(spec))
    n = lam.n
    if not 1 <= m < n:
        raise ValueError(f"interlacing needs 1 <= m < n, got m = {m}, n = {n}")
    return EigenBounds(m, tuple(Bound(lam(k + n - m), lam(k)) for k in range(1, m + 1)))


def _exact_bounds(spec) -> EigenBounds:
    lam = _Descending(_as_mapping(spec))
    return EigenBounds(lam.n, tuple(Bound(lam(k), lam(k)) for k in range(1, lam.n + 1)))


def refine(bounds: EigenBounds, t: Cotree) -> EigenBounds:
    """Tighten bounds with the target's exact eigenvalue counts at 0 and -1.

    Indices up to ``#{beta > 0}`` get an open lower end at 0, the next
    ``m(0)`` collapse to 0, indices whose eigenvalue lies in ``(-1, 0)`` (none
    for a cograph) get that open interval, the next ``m(-1)`` collapse to -1
    and the rest get an open upper end at -1.  Bounds only ever shrink.
    """
    if t.n != bounds.m:
        raise ValueError(f"cotree has {t.n} leaves but the bounds cover {bounds.m} eigenvalues")
    g0, e0, _ = eigenvalue_counts(t, 0)
    g1, e1, _ = eigenvalue_counts(t, -1)
    out = []
    for k, b in enumerate(bounds.bounds, 1):
        if k <= g0:
            fact = Bound(Fraction(0), max(b.hi, Fraction(0)) + 1, lo_open=True, hi_open=True)
        elif k <= g0 + e0:
            fact = Bound(Fraction(0), Fraction(0))
        elif k <= g1:
            fact = Bound(Fraction(-1), Fraction(0), lo_open=True, hi_open=True)
        elif k <= g1 + e1:
            fact = Bound(Fraction(-1), Fraction(-1))
        else:
            fact = Bound(min(b.lo, Fraction(-1)) - 1, Fraction(-1), lo_open=True, hi_open=True)
        try:
            out.append(b.intersect(fact))
        except ValueError:
            raise ValueError(f"bound {k} {b.render()} contradicts the exact counts of the target") from None
    return EigenBounds(bounds.m, tuple(out))


def estimate_spectrum(t: Cotree) -> tuple[BalancedParams, EigenBounds]:
    """Bounds for every eigenvalue of a connected cograph via its balanced completion."""
    if t.root_kind is Kind.LEAF:
        params = BalancedParams((1,))
        return params, _exact_bounds(full_spectrum(params))
    if t.root_kind is not Kind.JOIN:
        raise CotreeStructureError(
            "estimate_spectrum needs a connected cograph (join root); "
            "estimate each component of a disconnected cograph separately"
        )
    params, _, _ = balance_completion(t)
    spec = full_spectrum(params)
    if params.order == t.n:
        return params, refine(_exact_bounds(spec), t)
    if params.order > WIDTH_WARNING_RATIO * t.n:
        log.warning(
            "balanced completion has %d vertices for a %d-vertex target; interlacing bounds will be wide",
            params.order,
            t.n,
        )
    return params, refine(interlace(spec, t.n), t)


def check_bounds(bounds: EigenBounds, eigenvalues: Sequence) -> list[int]:
    """Indices ``k`` whose ``beta_k`` (descending order) falls outside its bound."""
    ordered = sorted(eigenvalues, reverse=True)
    if len(ordered) != bounds.m:
        raise ValueError("eigenvalue count does not match the bounds")
    return [k for k, (b, v) in enumerate(zip(bounds.bounds, ordered), 1) if not b.contains(v)]
