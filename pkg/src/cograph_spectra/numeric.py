"""Exact rational scalars.

All diagonal values, shifts and interval endpoints are :class:`fractions.Fraction`
instances.  ``Fraction`` already keeps the canonical form (positive
denominator, reduced, zero as ``0/1``) and raises ``ZeroDivisionError`` on
division by zero, so this module only adds parsing and rendering helpers.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into a canonical fraction.

    Decimal and exponent notation are rejected on purpose: every value that
    enters the algorithms must be exact.
    """
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational number: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def format_rational(value: Fraction | int) -> str:
    """Render as ``p/q``, or just ``p`` when the denominator is one."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_to_json(value: Fraction | int) -> dict:
    value = Fraction(value)
    return {"num": value.numerator, "den": value.denominator}


def rational_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def is_integer(value: Fraction) -> bool:
    return value.denominator == 1


def to_float(value: Fraction) -> float:
    """One-way conversion, for display only."""
    return float(value)
