"""Exact rational parsing and canonical ``p/q`` rendering."""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError

_RAT_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def as_rational(value: object) -> Fraction:
    """Coerce ``int``, ``Fraction`` or a ``"p/q"`` string; floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RAT_RE.match(value)
        if m is None:
            raise ParseError(f"not a rational: {value!r}")
        num, den = int(m.group(1)), int(m.group(2) or 1)
        if den == 0:
            raise ParseError(f"zero denominator in {value!r}")
        return Fraction(num, den)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def format_rational(q: Fraction | int) -> str:
    """Lowest-terms ``"p/q"``; integers render without ``/1``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
