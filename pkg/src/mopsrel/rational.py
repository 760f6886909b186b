"""Strict rational-string parsing and formatting.

All file formats carry scalars as strings like "3", "-1/4", "0". Decimal
notation is rejected on purpose: exact-mode data must never round-trip
through floats.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import FormatError

RATIONAL_PATTERN = re.compile(r"^-?\d+(/[1-9]\d*)?$")
_RATIONAL_RE = RATIONAL_PATTERN


def parse_rational(text: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise FormatError(f"not a rational string of the form p or p/q: {text!r}")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    return str(value)


def as_scalar(value) -> Fraction:
    """Coerce an int, Fraction, or "p/q" string to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise FormatError(f"cannot interpret {value!r} as an exact rational")
