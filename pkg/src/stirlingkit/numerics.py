"""Exact scalar arithmetic.

Python ``int`` is the arbitrary-precision integer type and
:class:`fractions.Fraction` the rational type. Fractions are kept in lowest
terms with a positive denominator by construction, so every helper here
returns canonical values. Floats are rejected at every entry point.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "Fraction",
    "as_rational",
    "rat_add",
    "rat_mul",
    "rat_div",
    "is_reduced",
    "parse_int",
    "parse_rational",
    "format_rational",
]

_INT_RE = re.compile(r"[+-]?\d+\Z")
_RAT_RE = re.compile(r"([+-]?\d+)(?:/(\d+))?\Z")


def as_rational(value) -> Fraction:
    """Coerce an int or Fraction to Fraction; anything inexact is a TypeError."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"expected an exact integer or rational, got {type(value).__name__}")


def rat_add(a, b) -> Fraction:
    return as_rational(a) + as_rational(b)


def rat_mul(a, b) -> Fraction:
    return as_rational(a) * as_rational(b)


def rat_div(a, b) -> Fraction:
    """Exact quotient; raises ZeroDivisionError when ``b`` is zero."""
    b = as_rational(b)
    if b == 0:
        raise ZeroDivisionError("rational division by zero")
    return as_rational(a) / b


def is_reduced(q) -> bool:
    """True when ``q`` is in canonical form: gcd(|p|, q) = 1, q >= 1, zero is 0/1."""
    from math import gcd

    if isinstance(q, int) and not isinstance(q, bool):
        return True
    if not isinstance(q, Fraction):
        return False
    p, d = q.numerator, q.denominator
    if d < 1:
        return False
    if p == 0:
        return d == 1
    return gcd(abs(p), d) == 1


def parse_int(text: str) -> int:
    text = text.strip()
    if not _INT_RE.match(text):
        raise ValueError(f"not a decimal integer: {text!r}")
    return int(text)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (decimal digits only, optional sign on p)."""
    m = _RAT_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a rational of the form p or p/q: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q) -> str:
    """Render integers as ``"p"`` and everything else as ``"p/q"``."""
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
