"""Exact rational parsing and printing.

Everything in this library is a ``fractions.Fraction``; floats are never
accepted, so equality tests and strict comparisons are always decidable.
"""

from __future__ import annotations

from fractions import Fraction


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q``, integer, or decimal text (``0.4`` becomes ``2/5``)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"bad rational {text!r}") from None


def format_rational(value: Fraction) -> str:
    """Lowest terms, ``p/q`` with plain ``p`` when the denominator is 1."""
    return str(value)
