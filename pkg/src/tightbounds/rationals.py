"""Exact-rational formatting shared by persistence, rendering, and the wire format.

All numeric cells in this package are ``fractions.Fraction`` values.  They
serialize as ``"p/q"`` (or just ``"p"`` when the denominator is 1) so that
files and HTTP payloads never pass through floating point.
"""

from __future__ import annotations

from fractions import Fraction


def format_rational(value: Fraction) -> str:
    """Render a Fraction as ``p/q``, omitting ``/q`` when q == 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` back into a Fraction.

    Raises ValueError on anything else (including decimal notation, which is
    deliberately rejected to keep persisted data exact).
    """
    s = text.strip()
    if "." in s or not s:
        raise ValueError(f"not an exact rational: {text!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc
