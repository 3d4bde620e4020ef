from __future__ import annotations

from fractions import Fraction

from graphdim.errors import GraphValidationError


def format_rational(value: Fraction) -> str:
    """Render as ``p/q``; integral values render without a denominator."""
    return str(Fraction(value))


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise GraphValidationError(f"Invalid rational {text!r}") from exc


def decimal_display(value: Fraction) -> str:
    # display only, never compared
    return f"{float(value):.6g}"
