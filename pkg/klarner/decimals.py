"""Directed rounding of exact rationals to fixed-point decimal strings."""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .errors import BoundError

Number = Union[int, Fraction]


def _format_scaled(k: int, digits: int) -> str:
    sign = "-" if k < 0 else ""
    k = abs(k)
    if digits == 0:
        return f"{sign}{k}"
    whole, frac = divmod(k, 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def floor_decimal(value: Number, digits: int) -> str:
    """``value`` rounded toward minus infinity to ``digits`` places."""
    value = Fraction(value)
    scaled = value * 10 ** digits
    return _format_scaled(scaled.numerator // scaled.denominator, digits)


def ceil_decimal(value: Number, digits: int) -> str:
    """``value`` rounded toward plus infinity to ``digits`` places."""
    value = Fraction(value)
    scaled = value * 10 ** digits
    return _format_scaled(-(-scaled.numerator // scaled.denominator), digits)


def parse_decimal(text: str) -> Fraction:
    """Read a decimal string such as ``"0.24307"`` as an exact rational."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise BoundError("malformed", f"{text!r} is not a decimal number") from None


def integer_root(m: int, n: int) -> int:
    """Largest ``k >= 0`` with ``k ** n <= m``."""
    if m < 0 or n < 1:
        raise BoundError("domain", f"no integer root of order {n} for {m}")
    if m < 2 or n == 1:
        return m
    lo, hi = 1, 1 << (m.bit_length() // n + 1)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid ** n <= m:
            lo = mid
        else:
            hi = mid
    return lo


def floor_root(value: Number, n: int, digits: int) -> str:
    """``value ** (1/n)`` rounded down to ``digits`` places, computed exactly."""
    value = Fraction(value)
    if value < 0:
        raise BoundError("domain", "root of a negative number")
    # k^n / 10^(dn) <= num/den  <=>  k^n <= floor(num * 10^(dn) / den)
    target = value.numerator * 10 ** (digits * n) // value.denominator
    return _format_scaled(integer_root(target, n), digits)
