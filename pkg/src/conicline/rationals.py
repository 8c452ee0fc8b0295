"""Exact rational plumbing: parsing, canonical string form, decimal rendering.

All exact quantities in the package are ``fractions.Fraction`` values, which
are always stored reduced with a positive denominator.  File formats carry
them as strings ``"p/q"`` (just ``"p"`` when q = 1).  Decimal output is
produced by exact long division, never through floats.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidInput


def rat_to_str(x: Fraction) -> str:
    """Canonical serialized form: "p/q", or "p" alone when q = 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rat_from_str(s: str) -> Fraction:
    """Parse the canonical "p/q" form (whitespace tolerated)."""
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"not a rational literal: {s!r}") from exc


def rat_to_decimal(x: Fraction, sig_digits: int = 6) -> str:
    """Render ``x`` with ``sig_digits`` significant digits, round half to even.

    Works entirely in integer arithmetic so output is byte-stable.
    """
    if sig_digits < 1:
        raise InvalidInput("sig_digits must be >= 1")
    x = Fraction(x)
    if x == 0:
        return "0"
    sign = "-" if x < 0 else ""
    x = abs(x)

    # exponent e with 10^e <= x < 10^(e+1)
    e = 0
    if x >= 1:
        while x >= 10 ** (e + 1):
            e += 1
    else:
        while x < 10 ** e:
            e -= 1

    # scaled = x * 10^(sig_digits - 1 - e), rounded half-even to an integer
    shift = sig_digits - 1 - e
    scaled = x * Fraction(10) ** shift
    n, r = divmod(scaled.numerator, scaled.denominator)
    twice = 2 * r
    if twice > scaled.denominator or (twice == scaled.denominator and n % 2 == 1):
        n += 1
    digits = str(n)
    if len(digits) > sig_digits:  # rounding overflowed, e.g. 999.95 -> 1000.0
        e += 1
        digits = digits[:sig_digits]

    point = e + 1  # digits before the decimal point
    if 0 < point <= sig_digits:
        out = digits[:point] + ("." + digits[point:] if digits[point:] else "")
    elif point <= 0:
        out = "0." + "0" * (-point) + digits
    else:
        out = digits + "0" * (point - sig_digits)
    return sign + out


def is_dyadic(x: Fraction) -> bool:
    """True when the reduced denominator is a power of two."""
    d = Fraction(x).denominator
    return d & (d - 1) == 0


def dyadic_below(x: Fraction, scale: int) -> Fraction:
    """Largest multiple of 2**-scale that is <= x."""
    q = 1 << scale
    return Fraction((x.numerator * q) // x.denominator, q)


def dyadic_above(x: Fraction, scale: int) -> Fraction:
    """Smallest multiple of 2**-scale that is >= x."""
    q = 1 << scale
    return Fraction(-((-x.numerator * q) // x.denominator), q)
