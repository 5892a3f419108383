"""Exact rational scalars and the combinatorial primitives built on them.

Rationals are :class:`fractions.Fraction`, which keeps numerator and
denominator in lowest terms with a positive denominator after every
operation and raises :class:`ZeroDivisionError` on division by zero.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Union

BigRational = Fraction

RationalLike = Union[Fraction, int, str]


def rational(x: RationalLike) -> Fraction:
    """Coerce ``x`` to a Fraction, accepting canonical text like ``"-32/429"``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    s = text.strip().replace("−", "-")
    if not s:
        raise ValueError("empty rational literal")
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational literal {text!r}") from None
    if q == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def to_text(q: Fraction) -> str:
    """Canonical ``p/q`` form, denominator omitted when it is 1."""
    q = rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


def pochhammer(a: RationalLike, j: int) -> Fraction:
    """Rising factorial a(a+1)...(a+j-1); equal to 1 for j = 0."""
    if j < 0:
        raise ValueError("pochhammer index must be nonnegative")
    a = rational(a)
    out = Fraction(1)
    for m in range(j):
        out *= a + m
        if not out:
            break
    return out


def factorial(j: int) -> Fraction:
    if j < 0:
        raise ValueError("factorial of a negative integer")
    out = 1
    for m in range(2, j + 1):
        out *= m
    return Fraction(out)
