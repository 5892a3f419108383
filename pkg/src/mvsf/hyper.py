"""Terminating generalized hypergeometric series as exact polynomials in t.

A series is described by ordinary upper parameters, lower parameters, and
unit-shift values ``s``. Each shift stands for an upper ``s+1`` over a lower
``s``; the quotient (s+1)_j/(s)_j telescopes to (s+j)/s, which is what gets
multiplied into the j-th term. Carrying the shift that way avoids the 0/0
that (s)_j produces once s+j crosses zero.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactnum import RationalLike, pochhammer, rational
from .polyalg import Poly


class HypergeomError(ValueError):
    pass


class LowerParamPole(HypergeomError):
    def __init__(self, param: Fraction, j: int):
        self.param = param
        self.j = j
        super().__init__(f"lower parameter {param} makes (c)_{j} vanish before termination")


class ZeroShift(HypergeomError):
    pass


class NoTerminator(HypergeomError):
    pass


def _is_nonpositive_int(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


@dataclass(frozen=True)
class HypergeomSpec:
    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    shifts: tuple[Fraction, ...] = field(default=())

    def __init__(self, upper: Sequence[RationalLike], lower: Sequence[RationalLike],
                 shifts: Sequence[RationalLike] = ()):
        object.__setattr__(self, "upper", tuple(rational(u) for u in upper))
        object.__setattr__(self, "lower", tuple(rational(c) for c in lower))
        object.__setattr__(self, "shifts", tuple(rational(s) for s in shifts))
        self._validate()

    def _validate(self):
        terminators = [u for u in self.upper if _is_nonpositive_int(u)]
        if len(terminators) != 1:
            raise NoTerminator(
                f"need exactly one nonpositive-integer upper parameter, got {len(terminators)}")
        for s in self.shifts:
            if s == 0:
                raise ZeroShift("unit-shift value s must be nonzero")
        deg = self.termination_degree
        for c in self.lower:
            for j in range(deg):
                if c + j == 0:
                    raise LowerParamPole(c, j + 1)

    @property
    def termination_degree(self) -> int:
        return int(-min(u for u in self.upper if _is_nonpositive_int(u)))


def build_terminating(spec: HypergeomSpec) -> Poly:
    """Expand the series term by term using the ratio of consecutive terms."""
    deg = spec.termination_degree
    base = [Fraction(1)]
    term = Fraction(1)
    for j in range(deg):
        num = Fraction(1)
        for u in spec.upper:
            num *= u + j
        den = Fraction(j + 1)
        for c in spec.lower:
            den *= c + j
        term = term * num / den
        base.append(term)
    coeffs = []
    for j, c in enumerate(base):
        for s in spec.shifts:
            c = c * (s + j) / s
        coeffs.append(c)
    return Poly(coeffs)


def build_by_pochhammer(spec: HypergeomSpec) -> Poly:
    """Literal (s+1)_j/(s)_j form; raises ZeroDivisionError where (s)_j = 0."""
    deg = spec.termination_degree
    coeffs = []
    for j in range(deg + 1):
        num = Fraction(1)
        den = pochhammer(1, j)
        for u in spec.upper:
            num *= pochhammer(u, j)
        for c in spec.lower:
            den *= pochhammer(c, j)
        for s in spec.shifts:
            num *= pochhammer(s + 1, j)
            den *= pochhammer(s, j)
        coeffs.append(num / den)
    return Poly(coeffs)


def shift_factor_consistency(s: RationalLike, degree: int) -> bool:
    s = rational(s)
    if s == 0:
        raise ZeroShift("unit-shift value s must be nonzero")
    for j in range(degree + 1):
        low = pochhammer(s, j)
        if low == 0:
            continue
        if pochhammer(s + 1, j) / low != (s + j) / s:
            return False
    return True
