"""Sign-pattern checks on linearization coefficients.

Checks are run at concrete integer n. A coefficient that vanishes where a
strict sign is expected is reported as a ``zero-entry`` witness, kept apart
from ``wrong-sign`` witnesses.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Optional

from .exactnum import sign, to_text
from .expand import (ExpansionError, LinearizationExpansion, RANGE_RULE, expand_in_basis,
                     linearize)
from .polyalg import RatMatrix
from .spherical import SphericalFamily


class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    @property
    def symbol(self) -> str:
        return {1: "+", -1: "-", 0: "0"}[int(self)]


SignGrid = tuple[tuple[Sign, ...], ...]


def sign_grid(A: RatMatrix) -> SignGrid:
    return tuple(tuple(Sign(sign(x)) for x in A.row(r)) for r in range(A.rows))


def hook_pattern(size: int, parity: int) -> SignGrid:
    """Expected grid: hook h (1-based) has sign (-1)^(h-1+parity).

    Hook h is row h from the diagonal rightward together with column h from
    the diagonal downward, so entry (r, c) lies on hook min(r, c).
    """
    if size <= 0:
        raise ValueError("size must be positive")
    return tuple(
        tuple(Sign(-1 if (min(r, c) + parity) % 2 else 1) for c in range(size))
        for r in range(size)
    )


def render_grid(grid: SignGrid) -> list[str]:
    return [" ".join(s.symbol for s in row) for row in grid]


@dataclass(frozen=True)
class Witness:
    k: int
    row: int
    col: int
    actual: Sign
    expected: Sign
    kind: str  # "wrong-sign" or "zero-entry"

    def to_json(self) -> dict:
        return {"k": self.k, "row": self.row, "col": self.col,
                "actual": self.actual.symbol, "expected": self.expected.symbol,
                "kind": self.kind}


def _compare(k: int, actual: SignGrid, expected: SignGrid) -> list[Witness]:
    out = []
    for r, (arow, erow) in enumerate(zip(actual, expected)):
        for c, (a, e) in enumerate(zip(arow, erow)):
            if a != e:
                out.append(Witness(k, r, c, a, e, "zero-entry" if a == Sign.ZERO else "wrong-sign"))
    return out


@dataclass(frozen=True)
class Verdict:
    """Outcome of a scalar-coefficient check."""

    check: str
    n: int
    i: int
    j: int
    holds: bool
    witnesses: tuple[Witness, ...]
    coeffs: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {
            "check": self.check, "n": self.n, "i": self.i, "j": self.j,
            "holds": self.holds,
            "witnesses": [w.to_json() for w in self.witnesses],
            "coeffs": {str(k): to_text(v) for k, v in sorted(self.coeffs.items())},
        }


def _ordered(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i <= j else (j, i)


def check_alt_sign_l0(family: SphericalFamily, i: int, j: int,
                      expansion: Optional[LinearizationExpansion] = None) -> Verdict:
    """Coefficient at k = |j-i| + m must have sign (-1)^m and be nonzero."""
    if family.l != 0:
        raise ValueError("alternating-sign check applies to l = 0 families")
    i, j = _ordered(i, j)
    exp = expansion or linearize(family, i, j)
    coeffs = {k: exp.scalar(k) for k in exp.coeffs}
    wit = []
    for m in range(2 * i + 1):
        k = j - i + m
        want = Sign.POSITIVE if m % 2 == 0 else Sign.NEGATIVE
        got = Sign(sign(coeffs[k]))
        if got != want:
            wit.append(Witness(k, 0, 0, got, want, "zero-entry" if got == Sign.ZERO else "wrong-sign"))
    return Verdict("alt-sign", family.n, i, j, not wit, tuple(wit), coeffs)


def check_n01_facts(family: SphericalFamily, i: int, j: int,
                    expansion: Optional[LinearizationExpansion] = None) -> Verdict:
    """n=0: every coefficient positive. n=1: even offsets positive, odd offsets zero."""
    if family.l != 0 or family.n not in (0, 1):
        raise ValueError("n=0/n=1 facts apply to l = 0 families with n in {0, 1}")
    i, j = _ordered(i, j)
    exp = expansion or linearize(family, i, j)
    coeffs = {k: exp.scalar(k) for k in exp.coeffs}
    wit = []
    for m in range(2 * i + 1):
        k = j - i + m
        want = Sign.ZERO if (family.n == 1 and m % 2) else Sign.POSITIVE
        got = Sign(sign(coeffs[k]))
        if got != want:
            wit.append(Witness(k, 0, 0, got, want, "zero-entry" if got == Sign.ZERO else "wrong-sign"))
    return Verdict("n01", family.n, i, j, not wit, tuple(wit), coeffs)


@dataclass(frozen=True)
class HookCell:
    k: int
    grid: SignGrid
    expected: Optional[SignGrid]  # None outside the traditional range
    holds: Optional[bool]
    coeffs: RatMatrix

    @property
    def in_range(self) -> bool:
        return self.expected is not None


@dataclass(frozen=True)
class HookReport:
    i: int
    j: int
    l: int
    n: int
    cells: tuple[HookCell, ...]
    witnesses: tuple[Witness, ...]

    @property
    def holds(self) -> bool:
        return all(c.holds for c in self.cells if c.in_range)

    def to_json(self) -> dict:
        return {
            "check": "hook", "n": self.n, "l": self.l, "i": self.i, "j": self.j,
            "holds": self.holds,
            "traditional_range": [self.j - self.i, self.j + self.i],
            "range_rule": RANGE_RULE,
            "cells": [{
                "k": c.k,
                "in_traditional_range": c.in_range,
                "signs": render_grid(c.grid),
                "expected": render_grid(c.expected) if c.expected else None,
                "holds": c.holds,
                "coeffs": c.coeffs.to_json(),
            } for c in self.cells],
            "witnesses": [w.to_json() for w in self.witnesses],
        }


def check_hook(family: SphericalFamily, i: int, j: int,
               expansion: Optional[LinearizationExpansion] = None) -> HookReport:
    """Compare each A_k with k in j-i..j+i to the hook grid of parity (k-(j-i)) mod 2."""
    i, j = _ordered(i, j)
    exp = expansion or linearize(family, i, j)
    size = family.l + 1
    cells, wit = [], []
    for k in range(exp.kmin, exp.kmax + 1):
        A = exp.coeffs[k]
        grid = sign_grid(A)
        if j - i <= k <= j + i:
            expected = hook_pattern(size, (k - (j - i)) % 2)
            bad = _compare(k, grid, expected)
            wit.extend(bad)
            cells.append(HookCell(k, grid, expected, not bad, A))
        else:
            cells.append(HookCell(k, grid, None, None, A))
    return HookReport(i, j, family.l, family.n, tuple(cells), tuple(wit))


@dataclass(frozen=True)
class RangeVerdict:
    n: int
    l: int
    i: int
    j: int
    holds: bool
    kmin: int
    kmax: int
    residual_zero: bool
    padded: tuple[int, ...]  # extra indices tried around the range
    extras_zero: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "check": "range", "n": self.n, "l": self.l, "i": self.i, "j": self.j,
            "holds": self.holds, "kmin": self.kmin, "kmax": self.kmax,
            "residual_zero": self.residual_zero, "padded": list(self.padded),
            "extras_zero": self.extras_zero, "range_rule": RANGE_RULE, "detail": self.detail,
        }


def check_expansion_range(family: SphericalFamily, i: int, j: int, pad: int = 1) -> RangeVerdict:
    """Existence and uniqueness over the stated range, plus zero coefficients on a padded range."""
    i, j = _ordered(i, j)
    try:
        exp = linearize(family, i, j)
    except ExpansionError as exc:
        lo, hi = max(j - i - family.l, 0), i + j + family.l
        return RangeVerdict(family.n, family.l, i, j, False, lo, hi, False, (), False, str(exc))
    lo = max(exp.kmin - pad, 0)
    hi = min(exp.kmax + pad, family.wmax)
    extra = tuple(k for k in range(lo, hi + 1) if not exp.kmin <= k <= exp.kmax)
    extras_zero, detail = True, ""
    if extra:
        try:
            wide = expand_in_basis(family[i] @ family[j], family, range(lo, hi + 1))
            extras_zero = all(wide[k].is_zero() for k in extra)
        except ExpansionError as exc:
            # padding can make the basis dependent; uniqueness on the stated range still stands
            detail = f"padded solve not unique: {exc}"
    holds = exp.residual_zero and extras_zero
    return RangeVerdict(family.n, family.l, i, j, holds, exp.kmin, exp.kmax,
                        exp.residual_zero, extra, extras_zero, detail)
