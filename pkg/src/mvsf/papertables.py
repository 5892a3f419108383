"""Published linearization coefficients as exact rational functions of n.

Two tables are held: the scalar coefficients a_1..a_7 of Phi(3)Phi(4) at
l=0 and the 2x2 matrices A_3..A_9 of Phi(2)Phi(6) at l=1. Each entry is
kept as the printed text, a signed constant times a product of
parenthesized integer polynomials in n over another such product, and is
parsed once at import. Fractions printed across two lines over a shared
denominator are stored with their numerators joined.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from .expand import LinearizationExpansion
from .polyalg import RatMatrix, ShapeMismatch

_TERM = re.compile(r"([+-]?)(\d*)(n(?:\^(\d+))?)?")


def _parse_poly(text: str) -> tuple[int, ...]:
    """Integer polynomial in n, e.g. ``7n^3+52n^2+67n+162``, as ascending coefficients."""
    s = text.replace(" ", "")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
        sgn, digits, mono, power = m.groups()
        if not digits and not mono:
            raise ValueError(f"dangling sign in {text!r}")
        c = int(digits) if digits else 1
        if sgn == "-":
            c = -c
        deg = (int(power) if power else 1) if mono else 0
        coeffs[deg] = coeffs.get(deg, 0) + c
        pos = m.end()
    top = max(coeffs)
    return tuple(coeffs.get(d, 0) for d in range(top + 1))


def _parse_product(text: str) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """``-6(n-1)(n+6)^2`` -> (-6, ((-1, 1), (6, 1), (6, 1)))."""
    s = text.replace(" ", "")
    m = re.match(r"([+-]?)(\d*)", s)
    const = int(m.group(2)) if m.group(2) else 1
    if m.group(1) == "-":
        const = -const
    factors = []
    for fm in re.finditer(r"\(([^()]*)\)(?:\^(\d+))?", s[m.end():]):
        poly = _parse_poly(fm.group(1))
        factors.extend([poly] * (int(fm.group(2)) if fm.group(2) else 1))
    rebuilt = re.sub(r"\(([^()]*)\)(?:\^(\d+))?", "", s[m.end():])
    if rebuilt:
        raise ValueError(f"unparsed residue {rebuilt!r} in {text!r}")
    return const, tuple(factors)


def _eval_int_poly(coeffs: tuple[int, ...], n: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * n + c
    return acc


@dataclass(frozen=True)
class RationalFunctionOfN:
    """c_num * prod(num factors) / (c_den * prod(den factors)), factors in Z[n]."""

    text: str
    num_const: int = field(init=False)
    num_factors: tuple[tuple[int, ...], ...] = field(init=False)
    den_const: int = field(init=False)
    den_factors: tuple[tuple[int, ...], ...] = field(init=False)

    def __post_init__(self):
        num, _, den = self.text.partition("/")
        nc, nf = _parse_product(num)
        dc, df = _parse_product(den) if den else (1, ())
        object.__setattr__(self, "num_const", nc)
        object.__setattr__(self, "num_factors", nf)
        object.__setattr__(self, "den_const", dc)
        object.__setattr__(self, "den_factors", df)

    def __call__(self, n: int) -> Fraction:
        num = self.num_const
        for f in self.num_factors:
            num *= _eval_int_poly(f, n)
        den = self.den_const
        for f in self.den_factors:
            den *= _eval_int_poly(f, n)
        return Fraction(num, den)


def _rf(text: str) -> RationalFunctionOfN:
    return RationalFunctionOfN(text)


ZERO = _rf("0")

# Phi(3,t) Phi(4,t) = sum_{k=1}^{7} a_k Phi(k,t), l = 0
L0_I3_J4: dict[int, RationalFunctionOfN] = {
    1: _rf("(n+2)(n+3)(n+4) / (n+8)(n+9)(n+10)"),
    2: _rf("-6(n-1)(n+3)(n+4)(n+6)^2 / (n+7)(n+8)(n+9)(n+10)(n+11)"),
    3: _rf("3(n+4)(n+5)(7n^3+52n^2+67n+162) / (n+7)(n+9)(n+10)(n+11)(n+12)"),
    4: _rf("-4(n-1)(n+6)(11n^3+123n^2+436n+648) / (n+8)(n+9)(n+11)(n+12)(n+13)"),
    5: _rf("3(n+5)(n+6)(n+7)(19n^3+155n^2+162n+504) / (n+8)(n+9)(n+10)(n+11)(n+13)(n+14)"),
    6: _rf("-42(n-1)(n+5)(n+6)^2(n+7)(n+8) / (n+9)(n+10)(n+11)(n+12)(n+13)(n+15)"),
    7: _rf("14(n+5)(n+6)^2(n+7)^2(n+8) / (n+10)(n+11)(n+12)(n+13)(n+14)(n+15)"),
}

# Phi(2,t) Phi(6,t) = sum_{k=3}^{9} A_k Phi(k,t), l = 1; entries row-major
L1_I2_J6: dict[int, tuple[tuple[RationalFunctionOfN, ...], ...]] = {
    3: (
        (ZERO, ZERO),
        (ZERO, _rf("16(n+4)(n+5)(n+6)^2(n+7)^2 / (n+11)(n+12)(n+13)(n+14)(n+15)(n+16)")),
    ),
    4: (
        (_rf("15(n+5)^2(n+6)(n+8) / 2(n+12)(n+13)(n+14)(n+15)"),
         _rf("5(n+5)(n+6)(4n^2+55n+216) / 6(n+13)(n+14)(n+15)(n+16)")),
        (_rf("(n+5)(n+6)(n+7)(8n^2+153n+724) / 2(n+12)(n+13)(n+14)(n+15)(n+16)"),
         _rf("-5(n+6)(n+7)(248n^4+4665n^3+27202n^2+45137n-23252)"
             " / 12(n+11)(n+13)(n+14)(n+15)(n+16)(n+17)")),
    ),
    5: (
        (_rf("-(n+5)(n+6)(185n^3+3284n^2+15732n+10368) / 6(n+7)(n+12)(n+14)(n+15)(n+16)"),
         _rf("-(n+5)(85n^4+1817n^3+11380n^2+7072n-93460) / 7(n+7)(n+13)(n+15)(n+16)(n+17)")),
        (_rf("-(n+6)^2(170n^4+4735n^3+42068n^2+99767n-168628)"
             " / 12(n+7)(n+12)(n+14)(n+15)(n+16)(n+17)"),
         _rf("(4327n^7+163698n^6+2480127n^5+19091004n^4+78090428n^3+163454544n^2"
             "+172290528n+132098688) / 14(n+7)(n+12)(n+13)(n+15)(n+16)(n+17)(n+18)")),
    ),
    6: (
        (_rf("2(193n^5+5832n^4+65284n^3+328884n^2+727621n+634422)"
             " / 7(n+8)(n+13)(n+14)(n+16)(n+17)"),
         _rf("(171n^5+4729n^4+45764n^3+188570n^2+442336n+1133640)"
             " / 8(n+8)(n+14)(n+15)(n+17)(n+18)")),
        (_rf("(171n^6+7071n^5+116213n^4+959879n^3+4245034n^2+10640548n+15755112)"
             " / 7(n+8)(n+13)(n+14)(n+16)(n+17)(n+18)"),
         _rf("-(4269n^7+169934n^6+2677678n^5+21066480n^4+85737209n^3+169428298n^2"
             "+129986220n-46794888) / 8(n+8)(n+13)(n+14)(n+15)(n+17)(n+18)(n+19)")),
    ),
    7: (
        (_rf("-3(n+5)(129n^4+3710n^3+36430n^2+129960n+76536)"
             " / 8(n+9)(n+14)(n+15)(n+16)(n+18)"),
         _rf("-(n+5)(n+10)(57n^3+917n^2+2274n-11268) / 3(n+9)(n+15)(n+16)(n+17)(n+19)")),
        (_rf("-3(57n^6+2505n^5+44489n^4+389955n^3+1576582n^2+1465908n-4434696)"
             " / 8(n+9)(n+14)(n+15)(n+16)(n+18)(n+19)"),
         _rf("2(n+10)(829n^6+27979n^5+352571n^4+2024521n^3+5197384n^2+5712396n+5004720)"
             " / 3(n+9)(n+14)(n+15)(n+16)(n+17)(n+19)(n+20)")),
    ),
    8: (
        (_rf("5(n+5)(n+6)(21n^2+401n+1920) / 6(n+15)(n+16)(n+17)(n+18)"),
         _rf("15(n+5)(n+6)(n+8)(n+11) / 2(n+16)(n+17)(n+18)(n+19)")),
        (_rf("5(n+6)(10n^4+329n^3+4942n^2+36611n+96300) / 6(n+15)(n+16)(n+17)(n+18)(n+20)"),
         _rf("-3(n+6)(n+11)(430n^4+9773n^3+67728n^2+129129n-59220)"
             " / 4(n+15)(n+16)(n+17)(n+18)(n+19)(n+21)")),
    ),
    9: (
        (ZERO, ZERO),
        (_rf("99(n+4)(n+6)(n+7)(n+10) / 4(n+16)(n+17)(n+18)(n+19)(n+20)"),
         _rf("165(n+4)(n+6)(n+7)(n+8)(n+10)(n+12) / 2(n+16)(n+17)(n+18)(n+19)(n+20)(n+21)")),
    ),
}


@dataclass(frozen=True)
class PaperTable:
    which: str
    l: int
    i: int
    j: int
    entries: Mapping[int, tuple[tuple[RationalFunctionOfN, ...], ...]]

    @property
    def kmin(self) -> int:
        return min(self.entries)

    @property
    def kmax(self) -> int:
        return max(self.entries)


TABLES: dict[str, PaperTable] = {
    "l0_i3_j4": PaperTable("l0_i3_j4", 0, 3, 4, {k: ((f,),) for k, f in L0_I3_J4.items()}),
    "l1_i2_j6": PaperTable("l1_i2_j6", 1, 2, 6, L1_I2_J6),
}


# Entries whose printed form disagrees with the exact expansion and with the
# table's own row-sum identity; applied only when explicitly requested.
# key: (table, k, row, col) zero-based -> (printed, corrected)
ERRATA: dict[tuple[str, int, int, int], tuple[RationalFunctionOfN, RationalFunctionOfN]] = {
    ("l1_i2_j6", 5, 0, 1): (
        L1_I2_J6[5][0][1],
        _rf("-(n+5)(85n^4+1817n^3+11380n^2+7072n-93560) / 7(n+7)(n+13)(n+15)(n+16)(n+17)"),
    ),
}


def eval_table(which: str, n: int, errata: bool = False) -> dict[int, RatMatrix]:
    """Evaluate every entry at n; ``errata=True`` swaps in the ERRATA corrections."""
    if n < 0:
        raise ValueError("tables are evaluated at n >= 0")
    table = TABLES[which]
    out = {}
    for k, grid in sorted(table.entries.items()):
        rows = []
        for r, row in enumerate(grid):
            vals = []
            for c, f in enumerate(row):
                if errata and (which, k, r, c) in ERRATA:
                    f = ERRATA[which, k, r, c][1]
                vals.append(f(n))
            rows.append(vals)
        out[k] = RatMatrix.from_rows(rows)
    return out


@dataclass(frozen=True)
class Mismatch:
    k: int
    row: int
    col: int
    table: Fraction
    computed: Fraction


@dataclass(frozen=True)
class DiffReport:
    which: str
    n: int
    mismatches: tuple[Mismatch, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def compare_with_computed(which: str, n: int, expansion: LinearizationExpansion,
                          errata: bool = False) -> DiffReport:
    table = TABLES[which]
    if (expansion.l, expansion.i, expansion.j) != (table.l, table.i, table.j):
        raise ShapeMismatch(
            f"expansion is for l={expansion.l}, i={expansion.i}, j={expansion.j}; "
            f"table {which} is for l={table.l}, i={table.i}, j={table.j}")
    if expansion.n != n:
        raise ValueError(f"expansion computed at n={expansion.n}, comparison requested at n={n}")
    if (expansion.kmin, expansion.kmax) != (table.kmin, table.kmax) \
            or sorted(expansion.coeffs) != sorted(table.entries):
        raise ShapeMismatch(
            f"expansion range {expansion.kmin}..{expansion.kmax} vs table {table.kmin}..{table.kmax}")
    values = eval_table(which, n, errata)
    bad = []
    for k in sorted(values):
        want, got = values[k], expansion.coeffs[k]
        for r in range(want.rows):
            for c in range(want.cols):
                if want[r, c] != got[r, c]:
                    bad.append(Mismatch(k, r, c, want[r, c], got[r, c]))
    return DiffReport(which, n, tuple(bad))


def table_row_sums(which: str, n: int, errata: bool = False) -> list[Fraction]:
    values = eval_table(which, n, errata)
    size = TABLES[which].l + 1
    acc: Optional[RatMatrix] = None
    for m in values.values():
        acc = m if acc is None else acc + m
    assert acc is not None and acc.rows == size
    return acc.row_sums()
