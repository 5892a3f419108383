"""Dense univariate polynomials over Q, matrices of them, and exact solving."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .exactnum import RationalLike, rational, to_text

NEG_INF = float("-inf")


class NotDivisible(ArithmeticError):
    """Polynomial division left a nonzero remainder."""

    def __init__(self, dividend: "Poly", divisor: "Poly", remainder: "Poly"):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(f"{dividend} is not divisible by {divisor} (remainder {remainder})")


class ShapeMismatch(ValueError):
    pass


class Poly:
    """Polynomial in t with exact rational coefficients, ascending degree.

    Immutable; trailing zeros are stripped so equality is structural.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c: RationalLike) -> "Poly":
        return cls([c])

    @classmethod
    def t(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def promote(cls, x: Union["Poly", RationalLike]) -> "Poly":
        return x if isinstance(x, Poly) else cls([x])

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, p: int) -> Fraction:
        return self.coeffs[p] if 0 <= p < len(self.coeffs) else Fraction(0)

    def __call__(self, x: RationalLike) -> Fraction:
        return poly_eval(self, x)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        other = Poly.promote(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-Poly.promote(other))

    def __rsub__(self, other):
        return Poly.promote(other) - self

    def __mul__(self, other):
        if isinstance(other, Poly):
            return poly_mul(self, other)
        c = rational(other)
        return Poly(c * x for x in self.coeffs)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            return poly_exact_div(self, other)
        c = rational(other)
        return Poly(x / c for x in self.coeffs)

    def __repr__(self):
        return f"Poly([{', '.join(to_text(c) for c in self.coeffs)}])"

    def __str__(self):
        return render_poly(self)

    def to_json(self) -> list[str]:
        return [to_text(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Poly":
        if not isinstance(data, list):
            raise ValueError("polynomial must be a JSON array of rational strings")
        for c in data:
            if not isinstance(c, str):
                raise ValueError(f"polynomial coefficient {c!r} is not a string")
        return cls(data)


def render_poly(p: Poly, var: str = "t") -> str:
    """Human form, ascending powers: ``(-1/2) + (3/2)t``."""
    if p.is_zero():
        return "0"
    terms = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if k == 0:
            mono = ""
        elif k == 1:
            mono = var
        else:
            mono = f"{var}^{k}"
        text = to_text(c)
        if mono and c == 1:
            terms.append(mono)
        elif c < 0 or c.denominator != 1:
            terms.append(f"({text}){mono}")
        else:
            terms.append(f"{text}{mono}")
    return " + ".join(terms)


def poly_mul(p: Poly, q: Poly) -> Poly:
    if p.is_zero() or q.is_zero():
        return Poly()
    out = [Fraction(0)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
    return Poly(out)


def poly_eval(p: Poly, x: RationalLike) -> Fraction:
    x = rational(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_divmod(p: Poly, d: Poly) -> tuple[Poly, Poly]:
    if d.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p.coeffs)
    dd = len(d.coeffs) - 1
    lead = d.coeffs[-1]
    if len(rem) - 1 < dd:
        return Poly(), p
    quot = [Fraction(0)] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k] / lead
        quot[k - dd] = c
        if c:
            for i, b in enumerate(d.coeffs):
                rem[k - dd + i] -= c * b
    return Poly(quot), Poly(rem[:dd])


def poly_exact_div(p: Poly, d: Poly) -> Poly:
    q, r = poly_divmod(p, d)
    if not r.is_zero():
        raise NotDivisible(p, d, r)
    return q


class PolyMatrix:
    """Rows x cols matrix of :class:`Poly`, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(Poly.promote(e) for e in entries)
        if rows <= 0 or cols <= 0:
            raise ShapeMismatch("matrix dimensions must be positive")
        if len(entries) != rows * cols:
            raise ShapeMismatch(f"{len(entries)} entries for a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self.entries: tuple[Poly, ...] = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "PolyMatrix":
        if not rows or not rows[0]:
            raise ShapeMismatch("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeMismatch("ragged rows")
        return cls(len(rows), width, [e for r in rows for e in r])

    @classmethod
    def identity(cls, size: int) -> "PolyMatrix":
        return cls(size, size, [int(r == c) for r in range(size) for c in range(size)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "PolyMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, rc: tuple[int, int]) -> Poly:
        r, c = rc
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> tuple[Poly, ...]:
        return self.entries[r * self.cols:(r + 1) * self.cols]

    def tolist(self) -> list[list[Poly]]:
        return [list(self.row(r)) for r in range(self.rows)]

    def map(self, f) -> "PolyMatrix":
        return PolyMatrix(self.rows, self.cols, [f(e) for e in self.entries])

    def evaluate(self, x: RationalLike) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, [poly_eval(e, x) for e in self.entries])

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def max_degree(self) -> Union[int, float]:
        return max(e.degree for e in self.entries)

    def degrees(self) -> list[list]:
        return [[e.degree for e in self.row(r)] for r in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def _check_same(self, other: "PolyMatrix"):
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same(other)
        return PolyMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check_same(other)
        return PolyMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return self.map(lambda e: -e)

    def __mul__(self, scalar):
        return self.map(lambda e: e * scalar)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, RatMatrix):
            other = other.to_poly()
        return matpoly_mul(self, other)

    def __repr__(self):
        return f"PolyMatrix({self.tolist()!r})"

    def to_json(self) -> list[list[list[str]]]:
        return [[e.to_json() for e in self.row(r)] for r in range(self.rows)]

    @classmethod
    def from_json(cls, data) -> "PolyMatrix":
        if not isinstance(data, list) or not data:
            raise ValueError("matrix must be a nonempty JSON array of rows")
        return cls.from_rows([[Poly.from_json(e) for e in row] for row in data])


def matpoly_mul(A: PolyMatrix, B: PolyMatrix) -> PolyMatrix:
    if A.cols != B.rows:
        raise ShapeMismatch(f"cannot multiply {A.shape} by {B.shape}")
    out = []
    for r in range(A.rows):
        for c in range(B.cols):
            acc = Poly()
            for m in range(A.cols):
                acc = acc + poly_mul(A[r, m], B[m, c])
            out.append(acc)
    return PolyMatrix(A.rows, B.cols, out)


class RatMatrix:
    """Rows x cols matrix of exact rationals, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[RationalLike]):
        entries = tuple(rational(e) for e in entries)
        if rows <= 0 or cols <= 0:
            raise ShapeMismatch("matrix dimensions must be positive")
        if len(entries) != rows * cols:
            raise ShapeMismatch(f"{len(entries)} entries for a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self.entries: tuple[Fraction, ...] = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]]) -> "RatMatrix":
        if not rows or not rows[0]:
            raise ShapeMismatch("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeMismatch("ragged rows")
        return cls(len(rows), width, [e for r in rows for e in r])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> "RatMatrix":
        return cls(size, size, [int(r == c) for r in range(size) for c in range(size)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, rc: tuple[int, int]) -> Fraction:
        r, c = rc
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> tuple[Fraction, ...]:
        return self.entries[r * self.cols:(r + 1) * self.cols]

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(r)) for r in range(self.rows)]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def row_sums(self) -> list[Fraction]:
        return [sum(self.row(r), Fraction(0)) for r in range(self.rows)]

    def to_poly(self) -> PolyMatrix:
        return PolyMatrix(self.rows, self.cols, self.entries)

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other):
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")
        return RatMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")
        return RatMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __matmul__(self, other):
        if isinstance(other, PolyMatrix):
            return matpoly_mul(self.to_poly(), other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        return RatMatrix(self.rows, other.cols, [
            sum((self[r, m] * other[m, c] for m in range(self.cols)), Fraction(0))
            for r in range(self.rows) for c in range(other.cols)
        ])

    def __repr__(self):
        return "RatMatrix([" + ", ".join(
            "[" + ", ".join(to_text(x) for x in self.row(r)) + "]" for r in range(self.rows)
        ) + "])"

    def to_json(self) -> list[list[str]]:
        return [[to_text(x) for x in self.row(r)] for r in range(self.rows)]

    @classmethod
    def from_json(cls, data) -> "RatMatrix":
        if not isinstance(data, list) or not data:
            raise ValueError("matrix must be a nonempty JSON array of rows")
        for row in data:
            if not isinstance(row, list) or not all(isinstance(x, str) for x in row):
                raise ValueError("matrix rows must be arrays of rational strings")
        return cls.from_rows(data)


# ---------------------------------------------------------------------------
# exact linear solving


@dataclass(frozen=True)
class Unique:
    x: tuple[Fraction, ...]
    rank: int


@dataclass(frozen=True)
class Inconsistent:
    witness_row: int  # original equation index whose reduced form reads 0 = nonzero
    rank: int


@dataclass(frozen=True)
class Underdetermined:
    rank: int
    free: int


SolveReport = Union[Unique, Inconsistent, Underdetermined]


def row_reduce(M: Sequence[Sequence[RationalLike]], b: Sequence[RationalLike]):
    """Gauss-Jordan elimination of the augmented system [M | b].

    Returns ``(rows, origin, pivots)``: the reduced augmented rows, the
    original equation index of each reduced row, and the pivot columns.
    """
    nrows = len(M)
    ncols = len(M[0]) if nrows else 0
    rows = [[rational(x) for x in M[r]] + [rational(b[r])] for r in range(nrows)]
    origin = list(range(nrows))
    pivots: list[int] = []
    pr = 0
    for col in range(ncols):
        sel = next((r for r in range(pr, nrows) if rows[r][col] != 0), None)
        if sel is None:
            continue
        rows[pr], rows[sel] = rows[sel], rows[pr]
        origin[pr], origin[sel] = origin[sel], origin[pr]
        piv = rows[pr][col]
        prow = rows[pr] = [x / piv for x in rows[pr]]
        for r in range(nrows):
            if r != pr:
                f = rows[r][col]
                if f:
                    rows[r] = [x - f * y for x, y in zip(rows[r], prow)]
        pivots.append(col)
        pr += 1
        if pr == nrows:
            break
    return rows, origin, pivots


def solve_exact(M: Union[RatMatrix, Sequence[Sequence[RationalLike]]],
                b: Sequence[RationalLike]) -> SolveReport:
    """Solve ``M x = b`` over Q and classify the outcome.

    Inconsistency takes precedence over rank deficiency.
    """
    if isinstance(M, RatMatrix):
        M = M.tolist()
    if len(M) != len(b):
        raise ShapeMismatch(f"{len(M)} equations but {len(b)} right-hand sides")
    ncols = len(M[0]) if M else 0
    rows, origin, pivots = row_reduce(M, b)
    rank = len(pivots)
    for r in range(rank, len(rows)):
        if rows[r][-1] != 0:
            return Inconsistent(witness_row=origin[r], rank=rank)
    if rank < ncols:
        return Underdetermined(rank=rank, free=ncols - rank)
    x = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        x[col] = rows[r][-1]
    return Unique(x=tuple(x), rank=rank)


def matrix_rank(M: Sequence[Sequence[RationalLike]]) -> int:
    if not M:
        return 0
    return len(row_reduce(M, [0] * len(M))[2])


def determinant(A: PolyMatrix) -> Poly:
    if A.rows != A.cols:
        raise ShapeMismatch("determinant of a non-square matrix")
    return _det([list(A.row(r)) for r in range(A.rows)])


def _det(rows: list[list[Poly]]) -> Poly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = Poly()
    for c in range(n):
        if rows[0][c].is_zero():
            continue
        minor = [r[:c] + r[c + 1:] for r in rows[1:]]
        term = rows[0][c] * _det(minor)
        acc = acc + term if c % 2 == 0 else acc - term
    return acc


def adjugate_det(A: PolyMatrix) -> tuple[PolyMatrix, Poly]:
    """Adjugate and determinant by cofactor expansion (intended for tiny sizes)."""
    if A.rows != A.cols:
        raise ShapeMismatch("adjugate of a non-square matrix")
    n = A.rows
    rows = [list(A.row(r)) for r in range(n)]
    if n == 1:
        return PolyMatrix.identity(1), rows[0][0]
    adj = [[Poly()] * n for _ in range(n)]
    for r in range(n):
        for c in range(n):
            minor = [row[:c] + row[c + 1:] for i, row in enumerate(rows) if i != r]
            cof = _det(minor)
            # adj is the transposed cofactor matrix
            adj[c][r] = cof if (r + c) % 2 == 0 else -cof
    det = Poly()
    for c in range(n):
        det = det + rows[0][c] * adj[c][0]
    return PolyMatrix.from_rows(adj), det
