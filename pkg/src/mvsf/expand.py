"""Left-coefficient expansion of polynomial matrices in a spherical family.

A target T(t) with l+1 columns is written as sum_k A_k Phi(k, t) with
constant A_k. Row r of the identity only involves row r of each A_k, so
each target row is an independent linear system over Q: one equation per
(column, power of t), one unknown per (k, entry of row r of A_k).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .polyalg import (Inconsistent, Poly, PolyMatrix, RatMatrix, ShapeMismatch,
                      Underdetermined, solve_exact)
from .spherical import SphericalFamily

_T = Poly.t()

RANGE_RULE = "k from max(j-i-l, 0) to i+j+l"
RANGE_NOTE = ("lower bound read as max(j-i-l, 0); the printed min(j-i-l, 0) would start at 0 "
              "and contradicts the worked l=1 example")


class ExpansionError(ArithmeticError):
    pass


class BasisInsufficient(ExpansionError):
    def __init__(self, row: int, equation: int, rank: int):
        self.row, self.equation, self.rank = row, equation, rank
        super().__init__(
            f"target row {row} is not in the span of the basis "
            f"(equation {equation} inconsistent, rank {rank})")


class BasisDependent(ExpansionError):
    def __init__(self, row: int, rank: int, free: int):
        self.row, self.rank, self.free = row, rank, free
        super().__init__(
            f"expansion of target row {row} is not unique (rank {rank}, {free} free unknowns)")


class RecurrenceDegenerate(BasisDependent):
    pass


class MissingMember(ExpansionError):
    pass


def _basis_system(family: SphericalFamily, indices: list[int], cols: int, maxdeg: int):
    size = family.l + 1
    unknowns = [(k, c) for k in indices for c in range(size)]
    M = []
    for col in range(cols):
        for p in range(maxdeg + 1):
            M.append([family[k][c, col].coeff(p) for k, c in unknowns])
    return unknowns, M


def expand_in_basis(target: PolyMatrix, family: SphericalFamily,
                    indices: Iterable[int]) -> dict[int, RatMatrix]:
    indices = sorted(set(indices))
    size = family.l + 1
    if not family.normalized:
        raise ExpansionError("expansions are defined over the normalized family")
    for k in indices:
        if k not in family:
            raise MissingMember(f"family has no member w={k}")
    if target.cols != size:
        raise ShapeMismatch(f"target has {target.cols} columns, family members have {size}")
    maxdeg = max([int(target.max_degree()) if not target.is_zero() else 0]
                 + [int(family[k].max_degree()) for k in indices])
    unknowns, M = _basis_system(family, indices, target.cols, maxdeg)
    coeffs = {k: [[Fraction(0)] * size for _ in range(target.rows)] for k in indices}
    for r in range(target.rows):
        b = [target[r, col].coeff(p) for col in range(target.cols) for p in range(maxdeg + 1)]
        rep = solve_exact(M, b)
        if isinstance(rep, Inconsistent):
            raise BasisInsufficient(r, rep.witness_row, rep.rank)
        if isinstance(rep, Underdetermined):
            raise BasisDependent(r, rep.rank, rep.free)
        for (k, c), x in zip(unknowns, rep.x):
            coeffs[k][r][c] = x
    return {k: RatMatrix.from_rows(rows) for k, rows in coeffs.items()}


def combine(coeffs: Mapping[int, RatMatrix], family: SphericalFamily) -> PolyMatrix:
    size = family.l + 1
    rows = next(iter(coeffs.values())).rows if coeffs else size
    acc = PolyMatrix.zeros(rows, size)
    for k in sorted(coeffs):
        acc = acc + coeffs[k] @ family[k]
    return acc


def expansion_range(l: int, i: int, j: int) -> tuple[int, int]:
    return max(j - i - l, 0), i + j + l


@dataclass(frozen=True)
class LinearizationExpansion:
    l: int
    n: int
    i: int
    j: int
    kmin: int
    kmax: int
    coeffs: Mapping[int, RatMatrix]
    residual_zero: bool

    def total(self) -> RatMatrix:
        size = self.l + 1
        acc = RatMatrix.zeros(size, size)
        for k in sorted(self.coeffs):
            acc = acc + self.coeffs[k]
        return acc

    def scalar(self, k: int) -> Fraction:
        return self.coeffs[k][0, 0]

    def to_json(self) -> dict:
        return {
            "l": self.l, "n": self.n, "i": self.i, "j": self.j,
            "kmin": self.kmin, "kmax": self.kmax,
            "coeffs": {str(k): self.coeffs[k].to_json() for k in sorted(self.coeffs)},
            "residual_zero": self.residual_zero,
            "range_rule": RANGE_RULE,
        }

    @classmethod
    def from_json(cls, data: dict) -> "LinearizationExpansion":
        coeffs = {int(k): RatMatrix.from_json(v) for k, v in data["coeffs"].items()}
        return cls(data["l"], data["n"], data["i"], data["j"], data["kmin"], data["kmax"],
                   coeffs, data["residual_zero"])


def linearize(family: SphericalFamily, i: int, j: int) -> LinearizationExpansion:
    """Expand Phi(i)Phi(j) over k = max(j-i-l, 0) .. i+j+l and certify the residual."""
    if i > j:
        raise ValueError("linearize expects i <= j")
    kmin, kmax = expansion_range(family.l, i, j)
    target = family[i] @ family[j]
    coeffs = expand_in_basis(target, family, range(kmin, kmax + 1))
    residual = combine(coeffs, family) - target
    return LinearizationExpansion(family.l, family.n, i, j, kmin, kmax, coeffs, residual.is_zero())


@dataclass(frozen=True)
class RecurrenceTriple:
    w: int
    A: RatMatrix
    B: RatMatrix
    C: RatMatrix

    def row_sums(self) -> list[Fraction]:
        return (self.A + self.B + self.C).row_sums()

    def to_json(self) -> dict:
        return {"w": self.w, "A": self.A.to_json(), "B": self.B.to_json(), "C": self.C.to_json()}


def recurrence(family: SphericalFamily, w: int) -> RecurrenceTriple:
    """Solve A Phi(w-1) + B Phi(w) + C Phi(w+1) = t Phi(w); A is zero at w = 0."""
    size = family.l + 1
    target = family[w].map(lambda e: e * _T)
    indices = [w, w + 1] if w == 0 else [w - 1, w, w + 1]
    try:
        coeffs = expand_in_basis(target, family, indices)
    except BasisDependent as exc:
        raise RecurrenceDegenerate(exc.row, exc.rank, exc.free) from None
    A = coeffs[w - 1] if w > 0 else RatMatrix.zeros(size, size)
    return RecurrenceTriple(w, A, coeffs[w], coeffs[w + 1])


def check_recurrence(family: SphericalFamily, triple: RecurrenceTriple) -> bool:
    w = triple.w
    lhs = triple.B @ family[w] + triple.C @ family[w + 1]
    if w > 0:
        lhs = lhs + triple.A @ family[w - 1]
    return lhs == family[w].map(lambda e: e * _T)


def diagonal_offsets(M: RatMatrix) -> list[int]:
    """Sorted offsets c - r of the diagonals holding nonzero entries."""
    return sorted({c - r for r in range(M.rows) for c in range(M.cols) if M[r, c] != 0})


def sparsity_report(triple: RecurrenceTriple, l: int) -> dict:
    """Check that A and C occupy at most two diagonals each and B is tridiagonal.

    A matrix of size 1 satisfies every claim; at size 2 the tridiagonal claim
    on B holds for any matrix, while the two-diagonal claims still exclude a
    full 2x2 matrix. Per-claim ``vacuous`` flags record which is which.
    """
    size = l + 1
    a_off = diagonal_offsets(triple.A)
    b_off = diagonal_offsets(triple.B)
    c_off = diagonal_offsets(triple.C)
    a_two = len(a_off) <= 2
    c_two = len(c_off) <= 2
    b_tri = all(abs(d) <= 1 for d in b_off)
    return {
        "w": triple.w,
        "size": size,
        "A_offsets": a_off,
        "B_offsets": b_off,
        "C_offsets": c_off,
        "A_two_diagonals": a_two,
        "C_two_diagonals": c_two,
        "B_tridiagonal": b_tri,
        "two_diagonals_vacuous": size <= 1,
        "tridiagonal_vacuous": size <= 2,
        "conforms": a_two and c_two and b_tri,
    }
