"""Matrix orthogonal polynomials Psi(j, t) = Phi(j, t) Phi(0, t)^{-1}.

The inverse is taken as adj(Phi(0)) / det(Phi(0)) and every entry of
Phi(j) adj(Phi(0)) must divide exactly by the determinant. A division
failure is raised, never papered over.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .expand import RecurrenceTriple
from .polyalg import Poly, PolyMatrix, adjugate_det, poly_exact_div
from .spherical import SphericalFamily, SphericalType

_T = Poly.t()


class SingularBase(ArithmeticError):
    pass


def _base_inverse_parts(family: SphericalFamily) -> tuple[PolyMatrix, Poly]:
    adj, det = adjugate_det(family[0])
    if det.is_zero():
        raise SingularBase("det Phi(0, t) is identically zero")
    return adj, det


def build_psi(family: SphericalFamily, j: int) -> PolyMatrix:
    if not family.normalized:
        raise ValueError("Psi is built from the normalized family")
    adj, det = _base_inverse_parts(family)
    num = family[j] @ adj
    return num.map(lambda e: poly_exact_div(e, det))


@dataclass(frozen=True)
class PsiFamily:
    type: SphericalType
    members: Mapping[int, PolyMatrix]

    @property
    def degrees(self) -> dict[int, int]:
        return {j: int(m.max_degree()) for j, m in sorted(self.members.items())}

    def __getitem__(self, j: int) -> PolyMatrix:
        return self.members[j]

    def degree_nondecreasing(self) -> bool:
        d = [self.degrees[j] for j in sorted(self.members)]
        return all(a <= b for a, b in zip(d, d[1:]))


def build_psi_family(family: SphericalFamily, indices: Iterable[int]) -> PsiFamily:
    return PsiFamily(family.type, {j: build_psi(family, j) for j in sorted(set(indices))})


def verify_psi_recurrence(psi: PsiFamily, triple: RecurrenceTriple, w: int) -> bool:
    """A_w Psi(w-1) + B_w Psi(w) + C_w Psi(w+1) == t Psi(w), by direct arithmetic."""
    if triple.w != w:
        raise ValueError(f"triple is for w={triple.w}, not {w}")
    lhs = triple.B @ psi[w] + triple.C @ psi[w + 1]
    if w > 0:
        lhs = lhs + triple.A @ psi[w - 1]
    elif not triple.A.is_zero():
        return False
    return lhs == psi[w].map(lambda e: e * _T)
