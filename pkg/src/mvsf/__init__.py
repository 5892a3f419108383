"""Exact matrix-valued spherical functions of the complex projective plane.

Builds the normalized families Phi(w, t) for types (n, l) with l <= 1,
expands products and t*Phi(w) in them with exact rational linear algebra,
checks the sign patterns of the resulting coefficients, and forms the
matrix orthogonal polynomials Psi(j, t) = Phi(j, t) Phi(0, t)^{-1}.
"""
from .exactnum import BigRational, factorial, pochhammer, to_text
from .polyalg import Poly, PolyMatrix, RatMatrix, adjugate_det, solve_exact
from .spherical import SphericalFamily, SphericalType, build_family, eigen_matrices
from .expand import LinearizationExpansion, RecurrenceTriple, linearize, recurrence
from .mop import build_psi

__all__ = [
    "BigRational", "factorial", "pochhammer", "to_text",
    "Poly", "PolyMatrix", "RatMatrix", "adjugate_det", "solve_exact",
    "SphericalFamily", "SphericalType", "build_family", "eigen_matrices",
    "LinearizationExpansion", "RecurrenceTriple", "linearize", "recurrence",
    "build_psi",
]
