from fractions import Fraction

import pytest

from mvsf.polyalg import (NEG_INF, Inconsistent, NotDivisible, Poly, PolyMatrix, RatMatrix,
                          ShapeMismatch, Underdetermined, Unique, adjugate_det, determinant,
                          matpoly_mul, poly_divmod, poly_eval, poly_exact_div, poly_mul,
                          render_poly, solve_exact)

t = Poly.t()


def test_poly_normalizes_trailing_zeros():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([0, 0]).is_zero()
    assert Poly().degree == NEG_INF
    assert Poly([5]).degree == 0


@pytest.mark.parametrize("p, q, expected", [
    (Poly([1, -3]), Poly([1]), Poly([1, -3])),
    (t, t, Poly([0, 0, 1])),
    (Poly([Fraction(-1, 2), Fraction(3, 2)]), Poly([Fraction(-1, 2), Fraction(3, 2)]),
     Poly([Fraction(1, 4), Fraction(-6, 4), Fraction(9, 4)])),
])
def test_poly_mul(p, q, expected):
    assert poly_mul(p, q) == expected
    assert p * q == expected


def test_poly_mul_by_zero():
    assert poly_mul(Poly(), t).is_zero()


@pytest.mark.parametrize("p, x, expected", [
    (Poly([1, -3]), 1, -2),
    (Poly(), Fraction(7, 3), 0),
    (Poly([-1, 2]), 1, 1),  # (n+2)t - (n+1) at n=0
])
def test_poly_eval(p, x, expected):
    assert poly_eval(p, x) == expected


def test_exact_division():
    assert poly_exact_div(Poly([-1, 0, 1]), Poly([-1, 1])) == Poly([1, 1])
    assert poly_exact_div(Poly([-2, 2]), Poly([-1, 1])) == Poly([2])
    with pytest.raises(NotDivisible) as info:
        poly_exact_div(Poly([1, 0, 1]), Poly([-1, 1]))
    assert info.value.remainder == Poly([2])


def test_division_by_zero_poly():
    with pytest.raises(ZeroDivisionError):
        poly_divmod(t, Poly())


def test_divmod_low_degree_dividend():
    q, r = poly_divmod(Poly([3]), Poly([0, 1]))
    assert q.is_zero() and r == Poly([3])


def test_render():
    assert render_poly(Poly([Fraction(-1, 2), Fraction(3, 2)])) == "(-1/2) + (3/2)t"
    assert render_poly(Poly([-1, 2])) == "(-1) + 2t"
    assert render_poly(Poly([0, 0, 1])) == "t^2"
    assert render_poly(Poly()) == "0"


def test_poly_json_roundtrip():
    p = Poly([Fraction(-1, 2), Fraction(3, 2)])
    assert p.to_json() == ["-1/2", "3/2"]
    assert Poly.from_json(p.to_json()) == p
    with pytest.raises(ValueError):
        Poly.from_json([1, 2])


def test_matpoly_identity_and_all_ones():
    A = PolyMatrix.from_rows([[Poly([1, 2]), t], [Poly([3]), Poly([0, 0, 1])]])
    assert matpoly_mul(A, PolyMatrix.identity(2)) == A
    J = PolyMatrix.from_rows([[1, 1], [1, 1]])
    assert J @ J == J * 2


def test_matpoly_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        matpoly_mul(PolyMatrix.identity(2), PolyMatrix.identity(3))
    with pytest.raises(ShapeMismatch):
        PolyMatrix(2, 2, [1, 2, 3])


def test_phi0_times_adjugate_is_det_identity():
    # Phi(0, t) at l=1 is [[1, 1], [1, (n+2)t - (n+1)]]
    for n in range(6):
        phi0 = PolyMatrix.from_rows([[1, 1], [1, Poly([-(n + 1), n + 2])]])
        adj, det = adjugate_det(phi0)
        assert det == Poly([-(n + 2), n + 2])
        assert phi0 @ adj == PolyMatrix.identity(2) * det


def test_adjugate_examples():
    adj, det = adjugate_det(PolyMatrix.identity(2))
    assert adj == PolyMatrix.identity(2) and det == Poly([1])
    adj, det = adjugate_det(PolyMatrix.from_rows([[1, 1], [1, Poly([-1, 2])]]))
    assert adj == PolyMatrix.from_rows([[Poly([-1, 2]), -1], [-1, 1]])
    assert det == Poly([-2, 2])
    same = PolyMatrix.from_rows([[t, 1, 2], [t, 1, 2], [1, t, 0]])
    assert adjugate_det(same)[1].is_zero()
    assert determinant(same).is_zero()


def test_adjugate_3x3():
    A = PolyMatrix.from_rows([[t, 1, 0], [2, t, 1], [0, 3, Poly([1, 1])]])
    adj, det = adjugate_det(A)
    assert A @ adj == PolyMatrix.identity(3) * det
    assert adj @ A == PolyMatrix.identity(3) * det
    assert det == determinant(A)


def test_solve_outcomes():
    rep = solve_exact(RatMatrix.identity(3), [1, Fraction(2, 3), -5])
    assert rep == Unique(x=(1, Fraction(2, 3), -5), rank=3)
    assert isinstance(solve_exact([[1, 1], [2, 2]], [1, 3]), Inconsistent)
    assert solve_exact([[1, 1], [2, 2]], [1, 2]) == Underdetermined(rank=1, free=1)


def test_inconsistent_witness_points_to_original_row():
    rep = solve_exact([[1, 0], [0, 1], [1, 1], [0, 0]], [1, 1, 2, 5])
    assert rep.witness_row == 3


def test_overdetermined_consistent():
    rep = solve_exact([[1, 0], [0, 1], [1, 1]], [2, 3, 5])
    assert rep == Unique(x=(2, 3), rank=2)


def test_solve_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        solve_exact([[1, 0]], [1, 2])


def test_ratmatrix_ops():
    A = RatMatrix.from_rows([[1, 2], [3, 4]])
    assert A.row_sums() == [3, 7]
    assert A @ RatMatrix.identity(2) == A
    assert (A - A).is_zero()
    assert RatMatrix.from_json(A.to_json()) == A
    assert (A @ PolyMatrix.identity(2)) == A.to_poly()
