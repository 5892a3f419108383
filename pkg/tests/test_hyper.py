from fractions import Fraction

import pytest

from mvsf.exactnum import factorial, pochhammer
from mvsf.hyper import (HypergeomSpec, LowerParamPole, NoTerminator, ZeroShift, build_by_pochhammer,
                        build_terminating, shift_factor_consistency)
from mvsf.polyalg import Poly


def brute_series(upper, lower, shifts, deg):
    """Term-by-term literal sum, each coefficient computed from scratch."""
    out = []
    for j in range(deg + 1):
        c = Fraction(1) / factorial(j)
        for u in upper:
            c *= pochhammer(u, j)
        for l in lower:
            c /= pochhammer(l, j)
        for s in shifts:
            c *= Fraction(s + j) / s
        out.append(c)
    return Poly(out)


def test_2f1_two_terms():
    n = 0
    assert build_terminating(HypergeomSpec([-1, n + 3], [n + 1])) == Poly([1, -3])


def test_terminator_zero_is_constant_one():
    assert build_terminating(HypergeomSpec([0, 7], [3])) == Poly([1])
    assert build_terminating(HypergeomSpec([0, 7, 2], [3], [Fraction(-5, 2)])) == Poly([1])


def test_3f2_with_shift():
    # 3F2(-1, n+3, lam; n+1, lam-1; t) at n=0, lam=-2 is 1 - 2t; scaled by -(n+1) -> -1 + 2t
    lam = -2
    p = build_terminating(HypergeomSpec([-1, 3], [1], [lam - 1]))
    assert p == Poly([1, -2])
    assert p * -1 == Poly([-1, 2])


def test_matches_brute_force():
    cases = [
        ([-4, Fraction(7, 2)], [Fraction(3, 2)], []),
        ([-3, 9], [4], [Fraction(-17, 3)]),
        ([-5, 2, Fraction(1, 3)], [6, Fraction(5, 2)], [7, -11]),
    ]
    for upper, lower, shifts in cases:
        spec = HypergeomSpec(upper, lower, shifts)
        assert build_terminating(spec) == brute_series(upper, lower, shifts, spec.termination_degree)


def test_constant_term_is_one():
    assert build_terminating(HypergeomSpec([-6, 11], [3], [-40])).coeff(0) == 1


def test_actual_degree_can_drop():
    # the shift factor (s+j)/s vanishes at j = 2 when s = -2
    p = build_terminating(HypergeomSpec([-2, 5], [3], [-2]))
    assert p.degree == 1


def test_lower_pole_detected():
    with pytest.raises(LowerParamPole) as info:
        HypergeomSpec([-3, 1], [-1])
    assert info.value.param == -1


def test_lower_param_safe_past_termination():
    # (c)_j only matters for j <= termination degree
    HypergeomSpec([-1, 1], [-1])


def test_zero_shift_rejected():
    with pytest.raises(ZeroShift):
        HypergeomSpec([-2, 1], [1], [0])


def test_terminator_required():
    with pytest.raises(NoTerminator):
        HypergeomSpec([Fraction(1, 2), 3], [1])
    with pytest.raises(NoTerminator):
        HypergeomSpec([-1, -2], [1])


def test_pochhammer_route_agrees_where_defined():
    spec = HypergeomSpec([-4, 6], [2], [Fraction(7, 3)])
    assert build_by_pochhammer(spec) == build_terminating(spec)


def test_pochhammer_route_breaks_where_shift_form_does_not():
    # s = -2: (s)_3 = 0 so the literal quotient is undefined, the shift form is fine
    spec = HypergeomSpec([-4, 6], [2], [-2])
    with pytest.raises(ZeroDivisionError):
        build_by_pochhammer(spec)
    build_terminating(spec)


@pytest.mark.parametrize("s, degree", [(5, 4), (Fraction(-7, 2), 3), (1, 0), (-3, 6)])
def test_shift_factor_consistency(s, degree):
    assert shift_factor_consistency(s, degree)
