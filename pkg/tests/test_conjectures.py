from fractions import Fraction

import pytest

from mvsf.conjectures import (Sign, check_alt_sign_l0, check_expansion_range, check_hook,
                              check_n01_facts, hook_pattern, render_grid, sign_grid)
from mvsf.expand import linearize
from mvsf.papertables import eval_table
from mvsf.polyalg import RatMatrix
from mvsf.spherical import build_family

P, N, Z = Sign.POSITIVE, Sign.NEGATIVE, Sign.ZERO


def test_sign_grid_zero():
    assert sign_grid(RatMatrix.zeros(2, 2)) == ((Z, Z), (Z, Z))


def test_sign_grid_a4_a5_at_n2():
    """Signs of the published A_4, A_5 at n=2 (evaluated from the table formulas)."""
    table = eval_table("l1_i2_j6", 2)
    assert sign_grid(table[4]) == ((P, P), (P, N))
    # the (1,2) entry of A_5 is positive at n=2: its quartic is -17900 under a leading minus
    assert sign_grid(table[5]) == ((N, P), (N, P))
    exp = linearize(build_family(2, 1, 9), 2, 6)
    assert sign_grid(exp.coeffs[4]) == sign_grid(table[4])
    assert sign_grid(exp.coeffs[5]) == sign_grid(table[5])


@pytest.mark.parametrize("size, parity, expected", [
    (2, 0, ((P, P), (P, N))),
    (2, 1, ((N, N), (N, P))),
    (3, 0, ((P, P, P), (P, N, N), (P, N, P))),
])
def test_hook_pattern_examples(size, parity, expected):
    assert hook_pattern(size, parity) == expected


def test_hook_pattern_formula():
    for s in range(1, 7):
        for p in (0, 1):
            g = hook_pattern(s, p)
            for r in range(1, s + 1):
                for c in range(1, s + 1):
                    assert g[r - 1][c - 1] == (-1) ** (min(r, c) - 1 + p)


def test_render_grid():
    assert render_grid(hook_pattern(2, 1)) == ["- -", "- +"]


def test_alt_sign_n2_i3_j4():
    v = check_alt_sign_l0(build_family(2, 0, 7), 3, 4)
    assert v.holds
    assert v.coeffs[1] > 0 and v.coeffs[2] == Fraction(-32, 429)


def test_alt_sign_n1_fails_with_zero_witnesses():
    v = check_alt_sign_l0(build_family(1, 0, 7), 3, 4)
    assert not v.holds
    assert sorted(w.k for w in v.witnesses) == [2, 4, 6]
    assert all(w.kind == "zero-entry" for w in v.witnesses)
    assert all(v.coeffs[k] == 0 for k in (2, 4, 6))


def test_alt_sign_i0_vacuous():
    for n in range(2, 5):
        assert check_alt_sign_l0(build_family(n, 0, 6), 0, 6).holds


def test_alt_sign_rejects_l1():
    with pytest.raises(ValueError):
        check_alt_sign_l0(build_family(2, 1, 3), 1, 1)


def test_n01_facts():
    v = check_n01_facts(build_family(0, 0, 2), 1, 1)
    assert v.holds and v.coeffs == {0: Fraction(1, 8), 1: Fraction(1, 5), 2: Fraction(27, 40)}
    v = check_n01_facts(build_family(1, 0, 7), 3, 4)
    assert v.holds and all(v.coeffs[k] == 0 for k in (2, 4, 6))
    v = check_n01_facts(build_family(0, 0, 5), 0, 5)
    assert v.holds and v.coeffs == {5: 1}


def test_n01_rejects_other_n():
    with pytest.raises(ValueError):
        check_n01_facts(build_family(2, 0, 4), 1, 2)


def test_hook_l1_n2_i2_j6_report():
    rep = check_hook(build_family(2, 1, 9), 2, 6)
    cells = {c.k: c for c in rep.cells}
    assert not cells[3].in_range and cells[3].holds is None
    assert not cells[9].in_range
    assert cells[4].expected == hook_pattern(2, 0) and cells[4].holds
    assert cells[5].expected == hook_pattern(2, 1)
    # the published matrices themselves break the hook picture at n = 2
    assert not cells[5].holds and not cells[7].holds
    assert {(w.k, w.row, w.col, w.kind) for w in rep.witnesses} == {
        (5, 0, 1, "wrong-sign"), (7, 0, 1, "wrong-sign")}
    assert not rep.holds


def test_hook_holds_for_larger_n():
    for n in (4, 6, 9):
        fam = build_family(n, 1, 12)
        for i in range(1, 5):
            for j in range(i + 1, 7):
                assert check_hook(fam, i, j).holds


def test_hook_parity_advances_by_one():
    rep = check_hook(build_family(5, 1, 12), 3, 6)
    inside = [c for c in rep.cells if c.in_range]
    assert [c.k for c in inside] == list(range(3, 10))
    for a, b in zip(inside, inside[1:]):
        assert a.expected[0][0] != b.expected[0][0]


def test_hook_and_alt_sign_agree_at_l0():
    for n in (2, 3, 6):
        fam = build_family(n, 0, 12)
        for i in range(0, 5):
            for j in range(i + 1, 7):
                assert check_hook(fam, i, j).holds == check_alt_sign_l0(fam, i, j).holds


def test_reports_are_deterministic():
    fam = build_family(3, 1, 10)
    assert check_hook(fam, 2, 5).to_json() == check_hook(fam, 2, 5).to_json()


def test_expansion_range_check():
    for l in (0, 1):
        fam = build_family(2, l, 12)
        for i in range(0, 4):
            for j in range(i, 5):
                v = check_expansion_range(fam, i, j)
                assert v.holds and v.residual_zero and v.extras_zero
