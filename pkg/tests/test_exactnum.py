from fractions import Fraction

import pytest

from mvsf.exactnum import factorial, parse_rational, pochhammer, rational, sign, to_text


@pytest.mark.parametrize("a, j, expected", [
    (Fraction(5, 2), 0, 1),
    (2, 3, 24),
    (-3, 5, 0),
    (Fraction(1, 2), 2, Fraction(3, 4)),
])
def test_pochhammer(a, j, expected):
    assert pochhammer(a, j) == expected


@pytest.mark.parametrize("j, expected", [(0, 1), (1, 1), (5, 120)])
def test_factorial(j, expected):
    assert factorial(j) == expected
    assert isinstance(factorial(j), Fraction)


def test_negative_indices_rejected():
    with pytest.raises(ValueError):
        pochhammer(1, -1)
    with pytest.raises(ValueError):
        factorial(-2)


@pytest.mark.parametrize("q, text", [
    (Fraction(-32, 429), "-32/429"),
    (Fraction(7), "7"),
    (Fraction(0), "0"),
    (Fraction(3, -6), "-1/2"),
])
def test_canonical_text(q, text):
    assert to_text(q) == text
    assert parse_rational(text) == q


def test_parse_accepts_unicode_minus_and_canonicalizes():
    assert parse_rational("−32/429") == Fraction(-32, 429)
    assert to_text(parse_rational("4/6")) == "2/3"


@pytest.mark.parametrize("bad", ["", "1/", "a/b", "1.5"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_zero_denominator_is_distinct_error():
    with pytest.raises(ZeroDivisionError):
        parse_rational("3/0")
    with pytest.raises(ZeroDivisionError):
        Fraction(1) / 0


def test_rational_coercion():
    assert rational(3) == Fraction(3)
    assert rational("5/2") == Fraction(5, 2)
    with pytest.raises(TypeError):
        rational(True)
    with pytest.raises(TypeError):
        rational(0.5)


def test_sign():
    assert [sign(Fraction(x)) for x in (-3, 0, 2)] == [-1, 0, 1]


def test_exact_roundtrip():
    p, r = Fraction(1, 3), Fraction(10 ** 30 + 1, 7)
    assert (p + r) - r == p
