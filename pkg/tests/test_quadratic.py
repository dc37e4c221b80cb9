from fractions import Fraction

import pytest

from binsums.quadratic import QuadValue


def test_square_factors_are_extracted():
    assert QuadValue(0, 1, 8) == QuadValue(0, 2, 2)
    assert QuadValue(0, 1, 45) == QuadValue(0, 3, 5)


def test_perfect_square_discriminant_collapses():
    assert QuadValue(1, 2, 9) == QuadValue(7)
    assert QuadValue(0, 3, 1) == QuadValue(3)
    assert QuadValue(2, 5, 0) == QuadValue(2)  # sqrt(0) contributes nothing


def test_zero_surd_part_clears_discriminant():
    v = QuadValue(Fraction(3, 2), 0, 5)
    assert v.d == 0 and v.is_rational


def test_golden_ratio_arithmetic():
    phi = QuadValue(Fraction(1, 2), Fraction(1, 2), 5)
    assert phi * phi == phi + 1
    psi = QuadValue(Fraction(1, 2), Fraction(-1, 2), 5)
    assert phi + psi == QuadValue(1)
    assert phi * psi == QuadValue(-1)
    assert phi - psi == QuadValue(0, 1, 5)


def test_rational_interop():
    v = QuadValue(0, 1, 5)
    assert 2 * v == QuadValue(0, 2, 5)
    assert v + Fraction(1, 2) == QuadValue(Fraction(1, 2), 1, 5)
    assert 1 - v == QuadValue(1, -1, 5)


def test_mixed_discriminants_rejected():
    with pytest.raises(ValueError):
        QuadValue(0, 1, 5) + QuadValue(0, 1, 3)
    with pytest.raises(ValueError):
        QuadValue(0, 1, 5) * QuadValue(0, 1, 3)


def test_negative_discriminant_rejected():
    with pytest.raises(ValueError):
        QuadValue(0, 1, -5)


def test_str_form():
    assert str(QuadValue(Fraction(-3))) == "-3"
    assert str(QuadValue(0, 1, 5)) == "0+1√5"
    assert str(QuadValue(1, Fraction(-1, 2), 3)) == "1-1/2√3"


def test_truthiness():
    assert not QuadValue(0)
    assert QuadValue(0, 1, 5)
    assert QuadValue(3)
