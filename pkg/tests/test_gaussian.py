from fractions import Fraction

import pytest
from hypothesis import given

from apolaris import GaussianRational as G

from conftest import gaussians


def test_lowest_terms_and_positive_denominator():
    c = G(Fraction(4, -6), Fraction(10, 4))
    assert (c.re.numerator, c.re.denominator) == (-2, 3)
    assert (c.im.numerator, c.im.denominator) == (5, 2)


def test_arithmetic():
    a, b = G(1, 2), G(3, -1)
    assert a + b == G(4, 1)
    assert a - b == G(-2, 3)
    assert a * b == G(5, 5)
    assert (a * b) / b == a
    assert G(0, 1) ** 2 == -1
    assert 2 * a == G(2, 4)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        G(1) / G(0)


def test_str():
    assert str(G(Fraction(1, 2), 1)) == "(1/2 + i)"
    assert str(G(0, -3)) == "-3i"
    assert str(G(-2)) == "-2"
    assert str(G(1, Fraction(-2, 3))) == "(1 - 2/3i)"


def test_floats_rejected():
    with pytest.raises(TypeError):
        G.coerce(1.5)


@given(gaussians)
def test_conjugation_is_involution(c):
    assert c.conjugate().conjugate() == c


@given(gaussians)
def test_abs2_nonnegative_and_matches_product(c):
    assert c.abs2() >= 0
    assert c * c.conjugate() == c.abs2()


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
