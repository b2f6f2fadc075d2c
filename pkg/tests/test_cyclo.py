"""Tests for cyclotomic field arithmetic."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st
import pytest

from tgha.cyclo import (
    ONE,
    ZERO,
    Cyclotomic,
    cyclotomic_coefficients,
    euler_phi,
    root_of_unity,
    to_literal,
)
from tgha.exceptions import ConductorMismatch, DivisionByZero, NotASubfield

CONDUCTORS = [3, 4, 5, 8, 12]

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def cyclotomics(draw, conductor=None):
    """Draw an element of Q(zeta_N) from a random polynomial in zeta_N."""
    if conductor is None:
        conductor = draw(st.sampled_from(CONDUCTORS))
    coeffs = draw(st.lists(rationals, min_size=1, max_size=conductor))
    return Cyclotomic.from_poly(conductor, coeffs)


@st.composite
def triples(draw):
    """Draw three elements of one field."""
    conductor = draw(st.sampled_from(CONDUCTORS))
    return tuple(draw(cyclotomics(conductor)) for _ in range(3))


def test_basic_identities():
    """Additive identity, i^2 = -1 and 1 + zeta_3 + zeta_3^2 = 0."""
    x = root_of_unity(5, 2) + Fraction(1, 3)
    assert ZERO + x == x
    assert root_of_unity(4, 1) * root_of_unity(4, 1) == -1
    assert root_of_unity(3, 1) + root_of_unity(3, 2) == -1


def test_root_of_unity_values():
    assert root_of_unity(1, 0) == 1
    assert root_of_unity(3, 3) == 1
    assert root_of_unity(6, -1) == root_of_unity(6, 5)
    sqrt2 = root_of_unity(8, 1) + root_of_unity(8, -1)
    assert sqrt2 * sqrt2 == 2
    assert not sqrt2.is_rational


@pytest.mark.parametrize(("n", "k", "m"), [(3, 1, 2), (8, 3, 7), (12, 5, -4), (5, 0, 4)])
def test_root_of_unity_exponents_add(n, k, m):
    assert root_of_unity(n, k) * root_of_unity(n, m) == root_of_unity(n, k + m)


def test_conjugate():
    assert Cyclotomic.rational(Fraction(-2, 7), 5).conjugate() == Fraction(-2, 7)
    assert root_of_unity(4, 1).conjugate() == -root_of_unity(4, 1)
    assert root_of_unity(3, 1).conjugate() == root_of_unity(3, 2)


def test_promote():
    assert ONE.promote(12) == 1
    assert root_of_unity(3, 1).promote(6) == root_of_unity(6, 2)
    assert root_of_unity(3, 1).promote(6).conductor == 6
    minus_one = Cyclotomic.rational(-1).promote(8)
    assert minus_one * minus_one == 1


def test_equality_and_hash_across_conductors():
    assert root_of_unity(3, 1) == root_of_unity(6, 2)
    assert len({root_of_unity(3, 1), root_of_unity(6, 2), root_of_unity(12, 4)}) == 1
    assert hash(Cyclotomic.rational(Fraction(1, 2), 8)) == hash(Fraction(1, 2))


def test_errors():
    with pytest.raises(DivisionByZero):
        Cyclotomic.rational(0, 3).inverse()
    with pytest.raises(ZeroDivisionError):
        root_of_unity(3, 1) / 0
    with pytest.raises(ConductorMismatch):
        root_of_unity(3, 1) + root_of_unity(4, 1)
    with pytest.raises(NotASubfield):
        root_of_unity(3, 1).promote(4)


def test_cyclotomic_polynomial_and_totient():
    assert cyclotomic_coefficients(3) == (1, 1, 1)
    assert cyclotomic_coefficients(4) == (1, 0, 1)
    assert cyclotomic_coefficients(8) == (1, 0, 0, 0, 1)
    assert [euler_phi(n) for n in (1, 2, 3, 4, 5, 8, 12)] == [1, 1, 2, 2, 4, 4, 4]


def test_signed_root():
    assert root_of_unity(5, 3).signed_root() == (1, 3)
    assert (-root_of_unity(8, 3)).signed_root() == (-1, 3)
    assert Cyclotomic.rational(-1, 5).signed_root() == (-1, 0)
    assert (root_of_unity(8, 1) + 1).signed_root() is None


def test_to_literal():
    assert to_literal(Cyclotomic.rational(Fraction(1, 2))) == "1/2"
    assert to_literal(-root_of_unity(3, 1)) == "-z^1"
    assert to_literal(root_of_unity(3, 1), 6) == "z^2"
    assert to_literal(Cyclotomic.from_poly(5, [1, 0, 2])) == "1 + 2*z^2"


def test_galois_fixes_rationals_and_permutes_roots():
    x = Cyclotomic.rational(Fraction(3, 4), 7)
    assert x.galois(3) == x
    assert root_of_unity(7, 2).galois(3) == root_of_unity(7, 6)
    with pytest.raises(ValueError):
        root_of_unity(6, 1).galois(2)


@given(triples())
@settings(max_examples=40, derandomize=True, deadline=None)
def test_field_axioms(values):
    x, y, z = values
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x - x == 0


@given(cyclotomics())
@settings(max_examples=40, derandomize=True, deadline=None)
def test_inverse(x):
    if not x:
        with pytest.raises(DivisionByZero):
            x.inverse()
        return
    assert x * x.inverse() == 1
    assert (x / x) == 1


@given(cyclotomics(), cyclotomics())
@settings(max_examples=30, derandomize=True, deadline=None)
def test_conjugate_is_an_involutive_automorphism(x, y):
    if x.conductor != y.conductor:
        return
    assert x.conjugate().conjugate() == x
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert (x + y).conjugate() == x.conjugate() + y.conjugate()


@given(st.sampled_from(CONDUCTORS), st.integers(min_value=-20, max_value=20))
@settings(max_examples=30, derandomize=True, deadline=None)
def test_root_of_unity_times_conjugate_is_one(n, k):
    zeta = root_of_unity(n, k)
    assert zeta * zeta.conjugate() == 1
    assert zeta.is_root_of_unity()


@given(cyclotomics())
@settings(max_examples=30, derandomize=True, deadline=None)
def test_reduction_is_idempotent(x):
    assert Cyclotomic.from_poly(x.conductor, list(x.coeffs)).coeffs == x.coeffs


@given(cyclotomics(3), cyclotomics(3))
@settings(max_examples=20, derandomize=True, deadline=None)
def test_arithmetic_commutes_with_promotion(x, y):
    assert (x * y).promote(12) == x.promote(12) * y.promote(12)
    assert (x + y).promote(12) == x.promote(12) + y.promote(12)
