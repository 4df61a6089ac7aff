import pytest
from sympy import ZZ, Poly

from homology_errors import IntegrityError
from int_polynomial import IntPolynomial, q_dimension

LAMBDA = IntPolynomial.from_ascending([0, 1])


def test_representation_is_trimmed():
    assert IntPolynomial((0, 0, 3, 0), 0) == IntPolynomial((3,), 2)
    assert IntPolynomial((0, 0), 5).is_zero()


def test_descending_and_ascending():
    p = IntPolynomial.from_descending([1, -3, 2, 0])
    assert p.ascending() == [0, 2, -3, 1]
    assert p.descending() == [1, -3, 2, 0]
    assert p.degree == 3 and p.lowest_degree == 1


def test_arithmetic():
    p = LAMBDA - 1
    assert p * p == IntPolynomial.from_ascending([1, -2, 1])
    assert p ** 3 == IntPolynomial.from_ascending([-1, 3, -3, 1])
    assert 2 * p + 2 == 2 * LAMBDA
    assert (p - p).is_zero()


def test_laurent_shift_and_division():
    q_plus_inverse = IntPolynomial((1, 0, 1), -1, "q")
    square = q_plus_inverse * q_plus_inverse
    assert square.terms() == {-2: 1, 0: 2, 2: 1}
    assert square.divide_exact(q_plus_inverse) == q_plus_inverse
    assert square.shift(3).low == 1


def test_inexact_division_raises():
    with pytest.raises(IntegrityError):
        IntPolynomial.from_ascending([1, 1, 1], "q").divide_exact(IntPolynomial.from_ascending([1, 1], "q"))
    with pytest.raises(ZeroDivisionError):
        LAMBDA.divide_exact(IntPolynomial())


def test_variables_must_agree():
    with pytest.raises(ValueError):
        LAMBDA + IntPolynomial.from_ascending([0, 1], "q")


def test_root_multiplicity():
    p = LAMBDA * (LAMBDA - 1) ** 3 * (LAMBDA - 2)
    assert p.root_multiplicity(1) == 3
    assert p.root_multiplicity(0) == 1
    assert p.root_multiplicity(5) == 0


def test_evaluate_at_number_and_polynomial():
    p = LAMBDA * (LAMBDA - 1)
    assert p.evaluate(3) == 6
    assert p.evaluate(q_dimension(2)) == IntPolynomial.from_ascending([0, 1, 1], "q")


def test_substitute_shift():
    # λ^2 with λ = q + 1 is q^2 + 2q + 1
    assert (LAMBDA ** 2).substitute_shift(1, "q") == IntPolynomial.from_ascending([1, 2, 1], "q")


def test_json_and_str():
    p = IntPolynomial((3, 0, -1), -1, "q")
    assert IntPolynomial.from_json(p.to_json()) == p
    assert str(p) == "-q + 3*q^-1"
    assert str(IntPolynomial.from_descending([1, -10, 41, -84, 84, -32, 0])) == \
        "lambda^6 - 10*lambda^5 + 41*lambda^4 - 84*lambda^3 + 84*lambda^2 - 32*lambda"


def test_backed_by_sympy_poly():
    p = IntPolynomial.from_descending([2, 0, -1], "q")
    assert isinstance(p.poly, Poly) and p.poly.domain == ZZ
    assert p.full_poly().all_coeffs() == [2, 0, -1]
    assert IntPolynomial.from_poly(p.poly, -2) == IntPolynomial.from_terms({0: 2, -2: -1}, "q")
