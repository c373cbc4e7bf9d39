import pytest
from hypothesis import given, strategies as st

from quadric_orbits.arith import (
    IntPolynomial, factorial, is_unimodal, multinomial, poly_add, poly_eval, poly_mul, poly_scale,
)
from quadric_orbits.hermite import hermite_poly


@pytest.mark.parametrize("n, expected", [(0, 1), (5, 120), (20, 2432902008176640000)])
def test_factorial(n, expected):
    assert factorial(n) == expected


@pytest.mark.parametrize("n, parts, expected", [
    (9, [5, 4], 126),
    (7, [7], 1),
    (4, [2, 1, 1], 12),
])
def test_multinomial(n, parts, expected):
    assert multinomial(n, parts) == expected


def test_multinomial_rejects_bad_parts():
    with pytest.raises(ValueError):
        multinomial(5, [2, 2])


def test_poly_mul_examples():
    assert poly_mul(IntPolynomial([1, 1]), IntPolynomial([0, 1])) == IntPolynomial([0, 1, 1])
    h1 = hermite_poly(1)
    assert h1 * h1 == IntPolynomial([0, 0, 1])
    assert poly_mul(IntPolynomial(), IntPolynomial([3, 4])).is_zero()


def test_canonical_form():
    p = IntPolynomial([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert IntPolynomial([0, 0]).degree is None
    assert (IntPolynomial([1, 1]) - IntPolynomial([1, 1])).coeffs == ()


@pytest.mark.parametrize("p, x, expected", [
    (IntPolynomial([0, 0, 3, 1]), 3, 54),
    (IntPolynomial([7, 1, 2]), 0, 7),
    (IntPolynomial([0, 1, 1]), 2, 6),
])
def test_poly_eval(p, x, expected):
    assert poly_eval(p, x) == expected


@pytest.mark.parametrize("coeffs, expected", [
    ([3, 14, 3], True),
    ([1, 26, 66, 26, 1], True),
    ([2, 1, 2], False),
    ([], True),
    ([5], True),
    ([1, 1, 2, 2, 1], True),
    ([1, 2, 1, 2], False),
])
def test_is_unimodal(coeffs, expected):
    assert is_unimodal(IntPolynomial(coeffs)) is expected


def test_format():
    assert IntPolynomial([1, 13, 6]).format() == "6q^2+13q+1"
    assert IntPolynomial([1]).format() == "1"
    assert IntPolynomial([3, 2]).format() == "2q+3"
    assert IntPolynomial([0, -1, 0, 2]).format("y") == "2y^3-y"


small_polys = st.lists(st.integers(-20, 20), max_size=6).map(IntPolynomial)


@given(small_polys, small_polys, st.integers(-5, 5))
def test_eval_is_multiplicative(p, q, x):
    assert poly_eval(poly_mul(p, q), x) == poly_eval(p, x) * poly_eval(q, x)


@given(small_polys, small_polys, st.integers(-5, 5), st.integers(-4, 4))
def test_eval_is_linear(p, q, x, c):
    assert poly_eval(poly_add(p, poly_scale(q, c)), x) == p(x) + c * q(x)


@given(st.lists(st.integers(0, 6), min_size=1, max_size=5), st.randoms())
def test_multinomial_symmetric(parts, rnd):
    shuffled = parts[:]
    rnd.shuffle(shuffled)
    assert multinomial(sum(parts), parts) == multinomial(sum(parts), shuffled)


@pytest.mark.parametrize("n", range(0, 12))
def test_factorial_is_all_ones_multinomial(n):
    assert factorial(n) == multinomial(n, [1] * n)
