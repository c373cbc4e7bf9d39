import pytest

from oracles import hermite_weak_sum, involutions_scan
from quadric_orbits.arith import IntPolynomial
from quadric_orbits.errors import InvariantFailure
from quadric_orbits.hermite import (
    b_hermite_double_sum, b_via_hermite, coeff_a, hermite_eval, hermite_poly, hermite_table,
    hermite_via_convolution,
)


@pytest.mark.parametrize("k, coeffs", [
    (0, [1]),
    (1, [0, 1]),
    (2, [0, 1, 1]),
    (3, [0, 0, 3, 1]),
    (4, [0, 0, 3, 6, 1]),
    (5, [0, 0, 0, 15, 10, 1]),
])
def test_hermite_rows(k, coeffs):
    assert hermite_poly(k) == IntPolynomial(coeffs)


def test_table_invariants():
    rows = hermite_table(30)
    y = IntPolynomial([0, 1])
    for k, h in enumerate(rows):
        assert h.degree == k
        if k >= 1:
            assert h.low_degree() == (k + 1) // 2
        if k >= 2:
            assert h == y * (rows[k - 1] + rows[k - 2] * (k - 1))


def test_eval_examples():
    assert hermite_eval(3, 3) == 54
    assert hermite_eval(3, 2) == 20
    assert all(hermite_eval(n, 0) == 0 for n in range(1, 10))


def test_convolution_examples():
    assert hermite_via_convolution(3, 2) == 20
    assert hermite_via_convolution(0, 4) == 1
    for n in range(8):
        assert hermite_via_convolution(n, 1) == involutions_scan(n)
    with pytest.raises(ValueError):
        hermite_via_convolution(3, 0)


@pytest.mark.parametrize("n, k", [(n, k) for n in range(6) for k in range(1, 4)])
def test_convolution_matches_literal_weak_sum(n, k):
    assert hermite_via_convolution(n, k) == hermite_weak_sum(n, k)


def test_eval_matches_convolution_grid():
    for n in range(13):
        for k in range(1, 13):
            assert hermite_eval(n, k) == hermite_via_convolution(n, k)


@pytest.mark.parametrize("n, r, expected", [(3, 1, 2), (3, 2, -2), (3, 3, 1), (7, 7, 1)])
def test_coeff_a(n, r, expected):
    assert coeff_a(n, r) == expected


def test_coeff_a_range():
    with pytest.raises(ValueError):
        coeff_a(3, 0)
    with pytest.raises(ValueError):
        coeff_a(3, 4)


@pytest.mark.parametrize("n, expected", [(1, 1), (3, 22), (4, 162)])
def test_b_via_hermite(n, expected):
    assert b_via_hermite(n) == expected


def test_double_sum_matches_collected():
    for n in range(1, 13):
        assert b_hermite_double_sum(n) == b_via_hermite(n)


def test_mismatch_raises(monkeypatch):
    import quadric_orbits.hermite as h
    monkeypatch.setattr(h, "b_hermite_double_sum", lambda n: -1)
    with pytest.raises(InvariantFailure):
        h.b_via_hermite(3)
