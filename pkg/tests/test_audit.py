import pytest

from quadric_orbits.arith import IntPolynomial
from quadric_orbits.audit import (
    PUBLISHED_TABLE_N5, audit_published_table, enumerator_table, parse_q, unimodality_scan,
    value_at_one,
)


@pytest.mark.parametrize("text, coeffs", [
    ("q^4+26q^3+66q^2+26q+1", [1, 26, 66, 26, 1]),
    ("2q+3", [3, 2]),
    ("1", [1]),
    ("q^2+13q+1", [1, 13, 1]),
    ("-q^3+2", [2, 0, 0, -1]),
])
def test_parse_q(text, coeffs):
    assert parse_q(text) == IntPolynomial(coeffs)
    assert parse_q(IntPolynomial(coeffs).format()) == IntPolynomial(coeffs)


def test_parse_q_rejects_garbage():
    with pytest.raises(ValueError):
        parse_q("q^2+*3")


def test_published_table_is_complete():
    assert len(PUBLISHED_TABLE_N5) == 16
    assert len({J for J, _ in PUBLISHED_TABLE_N5}) == 16


def test_table_order_size_then_lex():
    rows = enumerator_table(4)
    assert [r.J for r in rows] == [(), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]
    assert all(r.note == "" for r in rows)


def test_value_at_one():
    assert value_at_one(5, (3, 4)) == 20
    assert value_at_one(5, (1, 2, 3, 4)) == 1
    assert value_at_one(5, (1, 3)) == 30


def test_audit_flags_row_34():
    rows = {r.J: r for r in audit_published_table()}
    r = rows[(3, 4)]
    assert r.text == "6q^2+13q+1"
    assert r.computed(1) == 20
    assert not r.matches
    assert "B(1) = 15" in r.note and "violates" in r.note and "20" in r.note


def test_audit_row_123_reversed():
    r = {r.J: r for r in audit_published_table()}[(1, 2, 3)]
    assert r.text == "3q+2" and r.printed == "2q+3"
    assert "reverse order" in r.note


def test_unimodality_scan_small():
    res = unimodality_scan(2)
    assert [(r.J, r.poly.coeffs, r.unimodal) for r in res] == [((), (1, 1), True), ((1,), (1,), True)]
    assert all(r.unimodal for r in unimodality_scan(5))
    assert len(unimodality_scan(5)) == 16
