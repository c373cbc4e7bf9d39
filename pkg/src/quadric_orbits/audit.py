"""Reproduction of the published n = 5 enumerator table, and the unimodality scan."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .arith import IntPolynomial, is_unimodal
from .coxeter import PERM_CUTOFF, all_subsets, coset_count, descent_scan, runs

# B_{5,J}(q) as printed in Table 1 of Can & Joyce, "Ordered Bell numbers,
# Hermite polynomials, skew Young tableaux, and Borel orbits".
PUBLISHED_TABLE_N5: list[tuple[tuple[int, ...], str]] = [
    ((), "q^4+26q^3+66q^2+26q+1"),
    ((1,), "q^3+22q^2+33q+4"),
    ((2,), "2q^3+29q^2+26q+3"),
    ((3,), "3q^3+26q^2+29q+2"),
    ((4,), "4q^3+33q^2+22q+1"),
    ((1, 2), "3q^2+14q+3"),
    ((1, 3), "3q^2+19q+8"),
    ((1, 4), "4q^2+22q+4"),
    ((2, 3), "7q^2+11q+2"),
    ((2, 4), "8q^2+19q+3"),
    ((3, 4), "q^2+13q+1"),
    ((1, 2, 3), "2q+3"),
    ((1, 2, 4), "7q+3"),
    ((1, 3, 4), "6q+4"),
    ((2, 3, 4), "4q+1"),
    ((1, 2, 3, 4), "1"),
]

_TERM = re.compile(r"([+-]?)(\d*)(q(?:\^(\d+))?)?")


def parse_q(text: str, var: str = "q") -> IntPolynomial:
    """Inverse of ``IntPolynomial.format`` for sums like ``3q^2+14q+3``."""
    s = text.replace(" ", "").replace(var, "q")
    if not s:
        raise ValueError("empty polynomial")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse {text!r} at offset {pos}")
        sign = -1 if m.group(1) == "-" else 1
        mag = int(m.group(2)) if m.group(2) else 1
        power = (int(m.group(4)) if m.group(4) else 1) if m.group(3) else 0
        coeffs[power] = coeffs.get(power, 0) + sign * mag
        pos = m.end()
    top = max(coeffs)
    return IntPolynomial([coeffs.get(k, 0) for k in range(top + 1)])


def value_at_one(n: int, J) -> int:
    """n! / prod (m_i + 1)!, m_i the run lengths of J."""
    return math.factorial(n) // math.prod(math.factorial(len(r) + 1) for r in runs(J))


@dataclass
class TableRow:
    J: tuple[int, ...]
    computed: IntPolynomial
    expected_at_one: int
    printed: str | None = None
    note: str = ""

    @property
    def text(self) -> str:
        return self.computed.format("q")

    @property
    def matches(self) -> bool | None:
        return None if self.printed is None else self.text == self.printed


def enumerator_table(n: int, jobs: int = 1, cutoff: int = PERM_CUTOFF) -> list[TableRow]:
    """B_{n,J}(q) for every J in [n-1], ordered by size then lexicographically."""
    subsets = all_subsets(n)
    polys = descent_scan(n, subsets, jobs=jobs, cutoff=cutoff)
    rows = []
    for J in subsets:
        row = TableRow(J, polys[J], value_at_one(n, J))
        if row.computed(1) != row.expected_at_one or row.expected_at_one != coset_count(n, J):
            row.note = f"B(1) = {row.computed(1)} but n!/prod(m_i+1)! = {row.expected_at_one}"
        rows.append(row)
    return rows


def audit_published_table(jobs: int = 1) -> list[TableRow]:
    """
    Compare the n = 5 table against the printed one. A mismatching row is
    diagnosed by evaluating the printed polynomial at q = 1.
    """
    printed = dict(PUBLISHED_TABLE_N5)
    rows = enumerator_table(5, jobs=jobs)
    for row in rows:
        row.printed = printed[row.J]
        if row.matches:
            continue
        at_one = parse_q(row.printed)(1)
        verdict = "violates" if at_one != row.expected_at_one else "satisfies"
        row.note = (
            f"printed {row.printed} gives B(1) = {at_one}, which {verdict} "
            f"B(1) = 5!/prod(m_i+1)! = {row.expected_at_one}; computed {row.text} "
            f"gives B(1) = {row.computed(1)}"
        )
        if verdict == "violates" and row.computed(1) == row.expected_at_one:
            row.note += "; printed row is a typo"
        elif parse_q(row.printed).coeffs == row.computed.coeffs[::-1]:
            row.note += "; printed coefficients are the computed ones in reverse order"
    return rows


@dataclass
class UnimodalityResult:
    n: int
    J: tuple[int, ...]
    poly: IntPolynomial
    unimodal: bool


def unimodality_scan(n: int, jobs: int = 1, cutoff: int = PERM_CUTOFF) -> list[UnimodalityResult]:
    """Test every B_{n,J}(q) for unimodality. Reports; never asserts."""
    return [
        UnimodalityResult(n, row.J, row.computed, is_unimodal(row.computed))
        for row in enumerator_table(n, jobs=jobs, cutoff=cutoff)
    ]
