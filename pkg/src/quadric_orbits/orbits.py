"""
Borel orbit counts b(X_n) on complete quadrics, by three independent routes,
plus the ordered Bell / Fibonacci comparison quantities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterator

import numpy as np

from .arith import multinomial
from .coxeter import PERM_CUTOFF, block_sizes, descent_scan, special_subsets
from .errors import CutoffExceeded, InvariantFailure
from .hermite import b_via_hermite
from .tableaux import involution_count, num_skew_syt, num_syt, partitions_of, skew_shapes_of

Composition = tuple[int, ...]

__all__ = [
    "compositions_of", "composition_to_subset", "b_via_compositions",
    "b_via_compositions_explicit", "b_via_skew", "b_via_skew_explicit",
    "b_via_hermite", "b_via_descents", "descent_contributions", "b_via_psi",
    "ordered_bell", "fibonacci", "wonderful_sum", "b_equivariant", "psi",
    "BoundsReport", "check_bounds", "asymptotic_ratios", "METHODS", "borel_orbits",
]


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"orbit counts are defined for n >= 1, got {n}")


def _compositions(n: int) -> Iterator[Composition]:
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def compositions_of(n: int) -> list[Composition]:
    """All 2^(n-1) compositions of n, lexicographically descending."""
    if n < 1:
        raise ValueError("compositions need n >= 1")
    return list(_compositions(n))


def composition_to_subset(gamma: Composition) -> tuple[int, ...]:
    """Complement in [n-1] of the partial sums gamma_1, gamma_1 + gamma_2, ..."""
    n = sum(gamma)
    cuts, total = set(), 0
    for part in gamma[:-1]:
        total += part
        cuts.add(total)
    return tuple(i for i in range(1, n) if i not in cuts)


def _first_part_sum(n: int, weight) -> int:
    # sum over compositions of multinomial(n; parts) * prod weight(part),
    # grouped by the first part
    table = [1] + [0] * n
    for m in range(1, n + 1):
        table[m] = sum(math.comb(m, k) * weight(k) * table[m - k] for k in range(1, m + 1))
    return table[n]


@cache
def b_via_compositions(n: int) -> int:
    """sum over compositions (i_1..i_k) of n of multinomial(n; i) * I(i_1) ... I(i_k)."""
    _check_n(n)
    return _first_part_sum(n, involution_count)


def b_via_compositions_explicit(n: int) -> int:
    """Same sum, term by term over ``compositions_of(n)``; exponential in n."""
    _check_n(n)
    return sum(
        multinomial(n, gamma) * math.prod(involution_count(p) for p in gamma)
        for gamma in compositions_of(n)
    )


@cache
def _syt_total(k: int) -> int:
    return sum(num_syt(lam) for lam in partitions_of(k))


@cache
def b_via_skew(n: int) -> int:
    """
    Number of standard tableaux on all stacked skew shapes with n boxes.

    Shapes are grouped by the size of their first factor so the count stays
    polynomial; ``b_via_skew_explicit`` walks the shapes one by one.
    """
    _check_n(n)
    return _first_part_sum(n, _syt_total)


def b_via_skew_explicit(n: int) -> int:
    _check_n(n)
    return sum(num_skew_syt(shape) for shape in skew_shapes_of(n))


def descent_contributions(n: int, jobs: int = 1, cutoff: int = PERM_CUTOFF) -> dict[tuple[int, ...], int]:
    """For each special J, the sum over W^J of 2^(a_J(w) + b_J(w))."""
    _check_n(n)
    if n > cutoff:
        raise CutoffExceeded("b_via_descents", n, cutoff)
    polys = descent_scan(n, special_subsets(n), jobs=jobs, cutoff=cutoff)
    return {J: p(2) for J, p in polys.items()}


def b_via_descents(n: int, jobs: int = 1, cutoff: int = PERM_CUTOFF) -> int:
    return sum(descent_contributions(n, jobs=jobs, cutoff=cutoff).values())


def psi(n: int) -> Fraction:
    """I(n) / n!, the share of involutions in S_n."""
    _check_n(n)
    return Fraction(involution_count(n), math.factorial(n))


def b_via_psi(n: int) -> int:
    """n! times the sum over compositions of prod psi(gamma_i), in exact rationals."""
    total = math.factorial(n) * sum(
        (math.prod((psi(p) for p in gamma), start=Fraction(1)) for gamma in compositions_of(n)),
        start=Fraction(0),
    )
    if total.denominator != 1:
        raise InvariantFailure(f"n={n}: non-integral value {total}")
    return total.numerator


@cache
def ordered_bell(n: int) -> int:
    """b_n = sum_{k=1}^{n} C(n, k) b_{n-k}, b_0 = 1."""
    if n < 0:
        raise ValueError(f"negative n {n}")
    return 1 if n == 0 else sum(math.comb(n, k) * ordered_bell(n - k) for k in range(1, n + 1))


def fibonacci(n: int) -> int:
    """F_1 = F_2 = 1."""
    if n < 1:
        raise ValueError("Fibonacci numbers are indexed from 1")
    a, b = 0, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return b


def wonderful_sum(n: int) -> int:
    """sum over I subset of [n-1] of (n!)^2 / n_I, n_I the product of block factorials."""
    _check_n(n)
    sq = math.factorial(n) ** 2
    if n > 20:  # n_I no longer fits in int64
        total = 0
        for mask in range(1 << (n - 1)):
            I = [i + 1 for i in range(n - 1) if mask >> i & 1]
            total += sq // math.prod(math.factorial(s) for s in block_sizes(n, I))
        return total
    # all subsets at once: bit i-1 of the mask says whether i is in I
    masks = np.arange(1 << (n - 1), dtype=np.int64)
    n_I = np.ones_like(masks)
    block = np.ones_like(masks)
    for i in range(1, n):
        joined = (masks >> (i - 1)) & 1 == 1
        block = np.where(joined, block + 1, 1)
        # a block of size m contributes m! as m grows: multiply by m each step
        n_I *= np.where(joined, block, 1)
    values, counts = np.unique(n_I, return_counts=True)
    return sum(int(c) * (sq // int(v)) for v, c in zip(values, counts))


def b_equivariant(n: int) -> int:
    """n! b_n, checked against the subset sum."""
    _check_n(n)
    value = math.factorial(n) * ordered_bell(n)
    other = wonderful_sum(n)
    if value != other:
        raise InvariantFailure(f"n={n}: n! b_n = {value} but subset sum = {other}")
    return value


@dataclass(frozen=True)
class BoundsReport:
    n: int
    lower: int
    value: int
    upper: int
    equivariant: int
    strict_lower_ok: bool
    strict_upper_ok: bool
    equivariant_ok: bool
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.strict_lower_ok and self.strict_upper_ok and self.equivariant_ok


def check_bounds(n: int) -> BoundsReport:
    """
    F_n n! < b(X_n) < 2^(n-1) n! < n! b_n. Strict from n = 3; for n <= 2 only
    the weak inequalities are checked.
    """
    _check_n(n)
    value = b_via_compositions(n)
    other = b_via_hermite(n)
    if value != other:
        raise InvariantFailure(f"n={n}: compositions {value} != hermite {other}")
    fact = math.factorial(n)
    lower, upper = fibonacci(n) * fact, 2 ** (n - 1) * fact
    equiv = b_equivariant(n)
    if n >= 3:
        flags = (lower < value, value < upper, upper < equiv)
        note = ""
    else:
        flags = (lower <= value, value <= upper, upper <= equiv)
        attained = [name for name, a, b in (("lower", lower, value), ("upper", value, upper),
                                            ("equivariant", upper, equiv)) if a == b]
        note = "n <= 2: weak inequalities; equal at " + (", ".join(attained) or "none")
    return BoundsReport(n, lower, value, upper, equiv, *flags, note=note)


def asymptotic_ratios(n: int) -> tuple[float, float]:
    """
    (b_n / (n! / (2 (ln 2)^(n+1))), F_n / (phi^n / sqrt 5)); both tend to 1.
    """
    _check_n(n)
    ln2 = math.log(2)
    bell_ratio = float(Fraction(ordered_bell(n), math.factorial(n))) * 2 * ln2 ** (n + 1)
    phi = (1 + math.sqrt(5)) / 2
    fib_ratio = fibonacci(n) * math.sqrt(5) / phi ** n
    return bell_ratio, fib_ratio


METHODS = {
    "compositions": b_via_compositions,
    "skew": b_via_skew,
    "hermite": b_via_hermite,
    "descents": b_via_descents,
}


def borel_orbits(n: int, method: str = "compositions") -> int:
    try:
        fn = METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(METHODS)}") from None
    return fn(n)
