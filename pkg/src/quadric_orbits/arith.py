"""Exact integer arithmetic: factorials, multinomials and dense integer polynomials."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "factorial", "multinomial", "IntPolynomial", "poly_add", "poly_mul",
    "poly_scale", "poly_eval", "is_unimodal", "Fraction",
]


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / (parts[0]! parts[1]! ...); the parts must sum to n."""
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {list(parts)}")
    if sum(parts) != n:
        raise ValueError(f"parts {list(parts)} do not sum to {n}")
    # product of binomials avoids the full n! division
    result, total = 1, 0
    for p in parts:
        total += p
        result *= math.comb(total, p)
    return result


class IntPolynomial:
    """
    Dense univariate polynomial with integer coefficients.

    ``coeffs[i]`` is the coefficient of x**i. Trailing zeros are stripped on
    construction, so the zero polynomial has an empty coefficient tuple and
    ``degree`` None.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * k + [coeff])

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            other = IntPolynomial([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial([-x for x in self.coeffs])

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial([other * x for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x0: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def shift(self, k: int = 1) -> IntPolynomial:
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return IntPolynomial([0] * k + list(self.coeffs))

    def low_degree(self) -> int | None:
        """Lowest power with a nonzero coefficient."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def format(self, var: str = "q") -> str:
        """Render with descending powers, e.g. ``3q^2+14q+3``."""
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            terms.append((sign, body))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += sign + body
        return out


def poly_add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p + q


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p * q


def poly_scale(p: IntPolynomial, c: int) -> IntPolynomial:
    return p * c


def poly_eval(p: IntPolynomial, x0: int) -> int:
    return p(x0)


def is_unimodal(p: IntPolynomial | Sequence[int]) -> bool:
    """True if the coefficients weakly rise and then weakly fall."""
    coeffs = p.coeffs if isinstance(p, IntPolynomial) else tuple(p)
    i, n = 0, len(coeffs)
    while i + 1 < n and coeffs[i] <= coeffs[i + 1]:
        i += 1
    while i + 1 < n and coeffs[i] >= coeffs[i + 1]:
        i += 1
    return i >= n - 1
