"""
Modified Hermite polynomials H_k(y), the coefficients of x^k/k! in
exp(y (x + x^2/2)), and the orbit count expressed through their values.
"""

from __future__ import annotations

import math
import threading
from functools import cache

from .arith import IntPolynomial
from .errors import InvariantFailure
from .tableaux import involution_count

_table: list[IntPolynomial] = [IntPolynomial([1]), IntPolynomial([0, 1])]
_table_lock = threading.Lock()


def hermite_table(k: int) -> list[IntPolynomial]:
    """Rows H_0 .. H_k, grown on demand with H_{j+1} = y (H_j + j H_{j-1})."""
    if k < 0:
        raise ValueError(f"negative index {k}")
    with _table_lock:
        while len(_table) <= k:
            j = len(_table) - 1
            _table.append((_table[j] + _table[j - 1] * j).shift(1))
        return _table[: k + 1]


def hermite_poly(k: int) -> IntPolynomial:
    return hermite_table(k)[k]


def hermite_eval(n: int, y0: int) -> int:
    return hermite_poly(n)(y0)


@cache
def hermite_via_convolution(n: int, k: int) -> int:
    """
    Coefficient of x^n/n! in Q(x)^k, Q the involution EGF: the sum over weak
    compositions (j_1, ..., j_k) of n of multinomial(n; j) * prod I(j_i).

    The sum is split on the value of j_1, which keeps it polynomial in n and k.
    """
    if k < 0 or n < 0:
        raise ValueError(f"bad arguments n={n}, k={k}")
    if k == 0:
        if n > 0:
            raise ValueError("k = 0 only admits n = 0")
        return 1
    if k == 1:
        return involution_count(n)
    return sum(
        math.comb(n, j) * involution_count(j) * hermite_via_convolution(n - j, k - 1)
        for j in range(n + 1)
    )


def coeff_a(n: int, r: int) -> int:
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    return sum((-1) ** i * math.comb(r + i, r) for i in range(n - r + 1))


def b_hermite_double_sum(n: int) -> int:
    """sum_{k=1}^{n} sum_{j=1}^{k} (-1)^(k-j) C(k, j) H_n(j), before collecting terms."""
    values = [hermite_eval(n, j) for j in range(n + 1)]
    return sum(
        (-1) ** (k - j) * math.comb(k, j) * values[j]
        for k in range(1, n + 1)
        for j in range(1, k + 1)
    )


def b_via_hermite(n: int) -> int:
    """b(X_n) = sum_r a_{n,r} H_n(r); cross-checked against the uncollected double sum."""
    if n < 1:
        raise ValueError("orbit counts start at n = 1")
    h = hermite_poly(n)
    collected = sum(coeff_a(n, r) * h(r) for r in range(1, n + 1))
    double = b_hermite_double_sum(n)
    if collected != double:
        raise InvariantFailure(f"n={n}: collected sum {collected} != double sum {double}")
    return collected
