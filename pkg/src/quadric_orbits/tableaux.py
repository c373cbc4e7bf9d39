"""
Partitions, stacked skew shapes and standard Young tableau counts.

A skew shape is a tuple of nonempty partitions ``(lam1, lam2, ...)``; each
factor is drawn below and to the left of the previous one so that no two
factors share a row or a column.
"""

from __future__ import annotations

from functools import cache
from itertools import permutations
from typing import Iterator

from .arith import multinomial
from .errors import CutoffExceeded

Partition = tuple[int, ...]
SkewShape = tuple[Partition, ...]

BOX_CUTOFF = 10
INVOLUTION_CUTOFF = 9


def is_partition(parts) -> bool:
    return all(p > 0 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def conjugate(lam: Partition) -> Partition:
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0])) if lam else ()


def _partitions(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, lexicographically descending: (4,), (3, 1), (2, 2), ..."""
    if n < 0:
        raise ValueError(f"cannot partition {n}")
    return tuple(_partitions(n, n))


@cache
def num_syt(lam: Partition) -> int:
    """f^lam, by removing each corner box in turn."""
    if not lam:
        return 1
    total = 0
    for i, part in enumerate(lam):
        nxt = lam[i + 1] if i + 1 < len(lam) else 0
        if part > nxt:
            child = list(lam)
            child[i] -= 1
            if child[i] == 0:
                child.pop()
            total += num_syt(tuple(child))
    return total


def weight(shape: SkewShape) -> int:
    return sum(sum(lam) for lam in shape)


def _check_shape(shape: SkewShape) -> None:
    if not shape:
        raise ValueError("a skew shape needs at least one factor")
    for lam in shape:
        if not lam or not is_partition(lam):
            raise ValueError(f"bad factor {lam!r} in skew shape")


def num_skew_syt(shape: SkewShape) -> int:
    """Multinomial in the factor sizes times the product of the factor counts."""
    _check_shape(shape)
    sizes = [sum(lam) for lam in shape]
    result = multinomial(sum(sizes), sizes)
    for lam in shape:
        result *= num_syt(lam)
    return result


def cell_grid(shape: SkewShape) -> list[tuple[int, int]]:
    """
    (row, column) cells of the stacked diagram, rows growing downward.

    Each new factor has the rightmost box of its first row one row below and
    one column left of the bottom box in the first column of the factor above.
    """
    _check_shape(shape)
    cells = []
    top, left = 0, 0
    for k, lam in enumerate(shape):
        if k > 0:
            top, left = bottom + 1, left - lam[0]
        for r, part in enumerate(lam):
            cells.extend((top + r, left + c) for c in range(part))
        bottom = top + len(lam) - 1
    return cells


def enumerate_syt(shape: SkewShape, cutoff: int = BOX_CUTOFF) -> int:
    """Count fillings of ``cell_grid(shape)`` by placing 1, 2, ..., n one at a time."""
    cells = cell_grid(shape)
    n = len(cells)
    if n > cutoff:
        raise CutoffExceeded("enumerate_syt", n, cutoff)
    index = {cell: i for i, cell in enumerate(cells)}
    # bitmask of cells that must already hold smaller numbers
    needs = []
    for r, c in cells:
        mask = 0
        for nb in ((r, c - 1), (r - 1, c)):
            if nb in index:
                mask |= 1 << index[nb]
        needs.append(mask)
    full = (1 << n) - 1

    @cache
    def fillings(filled: int) -> int:
        if filled == full:
            return 1
        total = 0
        for i in range(n):
            bit = 1 << i
            if not filled & bit and needs[i] & filled == needs[i]:
                total += fillings(filled | bit)
        return total

    return fillings(0)


def skew_shapes_of(n: int) -> list[SkewShape]:
    """Every sequence of nonempty partitions of total weight n, lexicographically descending."""
    if n < 1:
        raise ValueError("skew shapes need n >= 1")

    def build(m: int) -> Iterator[SkewShape]:
        if m == 0:
            yield ()
            return
        for k in range(1, m + 1):
            for lam in partitions_of(k):
                for rest in build(m - k):
                    yield (lam,) + rest

    return sorted(build(n), reverse=True)


@cache
def involution_count(n: int) -> int:
    """I(n) = I(n-1) + (n-1) I(n-2)."""
    if n < 0:
        raise ValueError(f"negative n {n}")
    prev, cur = 1, 1
    for m in range(2, n + 1):
        prev, cur = cur, cur + (m - 1) * prev
    return cur


def enumerate_involutions(n: int, cutoff: int = INVOLUTION_CUTOFF) -> list[tuple[int, ...]]:
    if n > cutoff:
        raise CutoffExceeded("enumerate_involutions", n, cutoff)
    return [
        w for w in permutations(range(1, n + 1))
        if all(w[w[i] - 1] == i + 1 for i in range(n))
    ]
