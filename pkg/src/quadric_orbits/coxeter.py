"""
Type A combinatorics on S_n: descents, parabolic subsets J of [n-1], minimal
coset representatives W^J, and the statistics behind B_{n,J}(q).

Permutations are tuples in one-line notation on values 1..n. A subset J is a
sorted tuple of positions in [n-1]; position i stands for the simple root
eps_i - eps_{i+1}.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .arith import IntPolynomial
from .errors import CutoffExceeded

Permutation = tuple[int, ...]
RootSubset = tuple[int, ...]

PERM_CUTOFF = 9


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def descent_set(w: Permutation) -> frozenset[int]:
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def length(w: Permutation) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def compose(u: Permutation, v: Permutation) -> Permutation:
    """(u o v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def check_subset(n: int, J: Iterable[int]) -> RootSubset:
    J = tuple(sorted(set(J)))
    if any(not 1 <= j <= n - 1 for j in J):
        raise ValueError(f"subset {J} is not inside [1, {n - 1}]")
    return J


def runs(J: Iterable[int]) -> list[list[int]]:
    """Maximal runs of consecutive integers in J."""
    out: list[list[int]] = []
    for j in sorted(J):
        if out and out[-1][-1] == j - 1:
            out[-1].append(j)
        else:
            out.append([j])
    return out


def is_special(J: Iterable[int]) -> bool:
    return all(len(r) == 1 for r in runs(J))


def block_sizes(n: int, J: Iterable[int]) -> list[int]:
    """Sizes of the position blocks glued together by J, left to right."""
    Js = set(J)
    sizes = [1]
    for i in range(1, n):
        if i in Js:
            sizes[-1] += 1
        else:
            sizes.append(1)
    return sizes if n else []


def coset_count(n: int, J: Iterable[int]) -> int:
    """|W^J| = n! / prod n_i!, one factor per maximal run of length n_i - 1."""
    return math.factorial(n) // math.prod(math.factorial(s) for s in block_sizes(n, J))


def iter_min_coset_reps(n: int, J: Iterable[int]) -> Iterator[Permutation]:
    """
    W^J in lexicographic order: permutations with w(i) < w(i+1) for every i in J.

    Each block of positions glued by J holds an increasing run, so an element
    is a sequence of value sets, one per block, chosen left to right.
    """
    sizes = block_sizes(n, check_subset(n, J))

    def fill(k: int, remaining: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if k == len(sizes):
            yield ()
            return
        for chosen in combinations(remaining, sizes[k]):
            rest = tuple(v for v in remaining if v not in chosen)
            for tail in fill(k + 1, rest):
                yield chosen + tail

    yield from fill(0, tuple(range(1, n + 1)))


def min_coset_reps(n: int, J: Iterable[int]) -> list[Permutation]:
    return list(iter_min_coset_reps(n, J))


def longest_parabolic_element(n: int, J: Iterable[int]) -> Permutation:
    """Reverses each block of positions glued by J."""
    check_subset(n, J)
    w: list[int] = []
    start = 1
    for size in block_sizes(n, J):
        w.extend(range(start + size - 1, start - 1, -1))
        start += size
    return tuple(w)


def special_subsets(n: int) -> list[RootSubset]:
    """Subsets of [n-1] without two consecutive members, by size then lexicographic."""
    if n < 1:
        raise ValueError("n must be positive")
    return [J for J in all_subsets(n) if is_special(J)]


def all_subsets(n: int) -> list[RootSubset]:
    """Every subset of [n-1], by size then lexicographic."""
    return [J for k in range(n) for J in combinations(range(1, n), k)]


def stat_a(w: Permutation, J: Iterable[int]) -> int:
    """Descents i with neither i nor i-1 in J."""
    Js = set(J)
    return sum(1 for i in descent_set(w) if i not in Js and i - 1 not in Js)


def stat_b(w: Permutation, J: Iterable[int]) -> int:
    """Descents i with i-1 in J, i not in J and w(i+1) < w(i-1) < w(i)."""
    Js = set(J)
    return sum(
        1 for i in descent_set(w)
        if i - 1 in Js and i not in Js and w[i] < w[i - 2] < w[i - 1]
    )


def simple_root(n: int, i: int) -> list[int]:
    v = [0] * n
    v[i - 1], v[i] = 1, -1
    return v


def act(w: Permutation, v: Sequence[int]) -> list[int]:
    """Linear action on the eps basis with w(eps_j) = eps_{w(j)}."""
    out = [0] * len(v)
    for j, c in enumerate(v):
        out[w[j] - 1] += c
    return out


def lex_positive(v: Sequence[int]) -> bool:
    for c in v:
        if c:
            return c > 0
    raise ValueError("zero vector has no sign")


def root_exponent(w: Permutation, J: Iterable[int]) -> int:
    """
    Number of simple roots a_i, i not in J, with -w(a_i + w_J(a_i)) > 0,
    computed on explicit eps-coordinate vectors.
    """
    n = len(w)
    J = check_subset(n, J)
    if not is_special(J):
        raise ValueError(f"{J} is not special")
    if descent_set(w) & set(J):
        raise ValueError(f"{w} is not a minimal coset representative for {J}")
    wj = longest_parabolic_element(n, J)
    count = 0
    for i in range(1, n):
        if i in J:
            continue
        alpha = simple_root(n, i)
        v = [x + y for x, y in zip(alpha, act(wj, alpha))]
        if lex_positive([-c for c in act(w, v)]):
            count += 1
    return count


def b_poly_reference(n: int, J: Iterable[int]) -> IntPolynomial:
    """B_{n,J}(q) one permutation at a time; slow, used to check ``b_poly``."""
    coeffs = [0] * max(n, 1)
    J = check_subset(n, J)
    for w in iter_min_coset_reps(n, J):
        coeffs[stat_a(w, J) + stat_b(w, J)] += 1
    return IntPolynomial(coeffs)


# vectorised scan ---------------------------------------------------------

def _perm_block(n: int, first: int) -> np.ndarray:
    rest = [v for v in range(1, n + 1) if v != first]
    tail = np.array(list(permutations(rest)), dtype=np.int16).reshape(-1, n - 1)
    head = np.full((tail.shape[0], 1), first, dtype=np.int16)
    return np.hstack([head, tail])


def _scan_block(n: int, first: int, subsets: Sequence[RootSubset]) -> list[list[int]]:
    W = _perm_block(n, first)
    desc = W[:, :-1] > W[:, 1:]  # column i-1 <-> descent at position i
    out = []
    for J in subsets:
        Js = set(J)
        ok = ~desc[:, [j - 1 for j in J]].any(axis=1) if J else np.ones(len(W), bool)
        a_cols = [i - 1 for i in range(1, n) if i not in Js and i - 1 not in Js]
        expo = desc[:, a_cols].sum(axis=1, dtype=np.int64)
        for i in range(2, n):
            if i - 1 in Js and i not in Js:
                expo += (W[:, i] < W[:, i - 2]) & (W[:, i - 2] < W[:, i - 1])
        counts = np.bincount(expo[ok], minlength=n)
        out.append([int(c) for c in counts])
    return out


def descent_scan(
    n: int,
    subsets: Sequence[Iterable[int]],
    jobs: int = 1,
    cutoff: int = PERM_CUTOFF,
) -> dict[RootSubset, IntPolynomial]:
    """
    B_{n,J}(q) for each J in ``subsets`` from one exhaustive pass over S_n.

    The pass is split into blocks by first entry; with ``jobs > 1`` the blocks
    run in worker processes. Block results are added coefficient-wise in a
    fixed order, so the output does not depend on scheduling.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > cutoff:
        raise CutoffExceeded("permutation scan", n, cutoff)
    subsets = [check_subset(n, J) for J in subsets]
    if n == 1:
        return {J: IntPolynomial([1]) for J in subsets}
    firsts = range(1, n + 1)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            blocks = list(pool.map(_scan_block, [n] * n, firsts, [subsets] * n))
    else:
        blocks = [_scan_block(n, f, subsets) for f in firsts]
    result = {}
    for k, J in enumerate(subsets):
        coeffs = [0] * n
        for block in blocks:
            for e, c in enumerate(block[k]):
                coeffs[e] += c
        result[J] = IntPolynomial(coeffs)
    return result


def b_poly(n: int, J: Iterable[int], jobs: int = 1, cutoff: int = PERM_CUTOFF) -> IntPolynomial:
    """B_{n,J}(q) = sum over W^J of q^(a_J(w) + b_J(w))."""
    J = check_subset(n, J)
    return descent_scan(n, [J], jobs=jobs, cutoff=cutoff)[J]


def eulerian_poly(n: int) -> IntPolynomial:
    """
    sum over S_n of q^des(w), from A(n, k) = (k+1) A(n-1, k) + (n-k) A(n-1, k-1).

    Independent of the permutation scan; ``b_poly(n, ())`` must agree with it.
    """
    if n < 1:
        raise ValueError("n must be positive")
    row = [1]
    for m in range(2, n + 1):
        row = [
            (k + 1) * (row[k] if k < len(row) else 0) + (m - k) * (row[k - 1] if k >= 1 else 0)
            for k in range(m)
        ]
    return IntPolynomial(row)
