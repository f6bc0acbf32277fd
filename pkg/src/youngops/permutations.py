"""Permutations of {1, ..., n} in one-line notation.

A permutation is a tuple p of length n with p[k-1] = p(k); entries are
1-based. Composition follows operator order: (a * b)(k) = a(b(k)), i.e.
b acts first. This matches how permutation operators multiply when each
permutes the factors of a tensor product.
"""
from __future__ import annotations

from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_perm(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def check_perm(p: Sequence[int]) -> Perm:
    """Validate and normalize to a tuple; raises ValueError if invalid."""
    t = tuple(p)
    if not is_perm(t):
        raise ValueError(f"not a permutation of 1..{len(t)}: {t}")
    return t


def compose(a: Perm, b: Perm) -> Perm:
    """a after b: (a*b)(k) = a(b(k))."""
    return tuple(a[x - 1] for x in b)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for k, x in enumerate(p, start=1):
        inv[x - 1] = k
    return tuple(inv)


def transposition(n: int, i: int, j: int) -> Perm:
    """The permutation of 1..n exchanging i and j."""
    p = list(range(1, n + 1))
    p[i - 1], p[j - 1] = j, i
    return tuple(p)


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Cycle decomposition including fixed points, each cycle led by its
    smallest element, cycles sorted by leading element."""
    seen = [False] * len(p)
    out = []
    for start in range(1, len(p) + 1):
        if seen[start - 1]:
            continue
        cyc = [start]
        seen[start - 1] = True
        k = p[start - 1]
        while k != start:
            cyc.append(k)
            seen[k - 1] = True
            k = p[k - 1]
        out.append(tuple(cyc))
    return out


def cycle_count(p: Perm) -> int:
    """Number of cycles, fixed points included (so tr D(p) = N**cycle_count)."""
    return len(cycles(p))


def cycle_type(p: Perm) -> tuple[int, ...]:
    """Cycle lengths in weakly decreasing order."""
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def sign(p: Perm) -> int:
    """Parity: +1 for even, -1 for odd."""
    return -1 if (len(p) - cycle_count(p)) % 2 else 1


def all_permutations(n: int) -> Iterator[Perm]:
    """All n! permutations of 1..n in lexicographic one-line order."""
    return _itertools_permutations(range(1, n + 1))


def embed(p: Perm, n: int) -> Perm:
    """Extend a permutation of 1..m to 1..n (m <= n) fixing m+1, ..., n."""
    if len(p) > n:
        raise ValueError(f"cannot embed a permutation of length {len(p)} into S_{n}")
    return p + tuple(range(len(p) + 1, n + 1))


def perms_of(values: Iterable[int], n: int) -> Iterator[Perm]:
    """Permutations of 1..n moving only the given values (all others fixed).

    Yields one permutation per rearrangement of `values` among their own
    positions: the subgroup of S_n supported on that subset.
    """
    vals = sorted(values)
    base = list(range(1, n + 1))
    for image in _itertools_permutations(vals):
        p = base.copy()
        for v, w in zip(vals, image):
            p[v - 1] = w
        yield tuple(p)
