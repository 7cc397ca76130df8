"""
Tier arithmetic: the separated-pair tier of a permutation, the maximum
tier attainable at each length, extremal witnesses, and the tier of a
chain of minus-indecomposable blocks.
"""
from __future__ import annotations

import functools
from typing import Sequence

from .perm import Permutation, minus_decompose, separated_pair_count


def tier(p: Sequence[int]) -> int:
    """Tier of p: the number of separated pairs.

    This is the canonical O(n^2) oracle; it agrees with the pass-counting
    simulation in machine.py (a standing cross-check in the test suite).

    >>> tier((2, 3, 1))
    1
    >>> tier((5, 7, 4, 8, 3, 6, 2, 9, 1))
    5
    """
    return separated_pair_count(p)


def max_tier(n: int) -> int:
    """Maximum tier over all permutations of length n: n - 1 - floor(log2 n).

    >>> [max_tier(n) for n in (1, 2, 7, 10, 15)]
    [0, 0, 4, 6, 11]
    """
    if n < 1:
        raise ValueError("length must be positive")
    return n - 1 - (n.bit_length() - 1)


@functools.lru_cache(maxsize=None)
def max_tier_recursive(n: int) -> int:
    """The same function through its recurrence: floor((n-1)/2) + value at floor(n/2)."""
    if n < 1:
        raise ValueError("length must be positive")
    if n == 1:
        return 0
    return (n - 1) // 2 + max_tier_recursive(n // 2)


def max_tier_floor_sum(n: int) -> int:
    """Binary-expansion form: sum over j >= 1 of floor((n - 2^(j-1)) / 2^j)."""
    if n < 1:
        raise ValueError("length must be positive")
    total = 0
    j = 1
    while (1 << (j - 1)) <= n:
        total += (n - (1 << (j - 1))) >> j
        j += 1
    return total


def max_tier_witness(n: int) -> Permutation:
    """A permutation of length n attaining max_tier(n).

    Built recursively: the larger half of the values descends through the
    odd positions, and the even positions carry the remaining values
    arranged in the witness pattern for half the length, so they both
    separate every descending pair and realize the maximal tier among
    themselves.  For n = 2^k - 1 this is the unique maximal permutation.

    >>> max_tier_witness(7)
    (4, 6, 3, 7, 2, 5, 1)
    """
    if n < 1:
        raise ValueError("length must be positive")
    if n == 1:
        return (1,)
    m = (n + 1) // 2
    sub = max_tier_witness(n // 2)
    out = [0] * n
    out[0::2] = range(m, 0, -1)
    out[1::2] = [m + v for v in sub]
    return tuple(out)


def tier_of_minus_chain(components: Sequence[Sequence[int]]) -> int:
    """Tier of s1 (-) s2 (-) ... (-) sp from the blocks alone.

    Each block must be non-empty and minus-indecomposable.  With r the
    number of singleton blocks before the last, the tier is
    p - r - 1 + (sum of the block tiers).

    >>> tier_of_minus_chain([(2, 3, 1, 4), (1,), (1,), (1, 2)])
    2
    """
    if not components:
        raise ValueError("empty chain")
    comps = [tuple(c) for c in components]
    for c in comps:
        if not c:
            raise ValueError("empty component in chain")
        if len(minus_decompose(c).components) != 1:
            raise ValueError(f"component {c} is not minus-indecomposable")
    p = len(comps)
    r = sum(1 for c in comps[:-1] if len(c) == 1)
    return p - r - 1 + sum(tier(c) for c in comps)
