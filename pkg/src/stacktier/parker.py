"""
Parker sequences and the placement bijection onto permutations.

A Parker sequence of length n is written a_n a_{n-1} ... a_1 (the
subscript counts from the right) with 1 <= a_{n-i+1} <= i, i.e. the
entry at left-to-right position j is at most j.  Sequences are stored
in written order as tuples.

A *descent* is an adjacent strict drop in the written sequence, and we
index it from the right by the subscript of its larger-subscript
element: a drop between a_{i+1} and a_i is the descent at i+1.  Under
the placement bijection the descent at i+1 corresponds exactly to the
separated pair (i+1, i) of the image permutation, so descent count
equals tier.
"""
from __future__ import annotations

import itertools
import math
from typing import Iterator, Sequence

from .perm import Permutation, positions_of

ParkerSequence = tuple[int, ...]

ENUMERATION_CAP = 10  # there are n! Parker sequences of length n


def is_parker(seq: Sequence[int]) -> bool:
    """True iff every entry obeys its positional bound.

    >>> is_parker((1, 2, 1, 3, 3))
    True
    >>> is_parker((2, 1))
    False
    """
    return all(1 <= v <= j for j, v in enumerate(seq, start=1))


def _require_parker(seq: Sequence[int]) -> ParkerSequence:
    seq = tuple(seq)
    if not is_parker(seq):
        raise ValueError(f"{seq} is not a valid sequence (entry exceeds its bound)")
    return seq


def parse_parker(text: str) -> ParkerSequence:
    """Parse from compact digits ("12133") or separated integers."""
    text = text.strip()
    if not text:
        return ()
    if ("," in text) or any(c.isspace() for c in text):
        tokens = text.replace(",", " ").split()
        return _require_parker(int(t) for t in tokens)
    if text.isdigit():
        return _require_parker(int(c) for c in text)
    raise ValueError(f"cannot parse sequence from {text!r}")


def format_parker(seq: Sequence[int]) -> str:
    """Compact digit form when all entries are single digits, else spaced."""
    if all(v <= 9 for v in seq):
        return "".join(str(v) for v in seq)
    return " ".join(str(v) for v in seq)


def descents(seq: Sequence[int]) -> tuple[int, ...]:
    """Right-based indices of the descents, ascending.

    The reported index is the subscript of the larger-subscript element
    of the drop, so a descent at index d pairs with (d, d-1) separated
    in the image permutation.

    >>> descents((1, 2, 3, 4, 4, 5, 4, 5))
    (3,)
    """
    n = len(seq)
    return tuple(sorted(n - j for j in range(n - 1) if seq[j] > seq[j + 1]))


def descent_count(seq: Sequence[int]) -> int:
    return sum(1 for j in range(len(seq) - 1) if seq[j] > seq[j + 1])


def parker_to_perm(seq: Sequence[int]) -> Permutation:
    """Place each value i into the a_i-th unoccupied slot from the right.

    >>> parker_to_perm((1, 2, 1, 3, 3))
    (4, 2, 1, 5, 3)
    """
    seq = _require_parker(seq)
    n = len(seq)
    free = list(range(n))
    out = [0] * n
    for i in range(1, n + 1):
        a = seq[n - i]
        slot = free.pop(len(free) - a)
        out[slot] = i
    return tuple(out)


def perm_to_parker(p: Sequence[int]) -> ParkerSequence:
    """Inverse placement: a_i is the position of i, counted from the right,
    among the values >= i.

    >>> perm_to_parker((4, 2, 1, 5, 3))
    (1, 2, 1, 3, 3)
    """
    n = len(p)
    pos = positions_of(p)
    arr = [0] * n
    for i in range(1, n + 1):
        larger_right = sum(1 for v in range(i + 1, n + 1) if pos[v] > pos[i])
        arr[n - i] = larger_right + 1
    return tuple(arr)


def iter_parker(n: int) -> Iterator[ParkerSequence]:
    """All Parker sequences of length n in lexicographic order."""
    return itertools.product(*[range(1, j + 1) for j in range(1, n + 1)])


def enumerate_parker(n: int, t: int) -> list[ParkerSequence]:
    """All length-n sequences with exactly t descents, lexicographic.

    >>> [format_parker(s) for s in enumerate_parker(4, 1)][:3]
    ['1121', '1131', '1132']
    """
    if n < 1:
        raise ValueError("length must be positive")
    if n > ENUMERATION_CAP:
        raise ValueError(f"length {n} exceeds enumeration cap {ENUMERATION_CAP}")
    return [seq for seq in iter_parker(n) if descent_count(seq) == t]


def descent_histogram(n: int) -> list[int]:
    """Counts of length-n sequences by descent number, index t = 0..n-1.

    Single sweep over all n! sequences; this is the enumeration's third
    independent oracle next to brute force and the insertion recurrence.
    """
    if n < 1:
        raise ValueError("length must be positive")
    if n > ENUMERATION_CAP:
        raise ValueError(f"length {n} exceeds enumeration cap {ENUMERATION_CAP}")
    hist = [0] * n
    for seq in iter_parker(n):
        hist[descent_count(seq)] += 1
    assert sum(hist) == math.factorial(n)
    return hist
