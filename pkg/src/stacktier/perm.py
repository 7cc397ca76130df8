"""
Permutations of {1, ..., n} in one-line notation.

A permutation is represented as a tuple of its values, 1-based both in
value and in position: ``(3, 5, 6, 1, 2, 4)`` is the permutation sending
position 1 to value 3, and so on.  The empty tuple is the (valid) empty
permutation.

This module holds the order-theoretic primitives everything else builds
on: pattern containment, separated pairs, intervals, and the plus/minus
block decompositions.
"""
from __future__ import annotations

import dataclasses
from typing import Iterator, Sequence

Permutation = tuple[int, ...]


def check_permutation(values: Sequence[int]) -> Permutation:
    """Validate that values is a rearrangement of 1..n and return it as a tuple.

    >>> check_permutation([2, 1])
    (2, 1)
    """
    values = tuple(values)
    n = len(values)
    seen = [False] * (n + 1)
    for v in values:
        if not 1 <= v <= n:
            raise ValueError(f"value {v} out of range 1..{n}")
        if seen[v]:
            raise ValueError(f"duplicate value {v}")
        seen[v] = True
    return values


def parse_permutation(text: str) -> Permutation:
    """Parse a permutation from text.

    Two forms are accepted: whitespace/comma-separated integers, or a
    compact digit string like "356124" (single digits, so only usable
    for n <= 9).  Empty input parses to the empty permutation.

    >>> parse_permutation("356124")
    (3, 5, 6, 1, 2, 4)
    >>> parse_permutation("8 12 7 14 6 11 5 15 4 10 3 13 2 9 1")[:4]
    (8, 12, 7, 14)
    """
    text = text.strip()
    if not text:
        return ()
    if ("," in text) or any(c.isspace() for c in text):
        tokens = text.replace(",", " ").split()
        if "" in (t.strip() for t in text.split(",")):
            raise ValueError("empty token in permutation")
        values = []
        for tok in tokens:
            try:
                values.append(int(tok))
            except ValueError:
                raise ValueError(f"bad token {tok!r} in permutation") from None
        return check_permutation(values)
    if text.isdigit():
        # compact form: one value per digit
        return check_permutation([int(c) for c in text])
    raise ValueError(f"cannot parse permutation from {text!r}")


def format_permutation(p: Sequence[int]) -> str:
    """Render as space-separated values (canonical output form)."""
    return " ".join(str(v) for v in p)


def standardize(values: Sequence[int]) -> Permutation:
    """Rescale distinct integers to the pattern 1..k they form.

    >>> standardize((6, 7, 5, 8))
    (2, 3, 1, 4)
    """
    order = sorted(range(len(values)), key=lambda i: values[i])
    out = [0] * len(values)
    for rank, i in enumerate(order, start=1):
        out[i] = rank
    return tuple(out)


def delete_entry(p: Sequence[int], position: int) -> Permutation:
    """Delete the entry at 1-based position, rescaling the rest to 1..n-1."""
    if not 1 <= position <= len(p):
        raise ValueError(f"position {position} out of range")
    v = p[position - 1]
    return tuple(x - 1 if x > v else x for i, x in enumerate(p) if i != position - 1)


def contains_pattern(host: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff some subsequence of host is order-isomorphic to pattern.

    Pruned depth-first search over index choices; fine for the short
    patterns used here (length <= 9).

    >>> contains_pattern((4, 1, 2, 7, 3, 5, 6), (2, 3, 1))
    True
    >>> contains_pattern((4, 1, 2, 7, 3, 5, 6), (3, 2, 1))
    False
    """
    k, n = len(pattern), len(host)
    if k == 0:
        return True
    if k > n:
        return False

    chosen: list[int] = []

    def extend(start: int) -> bool:
        depth = len(chosen)
        if depth == k:
            return True
        for i in range(start, n - (k - depth) + 1):
            ok = True
            for j, cj in enumerate(chosen):
                if (pattern[j] < pattern[depth]) != (host[cj] < host[i]):
                    ok = False
                    break
            if ok:
                chosen.append(i)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


@dataclasses.dataclass(frozen=True)
class SeparatedPair:
    """Consecutive values (small+1, small) split by a larger entry.

    The pair (i+1, i) is separated when i+1 appears before i and some
    value greater than i+1 sits strictly between them; witness_position
    is the 1-based position of the leftmost such separator.
    """

    small: int
    large: int
    witness_position: int


def positions_of(p: Sequence[int]) -> list[int]:
    """pos[v] = 1-based position of value v (index 0 unused)."""
    pos = [0] * (len(p) + 1)
    for i, v in enumerate(p, start=1):
        pos[v] = i
    return pos


def separated_pairs(p: Sequence[int]) -> list[SeparatedPair]:
    """All separated pairs of p, sorted by the small value.

    >>> separated_pairs((5, 4, 1, 2, 7, 3, 6))
    [SeparatedPair(small=3, large=4, witness_position=5)]
    """
    n = len(p)
    pos = positions_of(p)
    out = []
    for i in range(1, n):
        lo, hi = pos[i + 1], pos[i]
        if lo < hi:
            for j in range(lo + 1, hi):
                if p[j - 1] > i + 1:
                    out.append(SeparatedPair(small=i, large=i + 1, witness_position=j))
                    break
    return out


def separated_pair_count(p: Sequence[int]) -> int:
    """Number of separated pairs, without building witness records."""
    n = len(p)
    pos = positions_of(p)
    count = 0
    for i in range(1, n):
        lo, hi = pos[i + 1], pos[i]
        if lo < hi and any(p[j] > i + 1 for j in range(lo, hi - 1)):
            count += 1
    return count


def maximal_intervals(p: Sequence[int]) -> list[tuple[int, int]]:
    """Partition positions into maximal interval blocks, left to right.

    An interval is a window of consecutive positions holding consecutive
    values.  Positions covered by a common proper interval window are
    merged; the blocks are the transitive closure of that relation,
    returned as (start_position, length) pairs, 1-based.

    >>> maximal_intervals((6, 8, 5, 7, 1, 2, 9, 4, 3))
    [(1, 4), (5, 2), (7, 1), (8, 2)]
    """
    n = len(p)
    if n == 0:
        return []
    join = [False] * (n - 1)
    for a in range(n):
        mn = mx = p[a]
        for b in range(a, n):
            mn = min(mn, p[b])
            mx = max(mx, p[b])
            if (a, b) != (0, n - 1) and mx - mn == b - a:
                for j in range(a, b):
                    join[j] = True
    blocks = []
    start = 0
    for j in range(n - 1):
        if not join[j]:
            blocks.append((start + 1, j - start + 1))
            start = j + 1
    blocks.append((start + 1, n - start))
    return blocks


@dataclasses.dataclass(frozen=True)
class Decomposition:
    """Maximal block decomposition under the direct (plus) or skew (minus) sum."""

    kind: str  # "plus" | "minus"
    components: tuple[Permutation, ...]


def _plus_cuts(p: Sequence[int]) -> Iterator[tuple[int, int]]:
    # cut after position j when the prefix holds exactly the values 1..j
    mx = 0
    start = 0
    for j, v in enumerate(p, start=1):
        mx = max(mx, v)
        if mx == j:
            yield start, j
            start = j


def plus_decompose(p: Sequence[int]) -> Decomposition:
    """Maximal decomposition p = s1 (+) s2 (+) ... into plus-indecomposables.

    >>> plus_decompose((4, 3, 1, 2, 6, 7, 5, 8)).components
    ((4, 3, 1, 2), (2, 3, 1), (1,))
    """
    if len(p) == 0:
        raise ValueError("cannot decompose the empty permutation")
    comps = []
    for start, end in _plus_cuts(p):
        comps.append(tuple(v - start for v in p[start:end]))
    return Decomposition(kind="plus", components=tuple(comps))


def minus_decompose(p: Sequence[int]) -> Decomposition:
    """Maximal decomposition p = s1 (-) s2 (-) ... into minus-indecomposables.

    >>> minus_decompose((6, 7, 5, 8, 4, 3, 1, 2)).components
    ((2, 3, 1, 4), (1,), (1,), (1, 2))
    """
    if len(p) == 0:
        raise ValueError("cannot decompose the empty permutation")
    n = len(p)
    comps = []
    mn = n + 1
    start = 0
    for j, v in enumerate(p, start=1):
        mn = min(mn, v)
        if mn == n - j + 1:
            comps.append(tuple(v - (n - j) for v in p[start:j]))
            start = j
            mn = n + 1
    return Decomposition(kind="minus", components=tuple(comps))


def direct_sum(s: Sequence[int], t: Sequence[int]) -> Permutation:
    """s (+) t: s followed by t with t's values shifted above s's."""
    return tuple(s) + tuple(v + len(s) for v in t)


def skew_sum(s: Sequence[int], t: Sequence[int]) -> Permutation:
    """s (-) t: s shifted above t's values, followed by t."""
    return tuple(v + len(t) for v in s) + tuple(t)


def plus_combine(components: Sequence[Sequence[int]]) -> Permutation:
    """Fold direct_sum over a component list."""
    out: Permutation = ()
    for c in components:
        out = direct_sum(out, c)
    return out


def minus_combine(components: Sequence[Sequence[int]]) -> Permutation:
    """Fold skew_sum over a component list."""
    out: Permutation = ()
    for c in components:
        out = skew_sum(out, c)
    return out
