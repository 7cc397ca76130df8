"""
k-pass sortable permutation classes and their finite bases.

The permutations of tier at most t form a class; its basis B_t consists
of the minimal permutations of tier t+1 (every single-entry deletion
drops the tier to t or below), and no basis element can be longer than
3(t+1).  The search enumerates each candidate length exhaustively,
which is why lengths past 9 sit behind an explicit opt-in.
"""
from __future__ import annotations

import dataclasses
from typing import Sequence

from ._backend import get_backend
from .perm import Permutation, contains_pattern
from .tiers import max_tier, tier

DEFAULT_LENGTH_CAP = 9
LARGE_LENGTH_CAP = 12

# the 2-pass basis (tier bound 1), shipped as a constant so avoidance
# tests need no search: eight patterns of length 5 and three of length 6
BASIS_TIER_0: tuple[Permutation, ...] = ((2, 3, 1),)
BASIS_TIER_1: tuple[Permutation, ...] = (
    (2, 4, 1, 5, 3),
    (2, 4, 5, 1, 3),
    (2, 4, 5, 3, 1),
    (3, 4, 2, 5, 1),
    (3, 5, 2, 4, 1),
    (4, 2, 5, 1, 3),
    (4, 2, 5, 3, 1),
    (4, 5, 2, 3, 1),
    (2, 3, 1, 5, 6, 4),
    (2, 6, 1, 4, 5, 3),
    (5, 2, 3, 1, 6, 4),
)


@dataclasses.dataclass(frozen=True)
class Basis:
    """Minimal forbidden patterns for the class of tier <= tier_bound."""

    tier_bound: int
    elements: tuple[Permutation, ...]


def is_k_pass_sortable(p: Sequence[int], k: int) -> bool:
    """True iff p sorts within k passes, i.e. tier(p) <= k - 1."""
    if k < 1:
        raise ValueError("pass count must be positive")
    return tier(p) <= k - 1


def compute_basis(
    t: int,
    max_len: int,
    allow_large: bool = False,
    backend=None,
) -> Basis:
    """All basis elements of B_t up to max_len, sorted by length then lexicographically.

    max_len clamps to the 3(t+1) bound.  Lengths above 9 require
    allow_large (a full S_12 sweep is the practical ceiling); beyond 12
    the search is refused outright.
    """
    if t < 0:
        raise ValueError("tier bound must be nonnegative")
    if max_len < 1:
        raise ValueError("max_len must be positive")
    max_len = min(max_len, 3 * (t + 1))
    cap = LARGE_LENGTH_CAP if allow_large else DEFAULT_LENGTH_CAP
    if max_len > cap:
        hint = "" if allow_large else " (pass allow_large to search lengths up to 12)"
        raise ValueError(f"basis search to length {max_len} exceeds cap {cap}{hint}")
    kernels = backend if backend is not None else get_backend()
    target = t + 1
    elements: list[Permutation] = []
    for length in range(1, max_len + 1):
        if max_tier(length) < target:
            continue
        rows = kernels.minimal_tier_elements(length, target)
        elements.extend(tuple(int(v) for v in row) for row in rows)
    elements.sort(key=lambda p: (len(p), p))
    return Basis(tier_bound=t, elements=tuple(elements))


def basis_length_counts(b: Basis) -> dict[int, int]:
    """Number of basis elements at each occurring length."""
    counts: dict[int, int] = {}
    for p in b.elements:
        counts[len(p)] = counts.get(len(p), 0) + 1
    return counts


def avoids_basis(p: Sequence[int], b: Basis | Sequence[Permutation]) -> bool:
    """True iff p contains no element of the basis as a pattern."""
    elements = b.elements if isinstance(b, Basis) else b
    return not any(
        len(beta) <= len(p) and contains_pattern(p, beta) for beta in elements
    )
