"""
JIT-compiled hot kernels: exhaustive scans over S_n with in-kernel
lexicographic permutation stepping.  Import fails cleanly when numba is
missing; the numpy lane in _kernels_numpy covers the same surface.
"""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _pair_count(perm):
    n = perm.shape[0]
    pos = np.empty(n + 2, np.int64)
    for i in range(n):
        pos[perm[i]] = i
    count = 0
    for i in range(1, n):
        lo = pos[i + 1]
        hi = pos[i]
        if lo < hi:
            for j in range(lo + 1, hi):
                if perm[j] > i + 1:
                    count += 1
                    break
    return count


@njit(cache=True)
def _sim_tier(perm):
    n = perm.shape[0]
    if n == 0:
        return 0
    cur = perm.copy()
    stack = np.empty(n, np.int64)
    need = 1
    m = n
    passes = 0
    while m > 0:
        passes += 1
        sp = 0
        for i in range(m):
            stack[sp] = cur[i]
            sp += 1
            while sp > 0 and stack[sp - 1] == need:
                sp -= 1
                need += 1
        for i in range(sp):
            cur[i] = stack[i]
        m = sp
    return passes - 1


@njit(cache=True)
def _next_perm(a):
    n = a.shape[0]
    i = n - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    lo, hi = i + 1, n - 1
    while lo < hi:
        a[lo], a[hi] = a[hi], a[lo]
        lo += 1
        hi -= 1
    return True


@njit(cache=True)
def _tier_histogram(n):
    hist = np.zeros(n, np.int64)
    perm = np.arange(1, n + 1, dtype=np.int64)
    while True:
        hist[_pair_count(perm)] += 1
        if not _next_perm(perm):
            break
    return hist


@njit(cache=True)
def _sim_agrees(n):
    perm = np.arange(1, n + 1, dtype=np.int64)
    while True:
        if _sim_tier(perm) != _pair_count(perm):
            return False
        if not _next_perm(perm):
            break
    return True


@njit(cache=True)
def _is_minimal(perm, target, reduced):
    n = perm.shape[0]
    for d in range(n):
        k = 0
        for i in range(n):
            if i == d:
                continue
            v = perm[i]
            if v > perm[d]:
                v -= 1
            reduced[k] = v
            k += 1
        if _pair_count(reduced) >= target:
            return False
    return True


@njit(cache=True)
def _minimal_elements(length, target):
    # pass 1: count survivors, pass 2: collect them
    reduced = np.empty(length - 1, np.int64)
    perm = np.arange(1, length + 1, dtype=np.int64)
    count = 0
    while True:
        if _pair_count(perm) == target and _is_minimal(perm, target, reduced):
            count += 1
        if not _next_perm(perm):
            break
    out = np.empty((count, length), np.int64)
    perm = np.arange(1, length + 1, dtype=np.int64)
    row = 0
    while True:
        if _pair_count(perm) == target and _is_minimal(perm, target, reduced):
            out[row] = perm
            row += 1
        if not _next_perm(perm):
            break
    return out


@njit(cache=True)
def _batch_tier(perms):
    m = perms.shape[0]
    out = np.empty(m, np.int64)
    for r in range(m):
        out[r] = _pair_count(perms[r])
    return out


def tier_histogram(n: int) -> np.ndarray:
    """Counts of permutations of S_n by tier, index t = 0..n-1."""
    if n == 0:
        return np.array([1], dtype=np.int64)
    return _tier_histogram(n)


def sim_agrees_with_pairs(n: int) -> bool:
    """Exhaustive dual-oracle check over S_n: machine passes vs pair count."""
    if n == 0:
        return True
    return bool(_sim_agrees(n))


def minimal_tier_elements(length: int, target_tier: int) -> np.ndarray:
    """Permutations of the given length with tier exactly target_tier whose
    every single-entry deletion drops below it.  Rows in lexicographic order."""
    if length < 1:
        return np.empty((0, length), np.int64)
    return _minimal_elements(length, target_tier)


def batch_tier(perms: np.ndarray) -> np.ndarray:
    """Tier of each row of a (m, n) array of permutations of 1..n."""
    perms = np.ascontiguousarray(np.asarray(perms, dtype=np.int64))
    if perms.shape[1] == 0:
        return np.zeros(perms.shape[0], np.int64)
    return _batch_tier(perms)
