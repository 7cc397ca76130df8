"""
Vectorized fallback kernels (no JIT).  Same surface as _kernels_numba.

Batch tier counting uses a different characterization than the scalar
scan: for each value i let c_i be the number of larger values to its
right; (i+1, i) is separated exactly when c_{i+1} > c_i.  The two
formulations cross-check each other in the test suite.

The exhaustive dual-oracle check has no useful vectorization for the
machine side, so that one falls back to a scalar pass loop.
"""
from __future__ import annotations

import itertools

import numpy as np

_CHUNK = 200_000


def batch_tier(perms: np.ndarray) -> np.ndarray:
    """Tier of each row of a (m, n) array of permutations of 1..n."""
    perms = np.asarray(perms)
    m, n = perms.shape
    if n <= 1:
        return np.zeros(m, np.int64)
    pos = np.argsort(perms, axis=1, kind="stable")  # pos[:, v-1] = column of value v
    idx = np.arange(n)
    c = np.empty((m, n), np.int64)
    for v in range(1, n + 1):
        right = idx[None, :] > pos[:, v - 1][:, None]
        c[:, v - 1] = ((perms > v) & right).sum(axis=1)
    return (c[:, 1:] > c[:, :-1]).sum(axis=1).astype(np.int64)


def _perm_chunks(n: int, chunk: int = _CHUNK):
    it = itertools.permutations(range(1, n + 1))
    while True:
        block = list(itertools.islice(it, chunk))
        if not block:
            return
        yield np.array(block, dtype=np.int16)


def tier_histogram(n: int) -> np.ndarray:
    """Counts of permutations of S_n by tier, index t = 0..n-1."""
    if n == 0:
        return np.array([1], dtype=np.int64)
    hist = np.zeros(n, np.int64)
    for block in _perm_chunks(n):
        hist += np.bincount(batch_tier(block), minlength=n)
    return hist


def _scalar_sim_tier(p) -> int:
    cur = list(p)
    need = 1
    passes = 0
    while cur:
        passes += 1
        stack = []
        for v in cur:
            stack.append(v)
            while stack and stack[-1] == need:
                stack.pop()
                need += 1
        cur = stack
    return passes - 1


def sim_agrees_with_pairs(n: int) -> bool:
    """Exhaustive dual-oracle check over S_n: machine passes vs pair count."""
    if n == 0:
        return True
    for block in _perm_chunks(n):
        tiers = batch_tier(block)
        for row, t in zip(block, tiers):
            if _scalar_sim_tier(row) != t:
                return False
    return True


def minimal_tier_elements(length: int, target_tier: int) -> np.ndarray:
    """Permutations of the given length with tier exactly target_tier whose
    every single-entry deletion drops below it.  Rows in lexicographic order."""
    if length < 1:
        return np.empty((0, length), np.int64)
    found = []
    for block in _perm_chunks(length):
        cands = block[batch_tier(block) == target_tier]
        if cands.shape[0] == 0:
            continue
        ok = np.ones(cands.shape[0], dtype=bool)
        for d in range(length):
            reduced = np.delete(cands, d, axis=1)
            reduced = reduced - (reduced > cands[:, d : d + 1])
            ok &= batch_tier(reduced) < target_tier
        if ok.any():
            found.append(cands[ok])
    if not found:
        return np.empty((0, length), np.int64)
    return np.concatenate(found).astype(np.int64)
