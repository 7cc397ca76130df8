#!/usr/bin/env python3
"""
Time the JIT (numba) lane against the vectorized (numpy) lane on the
three hot kernels: exhaustive tier histograms, batched tier counting,
and the minimal-element basis sweep.

    python benchmarks/bench_backends.py [--max-n 9] [--basis-len 8]

The numba timings exclude the first warm-up call so JIT compilation
does not pollute the numbers.
"""
from __future__ import annotations

import argparse
import itertools
import time

import numpy as np

from stacktier import _kernels_numpy


def _load_numba():
    try:
        from stacktier import _kernels_numba

        return _kernels_numba
    except ImportError:
        return None


def _time(fn, *args, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=9)
    parser.add_argument("--basis-len", type=int, default=8)
    parser.add_argument("--batch-n", type=int, default=9)
    args = parser.parse_args()

    numba_lane = _load_numba()
    lanes = [("numpy", _kernels_numpy)]
    if numba_lane is not None:
        numba_lane.tier_histogram(4)  # warm up the JIT
        numba_lane.minimal_tier_elements(5, 2)
        lanes.insert(0, ("numba", numba_lane))
    else:
        print("numba unavailable; timing the numpy lane only")

    batch = np.array(
        list(itertools.permutations(range(1, args.batch_n + 1))), dtype=np.int64
    )
    if numba_lane is not None:
        numba_lane.batch_tier(batch[:10])

    rows = []
    for name, lane in lanes:
        rows.append(
            (
                name,
                _time(lane.tier_histogram, args.max_n, repeat=1),
                _time(lane.batch_tier, batch),
                _time(lane.minimal_tier_elements, args.basis_len, 3, repeat=1),
            )
        )

    header = (
        f"{'lane':<8}"
        f"{f'histogram n={args.max_n}':>18}"
        f"{f'batch {len(batch)}x{args.batch_n}':>18}"
        f"{f'basis len={args.basis_len}':>16}"
    )
    print(header)
    for name, hist_s, batch_s, basis_s in rows:
        print(f"{name:<8}{hist_s:>17.3f}s{batch_s:>17.3f}s{basis_s:>15.3f}s")

    reference = {name: hist for name, hist, _, _ in rows}
    if len(rows) == 2:
        ratio = reference["numpy"] / reference["numba"]
        print(f"\nnumba speedup on the histogram sweep: {ratio:.1f}x")


if __name__ == "__main__":
    main()
