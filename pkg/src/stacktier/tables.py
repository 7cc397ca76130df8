"""
The tier triangle T(n, t) -- counts of length-n permutations of tier t --
produced three independent ways (exhaustive scan, insertion recurrence,
series extraction), plus its cumulative form and export formats.

The insertion recurrence refines by the position k of the value 1
(left-based): every length-(n+1) permutation with its 1 at position k
arises uniquely by lifting a length-n permutation and inserting a new 1
at position k, which creates the separated pair (2, 1) exactly when k
is at least two slots right of the old 1.  Hence

    P(n+1, t, k) = sum_{j >= k-1} P(n, t, j) + sum_{j <= k-2} P(n, t-1, j)

with P(1, 0, 1) = 1, and T(n, t) is the row sum over k.  Everything is
exact integer arithmetic (Python ints), so rows stay correct far past
machine-word range.
"""
from __future__ import annotations

import dataclasses
import json
import math

from ._backend import get_backend
from .series import t_series
from .tiers import max_tier

BRUTE_FORCE_CAP = 11


@dataclasses.dataclass(frozen=True)
class TierTable:
    """Counts indexed by (n, t); missing entries are zero."""

    max_n: int
    counts: dict[tuple[int, int], int]
    cumulative: bool = False

    def entry(self, n: int, t: int) -> int:
        if self.cumulative and t > max_tier(n):
            t = max_tier(n)
        return self.counts.get((n, t), 0)

    def row(self, n: int, width: int | None = None) -> list[int]:
        if width is None:
            width = max_tier(n) + 1
        return [self.entry(n, t) for t in range(width)]


@dataclasses.dataclass(frozen=True)
class PositionTable:
    """Refined counts P(n, t, k) by the position k of the value 1."""

    max_n: int
    entries: dict[tuple[int, int, int], int]

    def entry(self, n: int, t: int, k: int) -> int:
        return self.entries.get((n, t, k), 0)


def table_bruteforce(max_n: int, backend=None, cap: int = BRUTE_FORCE_CAP) -> TierTable:
    """Exhaustive tier histogram of S_n for every n <= max_n."""
    if max_n < 1:
        raise ValueError("max_n must be positive")
    if max_n > cap:
        raise ValueError(f"max_n {max_n} exceeds brute-force cap {cap}")
    kernels = backend if backend is not None else get_backend()
    counts: dict[tuple[int, int], int] = {}
    for n in range(1, max_n + 1):
        hist = kernels.tier_histogram(n)
        for t, c in enumerate(hist):
            if c:
                counts[(n, t)] = int(c)
    return TierTable(max_n=max_n, counts=counts)


def table_recurrence(max_n: int) -> tuple[TierTable, PositionTable]:
    """The triangle from the insertion recurrence, with its P refinement."""
    if max_n < 1:
        raise ValueError("max_n must be positive")
    counts: dict[tuple[int, int], int] = {(1, 0): 1}
    entries: dict[tuple[int, int, int], int] = {(1, 0, 1): 1}
    rows: dict[int, list[int]] = {0: [0, 1]}  # t -> [unused, P(n,t,1..n)]
    for n in range(1, max_n):
        nxt: dict[int, list[int]] = {}
        for t in range(max_tier(n + 1) + 1):
            cur = rows.get(t, [0] * (n + 1))
            prev = rows.get(t - 1, [0] * (n + 1)) if t > 0 else [0] * (n + 1)
            suffix = [0] * (n + 2)
            for j in range(n, 0, -1):
                suffix[j] = suffix[j + 1] + cur[j]
            prefix = [0] * (n + 1)
            for j in range(1, n + 1):
                prefix[j] = prefix[j - 1] + prev[j]
            row = [0] * (n + 2)
            for k in range(1, n + 2):
                high = suffix[1] if k == 1 else suffix[min(k - 1, n + 1)]
                low = prefix[min(k - 2, n)] if k >= 3 else 0
                row[k] = high + low
            if any(row):
                nxt[t] = row
                counts[(n + 1, t)] = sum(row)
                for k in range(1, n + 2):
                    if row[k]:
                        entries[(n + 1, t, k)] = row[k]
        rows = nxt
    table = TierTable(max_n=max_n, counts=counts)
    return table, PositionTable(max_n=max_n, entries=entries)


def table_gf(max_n: int) -> TierTable:
    """The triangle by coefficient extraction from the radical tower."""
    if max_n < 1:
        raise ValueError("max_n must be positive")
    counts: dict[tuple[int, int], int] = {}
    for t in range(max_tier(max_n) + 1):
        column = t_series(t, max_n)
        for n in range(1, max_n + 1):
            if column[n]:
                counts[(n, t)] = column[n]
    return TierTable(max_n=max_n, counts=counts)


def cumulative(table: TierTable) -> TierTable:
    """Running row sums: entry (n, t) counts tier <= t, saturating at n!."""
    if table.cumulative:
        return table
    counts: dict[tuple[int, int], int] = {}
    for n in range(1, table.max_n + 1):
        total = 0
        for t in range(max_tier(n) + 1):
            total += table.entry(n, t)
            counts[(n, t)] = total
    return TierTable(max_n=table.max_n, counts=counts, cumulative=True)


def _headers(table: TierTable, width: int) -> list[str]:
    mark = "t<=" if table.cumulative else "t="
    return [f"{mark}{t}" for t in range(width)]


def format_table_text(table: TierTable) -> str:
    """Aligned text table, rows n and columns t, blanks past the max tier."""
    width = max_tier(table.max_n) + 1
    headers = _headers(table, width)
    cells = []
    for n in range(1, table.max_n + 1):
        row = []
        for t in range(width):
            if t > max_tier(n):
                row.append("" if not table.cumulative else str(table.entry(n, t)))
            else:
                row.append(str(table.entry(n, t)))
        cells.append(row)
    labels = [f"n={n}" for n in range(1, table.max_n + 1)]
    label_w = max(len(s) for s in labels)
    col_w = [
        max(len(headers[t]), max(len(r[t]) for r in cells)) for t in range(width)
    ]
    lines = [
        " " * label_w + "  " + "  ".join(h.rjust(col_w[t]) for t, h in enumerate(headers))
    ]
    for label, row in zip(labels, cells):
        line = label.ljust(label_w) + "  " + "  ".join(
            c.rjust(col_w[t]) for t, c in enumerate(row)
        )
        lines.append(line.rstrip())
    return "\n".join(lines)


def format_table_csv(table: TierTable) -> str:
    """Full rectangle; structural zeros written out (saturated if cumulative)."""
    width = max_tier(table.max_n) + 1
    lines = ["n," + ",".join(_headers(table, width))]
    for n in range(1, table.max_n + 1):
        lines.append(f"{n}," + ",".join(str(table.entry(n, t)) for t in range(width)))
    return "\n".join(lines)


def format_table_json(table: TierTable) -> str:
    width = max_tier(table.max_n) + 1
    payload = {
        "max_n": table.max_n,
        "kind": "cumulative" if table.cumulative else "exact",
        "rows": {str(n): table.row(n, width) for n in range(1, table.max_n + 1)},
    }
    return json.dumps(payload, indent=2)


def format_table_bfile(table: TierTable) -> str:
    """OEIS b-file form: the triangle read by rows (t = 0..n-1 within row n),
    one `index value` pair per line, index starting at 1."""
    lines = []
    index = 1
    for n in range(1, table.max_n + 1):
        for t in range(n):
            lines.append(f"{index} {table.entry(n, t)}")
            index += 1
    return "\n".join(lines)


FORMATTERS = {
    "text": format_table_text,
    "csv": format_table_csv,
    "json": format_table_json,
    "bfile": format_table_bfile,
}


def catalan_number(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)
