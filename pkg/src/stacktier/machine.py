"""
The sorting device: one stack, popping only the next value the sorted
output needs, restarted on the stack's leftover until nothing remains.

A *pass* reads the current input left to right, pushing entries and
greedily popping whenever the stack's top is the next needed value.
Entries still on the stack when the input runs dry become the next
pass's input, read bottom-to-top (which preserves their original
relative order).  The tier of a permutation is one less than the number
of passes required.
"""
from __future__ import annotations

import dataclasses
from typing import Sequence

from .perm import Permutation

Event = tuple[str, int]  # ("push"|"pop", value)


@dataclasses.dataclass(frozen=True)
class Pass:
    """One pass through the stack: its event log and what it left behind."""

    events: tuple[Event, ...]
    popped: tuple[int, ...]
    leftover: tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class SortTrace:
    """Full record of sorting a permutation: every push/pop of every pass."""

    input: Permutation
    passes: tuple[Pass, ...]

    @property
    def total_passes(self) -> int:
        return len(self.passes)

    @property
    def tier(self) -> int:
        return max(len(self.passes) - 1, 0)


def _one_pass(values: Sequence[int], next_needed: int) -> Pass:
    events: list[Event] = []
    popped: list[int] = []
    stack: list[int] = []
    need = next_needed
    for v in values:
        stack.append(v)
        events.append(("push", v))
        while stack and stack[-1] == need:
            events.append(("pop", need))
            popped.append(need)
            stack.pop()
            need += 1
    return Pass(events=tuple(events), popped=tuple(popped), leftover=tuple(stack))


def run_single_pass(
    values: Sequence[int], next_needed: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Run one pass; return (popped values, leftover bottom-to-top).

    >>> run_single_pass((3, 5, 6, 1, 2, 4), 1)
    ((1, 2), (3, 5, 6, 4))
    """
    p = _one_pass(values, next_needed)
    return p.popped, p.leftover


def sort_with_trace(p: Sequence[int]) -> SortTrace:
    """Sort p with as many passes as it takes, recording every event.

    The empty permutation sorts in zero passes.
    """
    current = tuple(p)
    need = 1
    passes = []
    while current:
        one = _one_pass(current, need)
        passes.append(one)
        need += len(one.popped)
        current = one.leftover
    return SortTrace(input=tuple(p), passes=tuple(passes))


def tier_by_simulation(p: Sequence[int]) -> int:
    """Tier measured by actually running the machine (passes minus one)."""
    return sort_with_trace(p).tier


def render_trace(trace: SortTrace) -> str:
    """Fixed text form of a trace: pass separators, one line per event,
    and a final tier line.  Covered by golden tests; do not reformat."""
    lines = []
    for k, one in enumerate(trace.passes, start=1):
        lines.append(f"-- pass {k} --")
        for kind, v in one.events:
            lines.append(f"{kind} {v}")
    lines.append(f"tier {trace.tier}")
    return "\n".join(lines)
