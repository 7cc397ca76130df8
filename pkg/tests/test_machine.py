import itertools

from stacktier.machine import (
    render_trace,
    run_single_pass,
    sort_with_trace,
    tier_by_simulation,
)
from stacktier.perm import separated_pair_count


class TestSinglePass:
    def test_first_pass_of_356124(self):
        assert run_single_pass((3, 5, 6, 1, 2, 4), 1) == ((1, 2), (3, 5, 6, 4))

    def test_second_pass(self):
        assert run_single_pass((3, 5, 6, 4), 3) == ((3, 4), (5, 6))

    def test_identity_clears_in_one_pass(self):
        assert run_single_pass((1, 2, 3), 1) == ((1, 2, 3), ())

    def test_leftover_preserves_relative_order(self):
        for p in itertools.permutations(range(1, 7)):
            popped, leftover = run_single_pass(p, 1)
            kept = [v for v in p if v not in popped]
            assert list(leftover) == kept


class TestSortWithTrace:
    def test_356124_needs_three_passes(self):
        trace = sort_with_trace((3, 5, 6, 1, 2, 4))
        assert trace.total_passes == 3
        assert [one.popped for one in trace.passes] == [(1, 2), (3, 4), (5, 6)]

    def test_231_two_passes(self):
        trace = sort_with_trace((2, 3, 1))
        assert trace.total_passes == 2
        assert trace.passes[0].popped == (1,)
        assert trace.passes[0].leftover == (2, 3)
        assert trace.passes[1].popped == (2, 3)

    def test_identity_one_pass(self):
        assert sort_with_trace((1, 2, 3, 4, 5)).total_passes == 1

    def test_empty_zero_passes(self):
        trace = sort_with_trace(())
        assert trace.total_passes == 0
        assert trace.tier == 0

    def test_output_is_identity_sequence(self):
        for n in range(8):
            for p in itertools.permutations(range(1, n + 1)):
                trace = sort_with_trace(p)
                out = [v for one in trace.passes for v in one.popped]
                assert out == list(range(1, n + 1))

    def test_every_pass_pops_something(self):
        for p in itertools.permutations(range(1, 8)):
            for one in sort_with_trace(p).passes:
                assert one.popped

    def test_leftover_is_subsequence_of_pass_input(self):
        for p in itertools.permutations(range(1, 7)):
            current = p
            for one in sort_with_trace(p).passes:
                it = iter(current)
                assert all(v in it for v in one.leftover)
                current = one.leftover

    def test_pushes_follow_input_order(self):
        for p in itertools.permutations(range(1, 6)):
            current = p
            for one in sort_with_trace(p).passes:
                pushes = [v for kind, v in one.events if kind == "push"]
                assert pushes == list(current)
                current = one.leftover


class TestTierBySimulation:
    def test_examples(self):
        assert tier_by_simulation((2, 3, 1)) == 1
        assert tier_by_simulation((3, 5, 6, 1, 2, 4)) == 2
        assert tier_by_simulation((4, 6, 3, 7, 2, 5, 1)) == 4
        assert tier_by_simulation(()) == 0

    def test_matches_pair_count_exhaustively(self):
        for n in range(1, 8):
            for p in itertools.permutations(range(1, n + 1)):
                assert tier_by_simulation(p) == separated_pair_count(p)


GOLDEN_TRACE_356124 = """\
-- pass 1 --
push 3
push 5
push 6
push 1
pop 1
push 2
pop 2
push 4
-- pass 2 --
push 3
pop 3
push 5
push 6
push 4
pop 4
-- pass 3 --
push 5
pop 5
push 6
pop 6
tier 2"""


class TestRendering:
    def test_golden_trace(self):
        assert render_trace(sort_with_trace((3, 5, 6, 1, 2, 4))) == GOLDEN_TRACE_356124

    def test_empty_trace(self):
        assert render_trace(sort_with_trace(())) == "tier 0"
