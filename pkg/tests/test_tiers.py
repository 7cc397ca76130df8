import itertools

import pytest

from stacktier.machine import tier_by_simulation
from stacktier.perm import direct_sum, minus_combine, skew_sum
from stacktier.tiers import (
    max_tier,
    max_tier_floor_sum,
    max_tier_recursive,
    max_tier_witness,
    tier,
    tier_of_minus_chain,
)

WITNESS_15 = (8, 12, 7, 14, 6, 11, 5, 15, 4, 10, 3, 13, 2, 9, 1)


class TestTier:
    def test_examples(self):
        assert tier((2, 3, 1)) == 1
        assert tier((5, 7, 4, 8, 3, 6, 2, 9, 1)) == 5
        assert tier((1,)) == 0
        assert tier(()) == 0

    def test_matches_simulation(self):
        for n in range(1, 8):
            for p in itertools.permutations(range(1, n + 1)):
                assert tier(p) == tier_by_simulation(p)


class TestMaxTier:
    def test_small_values(self):
        assert [max_tier(n) for n in range(1, 11)] == [0, 0, 1, 1, 2, 3, 4, 4, 5, 6]

    def test_named_values(self):
        assert max_tier(7) == 4
        assert max_tier(8) == 4
        assert max_tier(10) == 6
        assert max_tier(15) == 11

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            max_tier(0)
        with pytest.raises(ValueError):
            max_tier_recursive(0)
        with pytest.raises(ValueError):
            max_tier_floor_sum(-1)

    def test_recursive_examples(self):
        assert max_tier_recursive(9) == 5
        assert max_tier_recursive(2) == 0
        assert max_tier_recursive(16) == 11

    def test_three_forms_agree(self):
        for n in range(1, 5000):
            assert max_tier_recursive(n) == max_tier(n) == max_tier_floor_sum(n)

    def test_grows_by_at_most_one(self):
        for n in range(1, 64):
            assert max_tier(n + 1) <= max_tier(n) + 1

    def test_packing_lower_bound(self):
        for n in range(1, 65):
            assert max_tier(n) >= (n - 1) // 2


class TestWitness:
    def test_paper_witnesses(self):
        assert max_tier_witness(7) == (4, 6, 3, 7, 2, 5, 1)
        assert max_tier_witness(9) == (5, 7, 4, 8, 3, 6, 2, 9, 1)
        assert max_tier_witness(15) == WITNESS_15

    def test_base_cases(self):
        assert max_tier_witness(1) == (1,)
        assert max_tier_witness(2) == (1, 2)
        assert max_tier_witness(3) == (2, 3, 1)

    def test_achieves_max_tier_up_to_64(self):
        for n in range(1, 65):
            assert tier(max_tier_witness(n)) == max_tier(n)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            max_tier_witness(0)


class TestSumLaws:
    def test_direct_sum_adds_tiers(self):
        for a in range(1, 7):
            for b in range(1, 8 - a):
                for s in itertools.permutations(range(1, a + 1)):
                    ts = tier(s)
                    for t in itertools.permutations(range(1, b + 1)):
                        assert tier(direct_sum(s, t)) == ts + tier(t)

    def test_skew_sum_rule(self):
        # +1 unless the first block ends with its minimum
        for a in range(1, 7):
            for b in range(1, 8 - a):
                for s in itertools.permutations(range(1, a + 1)):
                    bump = 0 if s[-1] == 1 else 1
                    ts = tier(s)
                    for t in itertools.permutations(range(1, b + 1)):
                        assert tier(skew_sum(s, t)) == ts + tier(t) + bump


class TestMinusChain:
    def test_worked_chain(self):
        chain = [(2, 3, 1, 4), (1,), (1,), (1, 2)]
        assert tier_of_minus_chain(chain) == 2
        assert tier(minus_combine(chain)) == 2

    def test_singleton_chain(self):
        assert tier_of_minus_chain([(1,)]) == 0
        assert tier_of_minus_chain([(2, 3, 1)]) == 1

    def test_full_decomposition_of_564231(self):
        chain = [(1, 2), (1,), (1, 2), (1,)]
        assert minus_combine(chain) == (5, 6, 4, 2, 3, 1)
        assert tier_of_minus_chain(chain) == 2
        assert tier((5, 6, 4, 2, 3, 1)) == 2

    def test_decomposable_component_rejected(self):
        # 231 = 12 (-) 1, so it is not a legal block
        with pytest.raises(ValueError, match="not minus-indecomposable"):
            tier_of_minus_chain([(2, 3, 1), (2, 3, 1)])

    def test_empty_inputs_rejected(self):
        with pytest.raises(ValueError):
            tier_of_minus_chain([])
        with pytest.raises(ValueError):
            tier_of_minus_chain([(1,), ()])

    def test_exhaustive_small_chains(self):
        from stacktier.perm import minus_decompose

        blocks = [
            p
            for n in range(1, 5)
            for p in itertools.permutations(range(1, n + 1))
            if len(minus_decompose(p).components) == 1
        ]
        for chain in itertools.product(blocks, repeat=2):
            assert tier_of_minus_chain(list(chain)) == tier(minus_combine(chain))
        short = [b for b in blocks if len(b) <= 2]
        for chain in itertools.product(short, repeat=3):
            assert tier_of_minus_chain(list(chain)) == tier(minus_combine(chain))
