import itertools

import pytest

from stacktier.perm import (
    contains_pattern,
    delete_entry,
    direct_sum,
    format_permutation,
    maximal_intervals,
    minus_combine,
    minus_decompose,
    parse_permutation,
    plus_combine,
    plus_decompose,
    separated_pair_count,
    separated_pairs,
    skew_sum,
    standardize,
)


class TestParse:
    def test_compact(self):
        assert parse_permutation("356124") == (3, 5, 6, 1, 2, 4)

    def test_spaced(self):
        assert parse_permutation("8 12 7 14 6 11 5 15 4 10 3 13 2 9 1") == (
            8, 12, 7, 14, 6, 11, 5, 15, 4, 10, 3, 13, 2, 9, 1,
        )

    def test_comma_separated(self):
        assert parse_permutation("3,1,2") == (3, 1, 2)

    def test_singleton_and_empty(self):
        assert parse_permutation("1") == (1,)
        assert parse_permutation("") == ()
        assert parse_permutation("   ") == ()

    def test_duplicate_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            parse_permutation("1 2 2")

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError, match="out of range"):
            parse_permutation("1 3")
        with pytest.raises(ValueError, match="out of range"):
            parse_permutation("105")  # compact form digit 0

    def test_empty_token_rejected(self):
        with pytest.raises(ValueError):
            parse_permutation("1,,2")

    def test_junk_rejected(self):
        with pytest.raises(ValueError):
            parse_permutation("1 a 2")

    def test_format_roundtrip(self):
        for p in itertools.permutations(range(1, 6)):
            assert parse_permutation(format_permutation(p)) == p


class TestContainment:
    def test_paper_231_example(self):
        assert contains_pattern((4, 1, 2, 7, 3, 5, 6), (2, 3, 1))

    def test_paper_321_example(self):
        assert not contains_pattern((4, 1, 2, 7, 3, 5, 6), (3, 2, 1))

    def test_self_containment(self):
        for n in range(7):
            for p in itertools.permutations(range(1, n + 1)):
                assert contains_pattern(p, p)

    def test_empty_pattern(self):
        assert contains_pattern((2, 1), ())
        assert contains_pattern((), ())

    def test_longer_pattern_never_contained(self):
        assert not contains_pattern((1, 2), (1, 2, 3))

    def test_transitive(self):
        for la, lb, lc in [(2, 3, 4), (3, 4, 5), (4, 5, 6)]:
            mids = list(itertools.permutations(range(1, lb + 1)))
            bigs = list(itertools.permutations(range(1, lc + 1)))
            for small in itertools.permutations(range(1, la + 1)):
                in_mid = [m for m in mids if contains_pattern(m, small)]
                for big in bigs:
                    if any(contains_pattern(big, m) for m in in_mid):
                        assert contains_pattern(big, small)


class TestSeparatedPairs:
    def test_single_pair_example(self):
        pairs = separated_pairs((5, 4, 1, 2, 7, 3, 6))
        assert [(sp.large, sp.small) for sp in pairs] == [(4, 3)]

    def test_four_pair_example(self):
        pairs = separated_pairs((4, 6, 3, 7, 2, 5, 1))
        assert [(sp.large, sp.small) for sp in pairs] == [(2, 1), (3, 2), (4, 3), (6, 5)]

    def test_identity_has_none(self):
        assert separated_pairs((1, 2, 3, 4, 5, 6)) == []

    def test_two_pair_example(self):
        pairs = separated_pairs((3, 5, 6, 1, 2, 4))
        assert [(sp.large, sp.small) for sp in pairs] == [(3, 2), (5, 4)]

    def test_empty(self):
        assert separated_pairs(()) == []
        assert separated_pair_count(()) == 0

    def test_witness_invariants(self):
        # leftmost separator, positioned strictly between the pair, larger value
        for n in range(1, 8):
            for p in itertools.permutations(range(1, n + 1)):
                pos = {v: i + 1 for i, v in enumerate(p)}
                for sp in separated_pairs(p):
                    assert sp.large == sp.small + 1
                    assert pos[sp.large] < sp.witness_position < pos[sp.small]
                    assert p[sp.witness_position - 1] > sp.large
                    between = p[pos[sp.large] : sp.witness_position - 1]
                    assert all(v < sp.large for v in between)

    def test_count_matches_list(self):
        for n in range(8):
            for p in itertools.permutations(range(1, n + 1)):
                assert separated_pair_count(p) == len(separated_pairs(p))

    def test_nonempty_iff_contains_231(self):
        for n in range(1, 9):
            for p in itertools.permutations(range(1, n + 1)):
                has_pair = separated_pair_count(p) > 0
                assert has_pair == contains_pattern(p, (2, 3, 1))

    def test_deletion_monotone(self):
        # a contained permutation never has more separated pairs
        for n in range(2, 9):
            for p in itertools.permutations(range(1, n + 1)):
                count = separated_pair_count(p)
                for d in range(1, n + 1):
                    assert separated_pair_count(delete_entry(p, d)) <= count


def _brute_interval_blocks(p):
    # independent oracle: union positions covered by any proper interval window
    n = len(p)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(n):
        for b in range(a, n):
            if (a, b) == (0, n - 1):
                continue
            window = p[a : b + 1]
            if max(window) - min(window) == b - a:
                for j in range(a, b):
                    parent[find(j + 1)] = find(j)
    blocks = []
    start = 0
    for j in range(1, n):
        if find(j) != find(start):
            blocks.append((start + 1, j - start))
            start = j
    if n:
        blocks.append((start + 1, n - start))
    return blocks


class TestIntervals:
    def test_paper_example(self):
        assert maximal_intervals((6, 8, 5, 7, 1, 2, 9, 4, 3)) == [
            (1, 4), (5, 2), (7, 1), (8, 2),
        ]

    def test_identity_is_one_block(self):
        assert maximal_intervals((1, 2, 3)) == [(1, 3)]

    def test_simple_permutation_is_singletons(self):
        assert maximal_intervals((2, 4, 1, 3)) == [(1, 1), (2, 1), (3, 1), (4, 1)]

    def test_empty(self):
        assert maximal_intervals(()) == []

    def test_against_brute_oracle(self):
        for n in range(1, 8):
            for p in itertools.permutations(range(1, n + 1)):
                assert maximal_intervals(p) == _brute_interval_blocks(p)

    def test_blocks_are_intervals(self):
        for p in itertools.permutations(range(1, 7)):
            for start, length in maximal_intervals(p):
                window = p[start - 1 : start - 1 + length]
                assert max(window) - min(window) == length - 1


class TestDecompositions:
    def test_plus_example(self):
        d = plus_decompose((4, 3, 1, 2, 6, 7, 5, 8))
        assert d.kind == "plus"
        assert d.components == ((4, 3, 1, 2), (2, 3, 1), (1,))

    def test_plus_indecomposable(self):
        assert plus_decompose((6, 8, 5, 7, 1, 2, 9, 4, 3)).components == (
            (6, 8, 5, 7, 1, 2, 9, 4, 3),
        )

    def test_plus_identity(self):
        assert plus_decompose((1, 2)).components == ((1,), (1,))

    def test_minus_example(self):
        d = minus_decompose((6, 7, 5, 8, 4, 3, 1, 2))
        assert d.kind == "minus"
        assert d.components == ((2, 3, 1, 4), (1,), (1,), (1, 2))

    def test_minus_reverse_identity(self):
        assert minus_decompose((2, 1)).components == ((1,), (1,))

    def test_minus_increasing_indecomposable(self):
        assert minus_decompose((1, 2, 3)).components == ((1, 2, 3),)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            plus_decompose(())
        with pytest.raises(ValueError):
            minus_decompose(())

    def test_recombination_identity(self):
        for n in range(1, 8):
            for p in itertools.permutations(range(1, n + 1)):
                assert plus_combine(plus_decompose(p).components) == p
                assert minus_combine(minus_decompose(p).components) == p

    def test_components_indecomposable(self):
        for p in itertools.permutations(range(1, 7)):
            for c in plus_decompose(p).components:
                assert len(plus_decompose(c).components) == 1
            for c in minus_decompose(p).components:
                assert len(minus_decompose(c).components) == 1

    def test_sum_builders(self):
        assert direct_sum((2, 1), (1, 2)) == (2, 1, 3, 4)
        assert skew_sum((2, 1), (1, 2)) == (4, 3, 1, 2)
        assert skew_sum((2, 3, 1), (2, 3, 1)) == (5, 6, 4, 2, 3, 1)


class TestHelpers:
    def test_standardize(self):
        assert standardize((6, 7, 5, 8)) == (2, 3, 1, 4)
        assert standardize(()) == ()

    def test_delete_entry(self):
        assert delete_entry((3, 5, 2, 4, 1), 2) == (3, 2, 4, 1)
        with pytest.raises(ValueError):
            delete_entry((1,), 2)
