import pytest
from hypothesis import given
from hypothesis import strategies as st

from bdstirling.errors import (
    MirrorViolation,
    NotAPartition,
    RepeatedValueInBlock,
    SingletonZeroBlock,
)
from bdstirling.partitions import (
    BPartition,
    DPartition,
    GPartition,
    classical_set_partitions,
    colored_literal_row,
    enumerate_partitions,
    flag_stirling_row,
    stirling,
    stirling_row,
    stirling_row_by_recurrence,
)

from . import oracles

TABLE_B = [
    (1,),
    (1, 1),
    (1, 4, 1),
    (1, 13, 9, 1),
    (1, 40, 58, 16, 1),
    (1, 121, 330, 170, 25, 1),
    (1, 364, 1771, 1520, 395, 36, 1),
]
TABLE_D = [
    (1,),
    (0, 1),
    (1, 2, 1),
    (1, 7, 6, 1),
    (1, 24, 34, 12, 1),
    (1, 81, 190, 110, 20, 1),
    (1, 268, 1051, 920, 275, 30, 1),
]


class TestStirlingRows:
    @pytest.mark.parametrize("n", range(7))
    def test_signed_triangle(self, n):
        assert stirling_row("B", n) == TABLE_B[n]

    @pytest.mark.parametrize("n", range(7))
    def test_even_signed_triangle(self, n):
        assert stirling_row("D", n) == TABLE_D[n]

    @pytest.mark.parametrize("kind", ["A", "B", "D", "G"])
    @pytest.mark.parametrize("n", range(9))
    def test_recurrence_agrees_with_binomial_form(self, kind, n):
        for m in ((2,) if kind in ("A", "B", "D") else (1, 2, 3, 4)):
            assert stirling_row_by_recurrence(kind, n, m) == stirling_row(kind, n, m)

    def test_classical_matches_oracle(self):
        for n in range(8):
            row = stirling_row("A", n)
            assert row == tuple(oracles.classical_stirling(n, r) for r in range(n + 1))

    @given(st.integers(0, 8), st.integers(1, 5))
    def test_colored_rows_match_binomial_oracle(self, n, m):
        row = stirling_row("G", n, m)
        assert row == tuple(oracles.signed_stirling(n, r, m) for r in range(n + 1))

    @given(st.integers(0, 8))
    def test_even_signed_rows_match_binomial_oracle(self, n):
        row = stirling_row("D", n)
        expect = tuple(oracles.signed_stirling(n, r, 2, skip_single=True) for r in range(n + 1))
        assert row == expect

    def test_two_colors_coincide_with_signed(self):
        for n in range(9):
            assert stirling_row("G", n, 2) == stirling_row("B", n)

    def test_difference_between_signed_triangles(self):
        # the two triangles differ by n * W_2(n-1, r)
        for n in range(1, 7):
            for r in range(n + 1):
                gap = TABLE_B[n][r] - TABLE_D[n][r]
                assert gap == n * oracles.weighted_layer(n - 1, 2, r)

    def test_flag_row_shape(self):
        assert flag_stirling_row(0) == (1,)
        assert flag_stirling_row(1) == (0, 1, 1)
        assert flag_stirling_row(2) == (0, 1, 2, 2, 1)

    def test_flag_row_splits_by_parity(self):
        for n in range(1, 6):
            row = flag_stirling_row(n)
            assert len(row) == 2 * n + 1
            for p in range(n + 1):
                assert row[2 * p] == oracles.weighted_layer(n, 2, p)
            for p in range(n):
                odd = sum(
                    oracles.classical_stirling(n - j, p) * 2 ** (n - j - p) * _comb(n, j)
                    for j in range(1, n - p + 1)
                )
                assert row[2 * p + 1] == odd

    def test_flag_row_total_counts_all_signed_partitions(self):
        # every signed partition lands at exactly one flag index
        for n in range(6):
            assert sum(flag_stirling_row(n)) == sum(stirling_row("B", n))


def _comb(n, j):
    from math import comb

    return comb(n, j)


class TestPartitionObjects:
    def test_canonical_representatives(self):
        p = BPartition(3, frozenset({2}), (frozenset({-1, 3}),))
        assert p.pair_reps == (frozenset({1, -3}),)
        assert p.zero_block() == frozenset({2, 0, -2})
        assert p.r == 1

    def test_rep_order_is_by_smallest_value(self):
        p = BPartition(3, frozenset(), (frozenset({3}), frozenset({1, 2})))
        assert p.pair_reps == (frozenset({1, 2}), frozenset({3}))

    def test_coverage_checked(self):
        with pytest.raises(NotAPartition):
            BPartition(3, frozenset({1}), (frozenset({2}),))
        with pytest.raises(NotAPartition):
            BPartition(2, frozenset({1}), (frozenset({1}),))

    def test_repeated_absolute_value_rejected(self):
        with pytest.raises(RepeatedValueInBlock):
            BPartition(2, frozenset(), (frozenset({1, -1}), frozenset({2}),))

    def test_from_blocks_round_trip(self):
        p = BPartition.from_blocks(3, [{2, 0, -2}, {1, -3}, {-1, 3}])
        assert p == BPartition(3, frozenset({2}), (frozenset({1, -3}),))
        assert sorted(map(sorted, p.blocks())) == [[-3, 1], [-2, 0, 2], [-1, 3]]

    def test_from_blocks_ground_set_includes_zero(self):
        # 0 always belongs to some block, alone when the support is empty
        p = BPartition.from_blocks(1, [{0}, {1}, {-1}])
        assert p.zero_support == frozenset()
        with pytest.raises(NotAPartition):
            BPartition.from_blocks(1, [{1}, {-1}])

    def test_from_blocks_requires_mirror_closure(self):
        with pytest.raises(MirrorViolation):
            BPartition.from_blocks(2, [{0}, {1, 2}, {-1}, {-2}])
        with pytest.raises(MirrorViolation):
            BPartition.from_blocks(2, [{0, 1, -1}, {2, -2}])

    def test_even_signed_rejects_single_zero_value(self):
        with pytest.raises(SingletonZeroBlock):
            DPartition(2, frozenset({1}), (frozenset({2}),))
        DPartition(2, frozenset({1, 2}), ())
        DPartition(2, frozenset(), (frozenset({1}), frozenset({2})))

    def test_text_rendering(self):
        p = BPartition(3, frozenset({2}), (frozenset({1, -3}),))
        assert p.text() == "{-2,0,2} {-3,1} {-1,3}"
        assert BPartition(1, frozenset({1}), ()).text() == "{-1,0,1}"

    def test_colored_partition_anchoring(self):
        p = GPartition(2, 3, frozenset(), (frozenset({(1, 1), (2, 2)}),))
        # anchor shifts the minimum value to color 0
        assert p.orbit_reps == (frozenset({(1, 0), (2, 1)}),)
        assert p.r == 1

    def test_colored_partition_value_injectivity(self):
        with pytest.raises(RepeatedValueInBlock):
            GPartition(1, 4, frozenset(), (frozenset({(1, 0), (1, 2)}),))

    def test_colored_zero_fiber(self):
        p = GPartition(2, 3, frozenset({2}), (frozenset({(1, 0)}),))
        assert p.zero_fiber() == frozenset({(2, 0), (2, 1), (2, 2)})

    def test_colored_orbit_blocks(self):
        p = GPartition(2, 3, frozenset(), (frozenset({(1, 0), (2, 1)}),))
        orbit = p.orbit_blocks(p.orbit_reps[0])
        assert len(orbit) == 3
        assert frozenset({(1, 2), (2, 0)}) in orbit

    def test_colored_text(self):
        p = GPartition(2, 3, frozenset({2}), (frozenset({(1, 0)}),))
        assert p.text() == "{0,2^0,2^1,2^2} {1^0}"


class TestEnumeration:
    @pytest.mark.parametrize("kind", ["B", "D"])
    @pytest.mark.parametrize("n", range(5))
    def test_signed_counts_match_rows(self, kind, n):
        row = stirling_row(kind, n)
        for r in range(n + 1):
            parts = enumerate_partitions(kind, n, r)
            assert len(parts) == row[r]
            assert len(set(parts)) == len(parts)

    @pytest.mark.parametrize("kind", ["B", "D"])
    @pytest.mark.parametrize("n", range(1, 5))
    def test_signed_enumeration_matches_raw_filter(self, kind, n):
        for r in range(n + 1):
            assert len(enumerate_partitions(kind, n, r)) == oracles.mirror_partition_count(
                n, r, kind
            )

    @pytest.mark.parametrize("n,m", [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (3, 3), (1, 4), (2, 4)])
    def test_colored_counts_match_rows(self, n, m):
        row = stirling_row("G", n, m)
        for r in range(n + 1):
            parts = enumerate_partitions("G", n, r, m)
            assert len(parts) == row[r]

    @pytest.mark.parametrize("n,m", [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (2, 4)])
    def test_colored_enumeration_matches_raw_filter(self, n, m):
        for r in range(n + 1):
            assert len(enumerate_partitions("G", n, r, m)) == oracles.colored_partition_count(
                n, m, r
            )

    def test_all_ranks_when_r_omitted(self):
        parts = enumerate_partitions("B", 3)
        assert len(parts) == sum(stirling_row("B", 3))
        keys = [p.sort_key() for p in parts]
        assert keys == sorted(keys)

    def test_round_trip_through_blocks(self):
        for p in enumerate_partitions("B", 4):
            assert BPartition.from_blocks(4, p.blocks()) == p
        for p in enumerate_partitions("D", 4):
            assert DPartition.from_blocks(4, p.blocks()) == p

    def test_classical_set_partitions_counts(self):
        for n in range(7):
            parts = list(classical_set_partitions(range(1, n + 1)))
            assert len(parts) == sum(stirling_row("A", n))


class TestLiteralColoredRule:
    def test_prime_color_counts_coincide_with_strict(self):
        for n in (1, 2):
            for m in (2, 3, 5):
                assert colored_literal_row(n, m) == stirling_row("G", n, m)

    def test_composite_color_count_differs(self):
        # a block family invariant under a proper shift power is literal
        # but not strict, so four colors admit one extra singleton family
        assert colored_literal_row(1, 4) == (1, 2)
        assert stirling_row("G", 1, 4) == (1, 1)

    def test_composite_color_count_n2(self):
        literal = colored_literal_row(2, 4)
        strict = stirling_row("G", 2, 4)
        assert literal[0] == strict[0] == 1
        assert all(a >= b for a, b in zip(literal, strict))
        assert literal != strict
