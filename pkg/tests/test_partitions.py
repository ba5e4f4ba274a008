from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from schubcalc.fq.linalg import cell_pattern
from schubcalc.partitions import (
    AmbientRectangle,
    Partition,
    ShiftedPartition,
    SkewShape,
    cell_dimension,
    complement,
    count_syt_hook_formula,
    double,
    fits_in,
    format_partition,
    hook_length,
    is_staircase_symmetric,
    parse_partition,
    parse_shifted,
    partitions_in,
    partitions_of,
    shifted_partitions_in_triangle,
    staircase,
)

from oracles import brute_syt_count


def boxes(max_rows=4, max_cols=4):
    return [AmbientRectangle(r, c) for r in range(1, max_rows + 1) for c in range(1, max_cols + 1)]


class TestPartition:
    def test_strips_trailing_zeros(self):
        assert Partition((3, 1, 0, 0)) == Partition((3, 1))
        assert Partition((0,)) == Partition()

    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            Partition((2, -1))

    def test_size_length_parts(self):
        lam = Partition((4, 2, 1))
        assert lam.size() == 7
        assert lam.length() == 3
        assert lam.part(1) == 4 and lam.part(4) == 0

    def test_conjugate(self):
        assert Partition((4, 2, 1)).conjugate() == Partition((3, 2, 1, 1))
        assert Partition().conjugate() == Partition()

    def test_shifted_must_be_strict(self):
        with pytest.raises(ValueError):
            ShiftedPartition((2, 2))

    def test_skew_needs_containment(self):
        with pytest.raises(ValueError):
            SkewShape.of((2,), (3,))


class TestParsing:
    def test_round_trip(self):
        assert parse_partition("4,2,1") == Partition((4, 2, 1))
        assert format_partition(Partition((4, 2, 1))) == "4,2,1"

    @pytest.mark.parametrize("text", ["", "-", " "])
    def test_empty(self, text):
        assert parse_partition(text) == Partition()

    def test_shifted_prefix(self):
        assert parse_shifted("s:3,1") == ShiftedPartition((3, 1))
        assert parse_shifted("3,1") == ShiftedPartition((3, 1))

    @pytest.mark.parametrize("bad", ["1,2", "a", "3,,1", "s:2,2"])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_shifted(bad) if bad.startswith("s:") else parse_partition(bad)


class TestFitsIn:
    def test_examples(self):
        B = AmbientRectangle(3, 4)
        assert fits_in(Partition((4, 2, 1)), B)
        assert fits_in(Partition(), B)
        assert not fits_in(Partition((5, 1)), B)

    def test_too_many_rows(self):
        assert not fits_in(Partition((1, 1, 1, 1)), AmbientRectangle(3, 4))


class TestComplement:
    def test_examples(self):
        assert complement(Partition((4, 2, 1)), AmbientRectangle(3, 4)) == Partition((3, 2))
        B = AmbientRectangle(2, 3)
        assert complement(Partition(), B) == Partition((3, 3))
        assert complement(Partition((3, 3)), B) == Partition()

    def test_rejects_non_fitting(self):
        with pytest.raises(ValueError):
            complement(Partition((5,)), AmbientRectangle(3, 4))

    @pytest.mark.parametrize("B", boxes())
    def test_involution_exhaustive(self, B):
        for lam in partitions_in(B):
            mu = complement(lam, B)
            assert fits_in(mu, B)
            assert complement(mu, B) == lam
            assert lam.size() + mu.size() == B.area()


class TestHooks:
    def test_examples(self):
        assert hook_length(Partition((2, 2)), 1, 1) == 3
        assert hook_length(Partition((1,)), 1, 1) == 1
        assert hook_length(Partition((3, 2)), 1, 1) == 4

    def test_outside_cell(self):
        with pytest.raises(ValueError):
            hook_length(Partition((2, 1)), 2, 2)

    def test_hook_formula_examples(self):
        assert count_syt_hook_formula(Partition((2, 2))) == 2
        assert count_syt_hook_formula(Partition((7,))) == 1
        assert count_syt_hook_formula(Partition((3, 2))) == brute_syt_count((3, 2)) == 5

    @pytest.mark.parametrize("n", range(1, 7))
    def test_hook_formula_vs_brute_force(self, n):
        for lam in partitions_of(n):
            assert count_syt_hook_formula(lam) == brute_syt_count(lam)

    def test_big_numbers_exact(self):
        # 12! / (hooks of the 3x4 rectangle)
        assert count_syt_hook_formula(Partition((4, 4, 4))) == 462


class TestDouble:
    def test_paper_example(self):
        assert double(ShiftedPartition((3, 1)), 4) == Partition((4, 3, 1))

    def test_empty_and_full(self):
        assert double(ShiftedPartition(), 3) == Partition()
        assert double(staircase(3), 3) == Partition((4, 4, 4))

    def test_small(self):
        assert double(ShiftedPartition((1,)), 2) == Partition((2,))
        assert double(ShiftedPartition((2,)), 2) == Partition((3, 1))

    def test_rejects_outside_triangle(self):
        with pytest.raises(ValueError):
            double(ShiftedPartition((4,)), 3)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_reflection_invariants(self, n):
        images = {}
        for lam in shifted_partitions_in_triangle(n):
            bar = double(lam, n)
            assert fits_in(bar, AmbientRectangle(n, n + 1))
            assert bar.size() == 2 * lam.size()
            ok, mu = is_staircase_symmetric(bar, n)
            assert ok and mu == lam
            images[bar] = lam
        assert len(images) == len(shifted_partitions_in_triangle(n))

    def test_symmetry_examples(self):
        assert is_staircase_symmetric(Partition((4, 3, 1)), 4) == (True, ShiftedPartition((3, 1)))
        assert is_staircase_symmetric(Partition(), 3) == (True, ShiftedPartition())
        assert is_staircase_symmetric(Partition((1,)), 2) == (False, None)
        assert is_staircase_symmetric(Partition((3,)), 2) == (False, None)

    def test_two_is_a_double_for_n2(self):
        # (2) is the image of the single-cell shifted shape
        assert is_staircase_symmetric(Partition((2,)), 2) == (True, ShiftedPartition((1,)))

    @pytest.mark.parametrize("n", range(1, 4))
    def test_symmetric_iff_in_image(self, n):
        image = {double(mu, n) for mu in shifted_partitions_in_triangle(n)}
        for lam in partitions_in(AmbientRectangle(n, n + 1)):
            assert is_staircase_symmetric(lam, n)[0] == (lam in image)


class TestCellDimension:
    def test_examples(self):
        B = AmbientRectangle(3, 4)
        assert cell_dimension(Partition(), B) == 12
        assert cell_dimension(B.full(), B) == 0
        assert cell_dimension(Partition((4, 2, 1)), B) == 5

    @pytest.mark.parametrize("B", boxes(3, 3))
    def test_matches_star_count(self, B):
        k, n = B.rows, B.rows + B.cols
        for lam in partitions_in(B):
            _, stars, _ = cell_pattern(lam, k, n)
            assert cell_dimension(lam, B) == len(stars)


@given(st.lists(st.integers(0, 6), max_size=5))
def test_partition_from_any_sorted_list(xs):
    lam = Partition(sorted(xs, reverse=True))
    assert lam.size() == sum(xs)
    assert all(p > 0 for p in lam)
    assert parse_partition(format_partition(lam)) == lam
    assert lam.conjugate().conjugate() == lam


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_fits_iff_complement_fits(r, c, data):
    B = AmbientRectangle(r, c)
    lam = data.draw(st.sampled_from(partitions_in(B)))
    assert fits_in(complement(lam, B), B)
