from __future__ import annotations

import json

import pytest
from hypothesis import given, strategies as st

from schubcalc.permutations import (
    Permutation,
    all_permutations,
    bruhat_leq,
    format_permutation,
    inversions,
    length,
    parse_permutation,
    reduced_word,
    word_product,
)

from oracles import all_reduced_words, bruhat_all_words, bruhat_tableau_criterion, word_to_perm


def perm_st(max_n=6):
    return st.integers(1, max_n).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)


class TestBasics:
    def test_rejects_non_permutations(self):
        for bad in [(1, 1), (0, 1), (2, 3)]:
            with pytest.raises(ValueError):
                Permutation(bad)

    def test_constructors(self):
        assert Permutation.identity(3) == (1, 2, 3)
        assert Permutation.longest(4) == (4, 3, 2, 1)
        assert Permutation.simple(2, 4) == (1, 3, 2, 4)
        with pytest.raises(ValueError):
            Permutation.simple(4, 4)

    def test_composition_and_inverse(self):
        w = Permutation((2, 3, 1))
        assert w * w.inverse() == Permutation.identity(3)
        assert w(1) == 2
        assert (w * w) == Permutation((3, 1, 2))

    def test_embed_trim(self):
        w = Permutation((2, 1))
        assert w.embed(4) == (2, 1, 3, 4)
        assert w.embed(4).trimmed() == w
        with pytest.raises(ValueError):
            w.embed(1)

    def test_descents(self):
        assert Permutation((4, 5, 1, 3, 2)).descents() == [2, 4]

    def test_parse_format(self):
        assert parse_permutation("45132") == Permutation((4, 5, 1, 3, 2))
        assert parse_permutation("2,1,3") == Permutation((2, 1, 3))
        w = Permutation(list(range(10, 0, -1)))
        assert parse_permutation(format_permutation(w)) == w
        assert json.loads(w.to_json()) == list(w)
        with pytest.raises(ValueError):
            parse_permutation("12a")


class TestLength:
    def test_example(self):
        w = Permutation((4, 5, 1, 3, 2))
        assert inversions(w) == 7 == length(w)

    def test_word_from_text(self):
        assert word_product((2, 3, 2, 1, 4, 3, 2), 5) == Permutation((4, 5, 1, 3, 2))
        assert word_product((3, 2, 3), 5) == Permutation((1, 4, 3, 2, 5))

    def test_longest(self):
        for n in range(1, 7):
            assert length(Permutation.longest(n)) == n * (n - 1) // 2

    @pytest.mark.parametrize("n", range(1, 6))
    def test_reduced_words_exhaustive(self, n):
        for w in all_permutations(n):
            word = reduced_word(w)
            assert len(word) == length(w)
            assert word_product(word, n) == w
            assert word_to_perm(word, n) == w
            assert word in all_reduced_words(w)

    @given(perm_st())
    def test_length_is_shortest_word(self, w):
        words = all_reduced_words(w) if length(w) <= 8 else [reduced_word(w)]
        assert {len(x) for x in words} == {length(w)}

    @given(perm_st(), st.data())
    def test_simple_step_changes_length_by_one(self, w, data):
        if len(w) < 2:
            return
        i = data.draw(st.integers(1, len(w) - 1))
        v = w.right_simple(i)
        assert abs(length(v) - length(w)) == 1
        assert (length(v) < length(w)) == (i in w.descents())

    def test_w0_times_w(self):
        w0 = Permutation.longest(5)
        for w in all_permutations(5):
            assert length(w0 * w) == 10 - length(w)


class TestBruhat:
    def test_example(self):
        assert bruhat_leq(Permutation((1, 4, 3, 2, 5)), Permutation((4, 5, 1, 3, 2)))
        assert not bruhat_leq(Permutation((4, 5, 1, 3, 2)), Permutation((1, 4, 3, 2, 5)))

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            bruhat_leq(Permutation((1, 2)), Permutation((1, 2, 3)))

    @pytest.mark.parametrize("n", [3, 4])
    def test_against_all_words_oracle(self, n):
        perms = list(all_permutations(n))
        for v in perms:
            for w in perms:
                assert bruhat_leq(v, w) == bruhat_all_words(v, w) == bruhat_tableau_criterion(v, w)

    def test_partial_order_on_s4(self):
        perms = list(all_permutations(4))
        le = {(v, w): bruhat_leq(v, w) for v in perms for w in perms}
        for v in perms:
            assert le[(v, v)]
            assert le[(Permutation.identity(4), v)] and le[(v, Permutation.longest(4))]
            for w in perms:
                if v != w and le[(v, w)]:
                    assert not le[(w, v)]
                    assert length(v) < length(w)
                for u in perms:
                    if le[(u, v)] and le[(v, w)]:
                        assert le[(u, w)]

    def test_s5_matches_tableau_criterion(self):
        perms = list(all_permutations(5))
        for v in perms[::3]:
            for w in perms[::2]:
                assert bruhat_leq(v, w) == bruhat_tableau_criterion(v, w)
