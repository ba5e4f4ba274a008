from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from schubcalc.errors import CapExceeded
from schubcalc.partitions import AmbientRectangle, Partition, SkewShape, count_syt_hook_formula, partitions_in, \
    partitions_of
from schubcalc.tableaux import (
    Tableau,
    content,
    enumerate_lr_chains,
    enumerate_lr_tableaux,
    enumerate_syt,
    is_semistandard,
    is_yamanouchi,
    iter_lr_chains,
    lr_tableau_count,
    reading_word,
)

from oracles import brute_lr_fillings, yamanouchi


def skew_example():
    # rows top to bottom; reading bottom-to-top gives 134 223 111
    return Tableau.of([(1, 1, 1), (2, 2, 3), (1, 3, 4)], outer=(6, 5, 3), inner=(3, 2))


class TestTableau:
    def test_reading_word_and_content(self):
        t = skew_example()
        assert is_semistandard(t)
        assert "".join(map(str, reading_word(t))) == "134223111"
        assert content(t) == (4, 2, 2, 1)

    def test_not_lr(self):
        assert not is_yamanouchi(reading_word(skew_example()))

    def test_bad_row_lengths(self):
        with pytest.raises(ValueError):
            Tableau.of([(1, 1)], outer=(3,), inner=())

    def test_non_semistandard(self):
        assert not is_semistandard(Tableau.of([(2, 1)]))
        assert not is_semistandard(Tableau.of([(1, 2), (1,)]))

    def test_json_round_trip(self):
        t = skew_example()
        assert Tableau.from_json(t.to_json()) == t

    def test_str_marks_inner_cells(self):
        assert str(Tableau.of([(1,)], outer=(3,), inner=(2,))) == ". . 1"

    def test_entry(self):
        t = skew_example()
        assert t.entry(1, 4) == 1 and t.entry(2, 5) == 3 and t.entry(3, 1) == 1


class TestYamanouchi:
    @pytest.mark.parametrize("word,expected", [
        ((2, 3, 1, 2, 1, 1), True),
        ((2,), False),
        ((), True),
        ((1, 2), False),
        ((2, 1), True),
        ((1, 1, 2, 2, 1), False),
    ])
    def test_examples(self, word, expected):
        assert is_yamanouchi(word) == expected

    @given(st.lists(st.integers(1, 4), max_size=9))
    def test_matches_suffix_definition(self, w):
        assert is_yamanouchi(w) == (not w or yamanouchi(w))


SMALL_TRIPLES = [
    (nu, lam, mu)
    for nu in [p for n in range(1, 7) for p in partitions_of(n)]
    for lam in partitions_in(AmbientRectangle(len(nu), nu[0]))
    if nu.contains(lam)
    for mu in partitions_of(nu.size() - lam.size())
    if nu.size() > lam.size()
]


class TestLRTableaux:
    @pytest.mark.parametrize("nu,lam,mu", SMALL_TRIPLES[::7])
    def test_against_brute_force(self, nu, lam, mu):
        got = [t.rows for t in enumerate_lr_tableaux(SkewShape(nu, lam), mu)]
        assert got == brute_lr_fillings(nu, lam, mu)
        assert lr_tableau_count(nu, lam, mu) == len(got)

    def test_every_output_is_lr(self):
        for t in enumerate_lr_tableaux(SkewShape.of((4, 3, 2), (2, 1)), (3, 2, 1)):
            assert is_semistandard(t)
            assert is_yamanouchi(reading_word(t))
            assert content(t) == (3, 2, 1)

    def test_straight_shape_is_unique(self):
        for lam in partitions_of(5):
            ts = enumerate_lr_tableaux(SkewShape(lam, Partition()), lam)
            assert len(ts) == 1
            assert all(set(row) == {i + 1} for i, row in enumerate(ts[0].rows))

    def test_size_mismatch(self):
        assert enumerate_lr_tableaux(SkewShape.of((2, 1)), (1,)) == []

    def test_cap(self):
        with pytest.raises(CapExceeded):
            enumerate_lr_tableaux(SkewShape.of((3, 2, 1), (2, 1)), (2, 1), cap=1)


class TestChains:
    def test_four_lines(self):
        ones = [Partition((1,))] * 4
        assert enumerate_lr_chains(ones, (2, 2)) == 2
        chains = list(iter_lr_chains(ones, (2, 2)))
        assert len(chains) == 2
        outers = [[tuple(t.shape.outer) for t in c] for c in chains]
        assert outers == [[(1,), (1, 1), (2, 1), (2, 2)], [(1,), (2,), (2, 1), (2, 2)]]

    def test_five_chains(self):
        contents = [(2, 1), (2, 1), (3, 1), (2,)]
        assert enumerate_lr_chains(contents, (4, 4, 4)) == 5
        chains = list(iter_lr_chains(contents, (4, 4, 4)))
        assert len(chains) == 5
        # frozen from the enumeration after each step was checked against brute_lr_fillings
        middle = [(tuple(c[1].shape.outer), c[1].rows) for c in chains]
        assert middle == [
            ((3, 2, 1), ((1,), (1,), (2,))),
            ((3, 2, 1), ((1,), (2,), (1,))),
            ((3, 3), ((1,), (1, 2))),
            ((4, 1, 1), ((1, 1), (), (2,))),
            ((4, 2), ((1, 1), (2,))),
        ]
        for c in chains:
            inner = Partition()
            for t, mu in zip(c, contents):
                assert t.shape.inner == inner
                assert content(t) == tuple(mu)
                assert is_semistandard(t) and is_yamanouchi(reading_word(t))
                inner = t.shape.outer
            assert inner == Partition((4, 4, 4))

    def test_canonical_order_is_stable(self):
        contents = [(2, 1), (2, 1), (3, 1), (2,)]
        a = [[(t.shape.outer, t.rows) for t in c] for c in iter_lr_chains(contents, (4, 4, 4))]
        assert a == sorted(a)

    def test_order_of_contents_does_not_matter(self):
        contents = [(2, 1), (2, 1), (3, 1), (2,)]
        counts = {enumerate_lr_chains(p, (4, 4, 4)) for p in permutations(contents)}
        assert counts == {5}

    def test_size_mismatch_raises(self):
        with pytest.raises(ValueError):
            enumerate_lr_chains([(1,)], (2,))

    @pytest.mark.parametrize("nu,lam,mu", [t for t in SMALL_TRIPLES if t[1]][::11])
    def test_two_step_chains_are_lr_coefficients(self, nu, lam, mu):
        # the first tableau of a chain with straight content lam is forced
        assert enumerate_lr_chains([lam, mu], nu) == lr_tableau_count(nu, lam, mu)

    def test_each_chain_step_matches_brute_force(self):
        contents = [(2, 1), (2, 1), (3, 1), (2,)]
        for c in iter_lr_chains(contents, (4, 4, 4)):
            for t, mu in zip(c, contents):
                assert t.rows in brute_lr_fillings(t.shape.outer, t.shape.inner, mu)


class TestSYT:
    def test_two_two(self):
        assert [t.rows for t in enumerate_syt(Partition((2, 2)))] == [((1, 2), (3, 4)), ((1, 3), (2, 4))]

    @pytest.mark.parametrize("n", range(1, 7))
    def test_hook_formula(self, n):
        for lam in partitions_of(n):
            ts = enumerate_syt(lam)
            assert len(ts) == count_syt_hook_formula(lam)
            for t in ts:
                assert sorted(x for r in t.rows for x in r) == list(range(1, n + 1))
                assert is_semistandard(t)

    def test_cap(self):
        with pytest.raises(CapExceeded):
            enumerate_syt(Partition((3, 2)), cap=3)
