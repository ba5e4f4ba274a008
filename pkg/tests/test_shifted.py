from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from schubcalc.partitions import ShiftedPartition, shifted_partitions_in_triangle, staircase, strict_partitions_of
from schubcalc.polynomials import MonomialPolynomial
from schubcalc.shifted import (
    PrimedEntry,
    ShiftedSkewShape,
    ShiftedTableau,
    enumerate_shifted_tableaux,
    f_coefficient,
    is_shifted_ssyt,
    og_intersection_count,
    p_expansion,
    p_product_by_elimination,
    schur_pq_to_monomials,
    shifted_reading_word,
    stembridge_is_lr,
    stembridge_product,
    stembridge_tableaux,
)

from oracles import brute_shifted_monomials

SP = ShiftedPartition
STRICT = [lam for n in range(1, 5) for lam in strict_partitions_of(n)]


def figure_tableau():
    return ShiftedTableau.of((6, 4, 2, 1), (3, 2), [["1'", "1", "2'"], ["1'", "2"], ["1", "1"], ["3"]])


class TestPrimedEntry:
    def test_order(self):
        a = [PrimedEntry.parse(s) for s in ["1'", "1", "2'", "2", "3'"]]
        assert a == sorted(a)
        assert [e.code for e in a] == [1, 2, 3, 4, 5]

    def test_round_trip(self):
        for code in range(1, 9):
            e = PrimedEntry.from_code(code)
            assert PrimedEntry.parse(str(e)) == e

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            PrimedEntry(0)


class TestShiftedTableau:
    def test_figure(self):
        t = figure_tableau()
        assert is_shifted_ssyt(t, "Q") and is_shifted_ssyt(t, "P")
        assert "".join(str(e) for e in shifted_reading_word(t)) == "3111'21'12'"
        assert t.content() == (5, 2, 1)

    def test_shape(self):
        s = ShiftedSkewShape.of((6, 4, 2, 1), (3, 2))
        assert s.row_bounds() == [(4, 6), (4, 5), (3, 4), (4, 4)]
        assert s.size() == 8
        with pytest.raises(ValueError):
            ShiftedSkewShape.of((2,), (3,))

    def test_json(self):
        t = figure_tableau()
        assert ShiftedTableau.from_json(t.to_json()) == t

    def test_row_length_check(self):
        with pytest.raises(ValueError):
            ShiftedTableau.of((2,), (), [["1"]])

    def test_rules(self):
        assert not is_shifted_ssyt(ShiftedTableau.of((2,), (), [["1'", "1"]]), "P")
        assert is_shifted_ssyt(ShiftedTableau.of((2,), (), [["1'", "1"]]), "Q")
        assert not is_shifted_ssyt(ShiftedTableau.of((3,), (1,), [["2'", "2'"]]), "Q")
        assert is_shifted_ssyt(ShiftedTableau.of((3,), (1,), [["2", "2"]]), "Q")
        with pytest.raises(ValueError):
            is_shifted_ssyt(figure_tableau(), "R")


class TestPQ:
    @pytest.mark.parametrize("lam", [l for l in STRICT if l.size() <= 4])
    @pytest.mark.parametrize("variant", ["P", "Q"])
    def test_against_brute(self, lam, variant):
        m = 3
        want = {e: c for e, c in brute_shifted_monomials(lam, (), variant, m).items()}
        assert schur_pq_to_monomials(lam, variant, m).terms == want

    def test_skew_against_brute(self):
        want = dict(brute_shifted_monomials((3, 1), (1,), "Q", 3))
        assert schur_pq_to_monomials(ShiftedSkewShape.of((3, 1), (1,)), "Q", 3).terms == want

    def test_enumeration_counts(self):
        ts = enumerate_shifted_tableaux(ShiftedSkewShape.of((2,)), "P", 2)
        assert {"".join(map(str, shifted_reading_word(t))) for t in ts} == {"11", "12'", "12", "22"}

    def test_p2_is_p1_squared(self):
        p1 = schur_pq_to_monomials(SP((1,)), "P", 3)
        assert schur_pq_to_monomials(SP((2,)), "P", 3) == p1 * p1

    @pytest.mark.parametrize("lam", [l for n in range(1, 7) for l in strict_partitions_of(n)])
    def test_q_is_power_of_two_times_p(self, lam):
        m = lam.size()
        assert schur_pq_to_monomials(lam, "Q", m) == schur_pq_to_monomials(lam, "P", m) * 2 ** len(lam)

    def test_symmetric(self):
        for lam in STRICT:
            assert schur_pq_to_monomials(lam, "P", 4).is_symmetric()

    def test_bad_variant(self):
        with pytest.raises(ValueError):
            schur_pq_to_monomials(SP((1,)), "X", 2)


class TestProducts:
    def test_examples(self):
        assert p_product_by_elimination([(1,), (1,)]) == {SP((2,)): 1}
        assert p_product_by_elimination([(1,), (2,)]) == {SP((3,)): 1, SP((2, 1)): 1}
        assert stembridge_product([(2, 1), (1,)]) == {SP((3, 1)): 1}

    def test_expansion_round_trip(self):
        poly = schur_pq_to_monomials(SP((3, 1)), "P", 4) * 3 + schur_pq_to_monomials(SP((4,)), "P", 4)
        assert p_expansion(poly) == {SP((4,)): 1, SP((3, 1)): 3}

    def test_expansion_rejects_non_strict(self):
        with pytest.raises(ArithmeticError):
            p_expansion(MonomialPolynomial(2, {(1, 1): 1}))

    @pytest.mark.parametrize("reading", ["corrected", "literal"])
    def test_stembridge_matches_elimination(self, reading):
        for a in STRICT:
            for b in STRICT:
                if a.size() + b.size() <= 6:
                    assert stembridge_product([a, b], reading) == p_product_by_elimination([a, b])

    def test_q_product_power_of_two(self):
        for a in STRICT:
            for b in STRICT:
                total = a.size() + b.size()
                if total > 6:
                    continue
                m = total
                lhs = schur_pq_to_monomials(a, "Q", m) * schur_pq_to_monomials(b, "Q", m)
                rhs = MonomialPolynomial(m)
                for lam, f in p_product_by_elimination([a, b], m).items():
                    rhs = rhs + schur_pq_to_monomials(lam, "Q", m) * (f * 2 ** (len(a) + len(b) - len(lam)))
                assert lhs == rhs

    def test_stembridge_tableaux_are_lr(self):
        for t in stembridge_tableaux((4, 2), (2,), (3, 1)):
            assert stembridge_is_lr(t)
            assert is_shifted_ssyt(t, "Q")
            assert t.content() == (3, 1)

    def test_primed_first_occurrence_rejected(self):
        assert not stembridge_is_lr(ShiftedTableau.of((2,), (1,), [["1'"]]))

    def test_bad_reading(self):
        with pytest.raises(ValueError):
            stembridge_is_lr(figure_tableau(), "other")

    def test_f_coefficient_methods(self):
        for method in ["elimination", "stembridge", "both"]:
            assert f_coefficient([(1,), (2,)], (2, 1), method=method) == 1
        assert f_coefficient([(1,)], (2,)) == 0
        with pytest.raises(ValueError):
            f_coefficient([(1,), (1,)], (2,), method="guess")


class TestOG:
    def test_counts(self):
        assert og_intersection_count(1, [(1,)]) == 1
        assert og_intersection_count(2, [(1,)] * 3) == 1
        assert og_intersection_count(2, [(2,), (1,)]) == 1
        # shifted standard tableaux of the staircase (3,2,1)
        assert og_intersection_count(3, [(1,)] * 6) == 2

    @pytest.mark.parametrize("n", [2, 3])
    def test_duality(self, n):
        T = set(range(1, n + 1))
        for lam in shifted_partitions_in_triangle(n):
            for mu in shifted_partitions_in_triangle(n, staircase(n).size() - lam.size()):
                want = int(set(lam).isdisjoint(mu) and set(lam) | set(mu) == T)
                assert og_intersection_count(n, [lam, mu]) == want

    def test_methods_agree(self):
        assert og_intersection_count(3, [(1,)] * 6, method="stembridge") == 2

    def test_validation(self):
        with pytest.raises(ValueError):
            og_intersection_count(2, [(3,)])
        with pytest.raises(ValueError):
            og_intersection_count(2, [(1,)])


strict_st = st.sets(st.integers(1, 4), max_size=2).map(lambda s: SP(sorted(s, reverse=True)))


# elimination runs in |a|+|b| variables, so keep the total small
@given(st.tuples(strict_st, strict_st).filter(lambda ab: ab[0].size() + ab[1].size() <= 7))
def test_p_products_commute_and_are_nonnegative(ab):
    a, b = ab
    ab = p_product_by_elimination([a, b])
    assert ab == p_product_by_elimination([b, a])
    assert all(c > 0 for c in ab.values())
    assert all(lam.size() == a.size() + b.size() for lam in ab)
