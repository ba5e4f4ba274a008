"""Cross-checks between independent implementations, runnable from the CLI."""

from __future__ import annotations

import random
from typing import Callable

from .partitions import AmbientRectangle, Partition, ShiftedPartition, count_syt_hook_formula, partitions_in, \
    partitions_of, strict_partitions_of
from .permutations import Permutation, all_permutations
from .polynomials import IntPolynomial


def _schur_monomials() -> str:
    from .schur import expansion_to_monomials, schur_product, schur_to_monomials

    checked = 0
    for a in range(1, 4):
        for b in range(1, 4):
            for lam in partitions_of(a):
                for mu in partitions_of(b):
                    m = a + b
                    lhs = schur_to_monomials(lam, m) * schur_to_monomials(mu, m)
                    rhs = expansion_to_monomials(schur_product([lam, mu]), m)
                    if lhs != rhs:
                        raise AssertionError(f"s{lam} * s{mu} differs from its monomial expansion")
                    checked += 1
    return f"{checked} products agree"


def _hook() -> str:
    from .tableaux import enumerate_syt

    shapes = [lam for n in range(1, 7) for lam in partitions_of(n)]
    for lam in shapes:
        if count_syt_hook_formula(lam) != len(enumerate_syt(lam)):
            raise AssertionError(f"hook formula disagrees with enumeration on {lam}")
    return f"{len(shapes)} shapes agree"


def _monk() -> str:
    from .schubert import monk_expand, schubert_polynomial

    n = 0
    for w in all_permutations(4):
        for i in (1, 2, 3):
            lhs = schubert_polynomial(Permutation.simple(i, 4)) * schubert_polynomial(w)
            rhs = IntPolynomial()
            for v in monk_expand(i, w):
                rhs = rhs + schubert_polynomial(v)
            if lhs != rhs:
                raise AssertionError(f"Monk's rule fails for i={i}, w={w}")
            n += 1
    return f"{n} identities hold"


def _divided_differences() -> str:
    from .schubert import divided_difference

    rng = random.Random(7)
    for _ in range(100):
        terms = {}
        for _ in range(rng.randint(1, 4)):
            e = tuple(rng.randint(0, 2) for _ in range(4))
            terms[e] = terms.get(e, 0) + rng.randint(-3, 3)
        f = IntPolynomial(terms)
        for i in (1, 2, 3):
            if divided_difference(i, divided_difference(i, f)) != IntPolynomial():
                raise AssertionError("d_i^2 != 0")
        if divided_difference(1, divided_difference(2, divided_difference(1, f))) != \
                divided_difference(2, divided_difference(1, divided_difference(2, f))):
            raise AssertionError("braid relation fails")
    return "d_i^2 = 0 and the braid relation hold on 100 polynomials"


def _stembridge() -> str:
    from .shifted import p_product_by_elimination, stembridge_product

    shapes = [s for n in range(1, 4) for s in strict_partitions_of(n)]
    checked = 0
    for a in shapes:
        for b in shapes:
            if a.size() + b.size() > 5:
                continue
            elim = {k: v for k, v in p_product_by_elimination([a, b]).items() if v}
            rule = {k: v for k, v in stembridge_product([a, b]).items() if v}
            if elim != rule:
                raise AssertionError(f"P{a} * P{b}: elimination {elim} vs Stembridge {rule}")
            checked += 1
    return f"{checked} products agree"


def _fq_agreement() -> str:
    from .fq import count_by_rowspan, enumerate_grassmannian, exhaustive_pairs, grassmannian_size, \
        intersection_trials, og_intersection_trials, position_census
    from .fq.empirical import splitting_degree
    from .schur import duality_pairing, intersection_count
    from .shifted import og_intersection_count

    streamed = sum(1 for _ in enumerate_grassmannian(2, 4, 2))
    if not streamed == grassmannian_size(2, 4, 2) == count_by_rowspan(2, 4, 2) == 35:
        raise AssertionError("census of Gr(4,2) over F_2 is off")
    box = AmbientRectangle(2, 2)
    census = position_census(3, 4, 2)
    for lam in partitions_in(box):
        for mu in partitions_in(box, box.area() - lam.size()):
            if exhaustive_pairs(census, lam, mu) != duality_pairing(lam, mu, box):
                raise AssertionError(f"duality fails for {lam}, {mu}")
    four = [Partition((1,))] * 4
    expect = intersection_count(box, four)
    rep = intersection_trials(7, 4, 2, four, trials=7, seed=1, ext=splitting_degree(expect))
    if rep.modal != expect:
        raise AssertionError(f"four lines: {rep}")
    three = [ShiftedPartition((1,))] * 3
    expect_og = og_intersection_count(2, three)
    rep_og = og_intersection_trials(5, 2, three, trials=7, seed=1, ext=splitting_degree(expect_og))
    if rep_og.modal != expect_og:
        raise AssertionError(f"OG(5,2): {rep_og}")
    return f"census 35, duality on 2x2, four lines -> {rep.modal}, OG(5,2) -> {rep_og.modal}"


SUITES: dict[str, Callable[[], str]] = {
    "schur-monomials": _schur_monomials,
    "hook": _hook,
    "monk": _monk,
    "divided-differences": _divided_differences,
    "stembridge": _stembridge,
    "fq-agreement": _fq_agreement,
}


def run_suites(names) -> list[tuple[str, bool, str]]:
    out = []
    for name in names:
        try:
            out.append((name, True, SUITES[name]()))
        except AssertionError as e:
            out.append((name, False, str(e)))
    return out
