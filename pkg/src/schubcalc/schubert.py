"""Divided differences, Schubert polynomials, Monk's rule and the coinvariant ring."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from .permutations import Permutation, length, reduced_word
from .polynomials import IntPolynomial, _trim, exact_divide_by_difference, swap_variables


def divided_difference(i: int, p: IntPolynomial) -> IntPolynomial:
    """``(P - s_i P) / (x_i - x_{i+1})``, divided exactly."""
    return exact_divide_by_difference(p - swap_variables(p, i), i)


def staircase_monomial(n: int) -> IntPolynomial:
    """``x1^(n-1) x2^(n-2) ... x_(n-1)``, the Schubert polynomial of the longest element."""
    return IntPolynomial.monomial(range(n - 1, -1, -1))


def longest_times(w: Permutation) -> Permutation:
    """``w0 * w``, which has values ``n + 1 - w(i)``."""
    n = len(w)
    return Permutation(n + 1 - x for x in w)


def schubert_from_word(w: Permutation, word: Sequence[int]) -> IntPolynomial:
    """Apply ``d_{i_1}`` first, then ``d_{i_2}``, and so on.

    ``word`` must be a reduced word of ``w0 * w``, so that ``w = w0 s_{i_1} ... s_{i_r}``
    with every prefix dropping the length by one.
    """
    w = Permutation(w)
    n = len(w)
    u = longest_times(w)
    if len(word) != length(u) or Permutation.from_word(word, n) != u:
        raise ValueError(f"{tuple(word)} is not a reduced word of w0*w = {u}")
    p = staircase_monomial(n)
    for i in word:
        p = divided_difference(i, p)
    return p


@lru_cache(maxsize=None)
def schubert_polynomial(w: Permutation) -> IntPolynomial:
    w = Permutation(w)
    return schubert_from_word(w, reduced_word(longest_times(w)))


def monk_expand(i: int, w: Permutation) -> list[Permutation]:
    """Permutations ``v = w t_{pq}`` with ``p <= i < q`` and ``l(v) = l(w) + 1``.

    ``w`` is embedded in ``S_m`` with ``m = max(n, i) + 1``; results are trimmed of
    trailing fixed points but never shorter than ``w``.
    """
    w = Permutation(w)
    if i < 1:
        raise ValueError("Monk index must be positive")
    n = len(w)
    m = max(n, i) + 1
    we = w.embed(m)
    out = set()
    for p in range(1, i + 1):
        for q in range(i + 1, m + 1):
            a, b = we[p - 1], we[q - 1]
            # covering relation: w(p) < w(q) with no value in between at positions p<j<q
            if a < b and not any(a < we[j - 1] < b for j in range(p + 1, q)):
                v = list(we)
                v[p - 1], v[q - 1] = b, a
                while len(v) > n and v[-1] == len(v):
                    v.pop()
                out.add(Permutation(v))
    return sorted(out)


def staircase_exponents(n: int) -> list[tuple[int, ...]]:
    """Exponent vectors with ``a_k <= n - k``; there are ``n!`` of them."""
    return [tuple(e) for e in product(*(range(n - k, -1, -1) for k in range(1, n + 1)))]


@lru_cache(maxsize=None)
def _gb_tail(n: int, k: int) -> dict[tuple[int, ...], int]:
    # h_{n+1-k}(x1..xk) minus its leading term x_k^{n+1-k}
    h = IntPolynomial.complete(n + 1 - k, k).terms
    lead = _trim((0,) * (k - 1) + (n + 1 - k,))
    return {e: c for e, c in h.items() if e != lead}


def reduce_coinvariant(p: IntPolynomial, n: int) -> IntPolynomial:
    """Normal form of ``p`` modulo ``(e_1, ..., e_n)`` on the staircase monomials.

    The polynomials ``h_{n+1-k}(x_1..x_k)`` for ``k = 1..n`` lie in the ideal and form
    a Groebner basis for lex order with ``x_n > ... > x_1``; their leading terms are
    ``x_k^{n+1-k}``.  Each rewrite replaces the leading term by minus the tail.
    """
    if p.nvars() > n:
        raise ValueError(f"polynomial uses x{p.nvars()} but n = {n}")
    work = dict(p.terms)
    done: dict[tuple[int, ...], int] = {}
    while work:
        # take the lex-largest monomial (comparing from x_n downwards)
        e = max(work, key=lambda t: tuple(reversed(t + (0,) * (n - len(t)))))
        c = work.pop(e)
        if not c:
            continue
        full = list(e) + [0] * (n - len(e))
        bad = [k for k in range(1, n + 1) if full[k - 1] >= n + 1 - k]
        if not bad:
            done[e] = done.get(e, 0) + c
            continue
        k = bad[-1]
        rest = full[:]
        rest[k - 1] -= n + 1 - k
        for t, tc in _gb_tail(n, k).items():
            t = list(t) + [0] * (n - len(t))
            new = _trim(a + b for a, b in zip(rest, t))
            work[new] = work.get(new, 0) - c * tc
    return IntPolynomial(done)


def coinvariant_vector(p: IntPolynomial, n: int) -> list[int]:
    """Coordinates of the reduced form in the staircase basis."""
    r = reduce_coinvariant(p, n)
    return [r.coefficient(e) for e in staircase_exponents(n)]


def rank_over_q(rows: Sequence[Sequence[int]]) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank
