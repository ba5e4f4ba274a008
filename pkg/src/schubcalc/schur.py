"""Schur-basis arithmetic: LR products, the Grassmannian quotient, Pieri and duality."""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .partitions import (
    AmbientRectangle,
    Partition,
    SkewShape,
    complement,
    fits_in,
    format_partition,
    parse_partition,
    partitions_between,
)
from .polynomials import MonomialPolynomial
from .tableaux import _check_chain_sizes, lr_tableau_count


class SchurExpansion:
    """Finitely supported integer combination of basis classes indexed by partitions."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        acc: dict[Partition, int] = {}
        for lam, c in (terms or {}).items():
            lam = Partition(lam)
            acc[lam] = acc.get(lam, 0) + int(c)
        self.terms = {lam: c for lam, c in acc.items() if c}

    def __getitem__(self, lam) -> int:
        return self.terms.get(Partition(lam), 0)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.sorted_terms_keys())

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return SchurExpansion(out)

    def scaled(self, k: int) -> "SchurExpansion":
        return SchurExpansion({lam: c * k for lam, c in self.terms.items()})

    def truncate(self, box: AmbientRectangle) -> "SchurExpansion":
        return SchurExpansion({lam: c for lam, c in self.terms.items() if fits_in(lam, box)})

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def sorted_terms_keys(self) -> list[Partition]:
        return sorted(self.terms, key=lambda p: (p.size(), tuple(p)), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for lam in self.sorted_terms_keys():
            c = self.terms[lam]
            basis = f"s[{format_partition(lam)}]"
            body = basis if abs(c) == 1 else f"{abs(c)}*{basis}"
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"SchurExpansion({self})"

    def to_json(self) -> str:
        return json.dumps({format_partition(lam): self.terms[lam] for lam in self.sorted_terms_keys()})

    @classmethod
    def from_json(cls, text: str) -> "SchurExpansion":
        return cls({parse_partition(k): v for k, v in json.loads(text).items()})


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if nu.size() != lam.size() + mu.size() or not nu.contains(lam):
        return 0
    return lr_tableau_count(nu, lam, mu)


def _chain_layers(factors: Sequence[Partition], bound: Partition | None) -> dict[Partition, int]:
    """Forward DP over the partial shapes of LR chains."""
    layer: dict[Partition, int] = {Partition(): 1}
    for mu in factors:
        mu = Partition(mu)
        nxt: dict[Partition, int] = {}
        for inner, ways in layer.items():
            if bound is None:
                # nu lies in the (l(inner)+l(mu)) x (inner_1+mu_1) box
                width = inner.part(1) + mu.part(1)
                outer = Partition([width] * (len(inner) + len(mu)))
            else:
                outer = bound
            for nu in partitions_between(outer, inner, inner.size() + mu.size()):
                c = lr_tableau_count(nu, inner, mu)
                if c:
                    nxt[nu] = nxt.get(nu, 0) + ways * c
        layer = nxt
    return layer


def schur_product(factors: Sequence[Partition]) -> SchurExpansion:
    out = SchurExpansion(_chain_layers([Partition(f) for f in factors], None))
    assert out.is_nonnegative()
    return out


def _require_factors_fit(box: AmbientRectangle, factors: Sequence[Partition]) -> list[Partition]:
    factors = [Partition(f) for f in factors]
    for f in factors:
        if not fits_in(f, box):
            raise ValueError(f"factor {format_partition(f) or '-'} does not fit in {box.rows}x{box.cols}")
    return factors


def grassmannian_product(box: AmbientRectangle, factors: Sequence[Partition]) -> SchurExpansion:
    factors = _require_factors_fit(box, factors)
    out = SchurExpansion(_chain_layers(factors, box.full()))
    assert out.is_nonnegative()
    return out


def pieri(r: int, lam: Partition, box: AmbientRectangle | None = None) -> SchurExpansion:
    """Add horizontal strips of size ``r`` to ``lam``."""
    lam = Partition(lam)
    if r < 0:
        raise ValueError("strip size must be nonnegative")
    if box is not None and not fits_in(lam, box):
        raise ValueError(f"{format_partition(lam) or '-'} does not fit in {box.rows}x{box.cols}")
    k = len(lam) + 1
    padded = lam.padded(k)
    out = {}

    def rec(i: int, left: int, acc: list[int]):
        if i == k:
            if left == 0:
                out[Partition(acc)] = 1
            return
        hi = padded[i] + left if i == 0 else min(padded[i - 1], padded[i] + left)
        for v in range(padded[i], hi + 1):
            rec(i + 1, left - (v - padded[i]), acc + [v])

    rec(0, r, [])
    exp = SchurExpansion(out)
    return exp.truncate(box) if box is not None else exp


def duality_pairing(lam: Partition, mu: Partition, box: AmbientRectangle) -> int:
    lam, mu = Partition(lam), Partition(mu)
    if lam.size() + mu.size() != box.area():
        raise ValueError(f"|lam|+|mu| = {lam.size() + mu.size()} but the box has {box.area()} cells")
    if not (fits_in(lam, box) and fits_in(mu, box)):
        return 0
    return int(mu == complement(lam, box))


def intersection_count(box: AmbientRectangle, factors: Sequence[Partition]) -> int:
    factors = _require_factors_fit(box, factors)
    _check_chain_sizes(factors, box.full())
    return _chain_layers(factors, box.full()).get(box.full(), 0)


@lru_cache(maxsize=None)
def _skew_schur(outer: Partition, inner: Partition, m: int) -> MonomialPolynomial:
    k = len(outer)
    if len(inner) > k:
        return MonomialPolynomial(m)
    nu = outer.padded(k)
    start = inner.padded(k)
    # states: partial shape -> {exponent prefix: coefficient}
    states: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {start: {(): 1}}
    for step in range(m):
        last = step == m - 1
        nxt: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}
        for rho, polys in states.items():
            for new in _horizontal_strips(rho, nu):
                if last and new != nu:
                    continue
                added = sum(new) - sum(rho)
                bucket = nxt.setdefault(new, {})
                for e, c in polys.items():
                    e2 = e + (added,)
                    bucket[e2] = bucket.get(e2, 0) + c
        states = nxt
    return MonomialPolynomial(m, states.get(nu, {}))


def _horizontal_strips(rho: tuple[int, ...], nu: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All sigma with rho <= sigma <= nu and sigma/rho a horizontal strip."""
    k = len(rho)
    acc = [0] * k

    def rec(i: int):
        if i == k:
            yield tuple(acc)
            return
        hi = nu[i] if i == 0 else min(nu[i], rho[i - 1])
        for v in range(rho[i], hi + 1):
            if i > 0 and v > acc[i - 1]:
                break
            acc[i] = v
            yield from rec(i + 1)

    yield from rec(0)


def schur_to_monomials(shape: SkewShape | Partition, m: int) -> MonomialPolynomial:
    """Sum of x^T over SSYT of ``shape`` with entries at most ``m``.

    Built from chains of horizontal strips, one per letter.
    """
    if m < 1:
        raise ValueError("need at least one variable")
    if not isinstance(shape, SkewShape):
        shape = SkewShape.of(shape)
    return _skew_schur(shape.outer, shape.inner, m)


def expansion_to_monomials(exp: SchurExpansion, m: int) -> MonomialPolynomial:
    out = MonomialPolynomial(m)
    for lam, c in exp.terms.items():
        out = out + schur_to_monomials(lam, m) * c
    return out
