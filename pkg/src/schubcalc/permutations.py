"""Permutations in one-line notation: inversions, reduced words, Bruhat order."""

from __future__ import annotations

import json
from itertools import permutations as _perms
from typing import Iterable, Iterator, Sequence


class Permutation(tuple):
    """A bijection of ``{1..n}`` stored as its one-line window ``(w(1), ..., w(n))``."""

    __slots__ = ()

    def __new__(cls, window: Iterable[int]) -> "Permutation":
        window = tuple(int(x) for x in window)
        if sorted(window) != list(range(1, len(window) + 1)):
            raise ValueError(f"{window} is not a permutation of 1..{len(window)}")
        return super().__new__(cls, window)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(range(n, 0, -1))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        if not 1 <= i < n:
            raise ValueError(f"s_{i} is not a simple transposition in S_{n}")
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(w)

    @classmethod
    def from_word(cls, word: Sequence[int], n: int) -> "Permutation":
        w = cls.identity(n)
        for i in word:
            w = w.right_simple(i)
        return w

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition ``(self * other)(i) = self(other(i))``."""
        if len(other) != len(self):
            raise ValueError("permutations live in different symmetric groups")
        return Permutation(self[j - 1] for j in other)

    def right_simple(self, i: int) -> "Permutation":
        """``w * s_i``: swap the entries in positions ``i`` and ``i+1``."""
        w = list(self)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(w)

    def inverse(self) -> "Permutation":
        out = [0] * len(self)
        for i, v in enumerate(self, start=1):
            out[v - 1] = i
        return Permutation(out)

    def embed(self, m: int) -> "Permutation":
        if m < len(self):
            raise ValueError(f"cannot embed S_{len(self)} into S_{m}")
        return Permutation(tuple(self) + tuple(range(len(self) + 1, m + 1)))

    def trimmed(self) -> "Permutation":
        """Drop trailing fixed points (the standard representative in S_infinity)."""
        w = list(self)
        while w and w[-1] == len(w):
            w.pop()
        return Permutation(w)

    def descents(self) -> list[int]:
        return [i for i in range(1, len(self)) if self[i - 1] > self[i]]

    def __str__(self) -> str:
        return format_permutation(self)

    def __repr__(self) -> str:
        return f"Permutation({format_permutation(self)})"

    def to_json(self) -> str:
        return json.dumps(list(self))


def inversions(w: Permutation) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def length(w: Permutation) -> int:
    return inversions(w)


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """A reduced word ``(i_1, ..., i_l)`` with ``w = s_{i_1} ... s_{i_l}``.

    Repeatedly strip the smallest right descent: ``w -> w s_i`` lowers the length.
    """
    w = Permutation(w)
    letters = []
    while True:
        d = w.descents()
        if not d:
            break
        i = d[0]
        letters.append(i)
        w = w.right_simple(i)
    return tuple(reversed(letters))


def word_product(word: Sequence[int], n: int) -> Permutation:
    return Permutation.from_word(word, n)


def _subword_products(word: Sequence[int], n: int) -> set[Permutation]:
    reached = {Permutation.identity(n)}
    for i in word:
        reached |= {v.right_simple(i) for v in reached}
    return reached


def bruhat_leq(v: Permutation, w: Permutation) -> bool:
    """Subword criterion on the fixed reduced word of ``w``."""
    v, w = Permutation(v), Permutation(w)
    if len(v) != len(w):
        raise ValueError(f"cannot compare permutations of S_{len(v)} and S_{len(w)}")
    if length(v) > length(w):
        return False
    return v in _subword_products(reduced_word(w), len(w))


def all_permutations(n: int) -> Iterator[Permutation]:
    for p in _perms(range(1, n + 1)):
        yield Permutation(p)


def parse_permutation(text: str) -> Permutation:
    """``"45132"`` for n <= 9, or comma-separated ``"4,5,1,3,2"``."""
    text = text.strip()
    try:
        if "," in text:
            return Permutation(int(t) for t in text.split(","))
        return Permutation(int(ch) for ch in text)
    except ValueError as exc:
        raise ValueError(f"bad permutation {text!r}: {exc}") from None


def format_permutation(w: Sequence[int]) -> str:
    if len(w) <= 9:
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)
