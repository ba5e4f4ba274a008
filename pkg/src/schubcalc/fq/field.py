"""Finite fields GF(p^e) as lookup tables.

Elements are the integers ``0 .. q-1``; the base-``p`` digits of an element are the
coefficients of a polynomial in the generator, lowest digit first.  Elements below
``p`` are exactly the prime subfield, so a matrix over GF(p) is also a matrix over
GF(p^e) without any conversion.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1 or not _is_prime(p):
                break
            return p, e
    raise ValueError(f"{q} is not a prime power")


def _poly_mulmod(a: list[int], b: list[int], modpoly: list[int], p: int) -> list[int]:
    e = len(modpoly) - 1
    prod = [0] * (2 * e - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    # modpoly is monic of degree e: x^e = -(lower terms)
    for d in range(len(prod) - 1, e - 1, -1):
        c = prod[d]
        if c:
            for t in range(e):
                prod[d - e + t] = (prod[d - e + t] - c * modpoly[t]) % p
            prod[d] = 0
    return prod[:e]


def _irreducible(p: int, e: int) -> list[int]:
    """First monic irreducible polynomial of degree ``e`` over GF(p), low coefficients first."""
    if e == 1:
        return [0, 1]
    for low in product(range(p), repeat=e):
        f = list(low) + [1]
        if f[0] == 0:
            continue
        # no factor of degree <= e/2: test all monic polynomials of those degrees
        if not any(_divides(list(g) + [1], f, p) for d in range(1, e // 2 + 1) for g in product(range(p), repeat=d)):
            return f
    raise AssertionError("no irreducible polynomial found")


def _divides(g: list[int], f: list[int], p: int) -> bool:
    r = list(f)
    dg = len(g) - 1
    for d in range(len(r) - 1, dg - 1, -1):
        c = r[d]
        if c:
            for t in range(dg + 1):
                r[d - dg + t] = (r[d - dg + t] - c * g[t]) % p
    return not any(r[:dg])


class GF:
    """GF(q) with dense operation tables (int64 arrays indexed by element)."""

    def __init__(self, q: int):
        p, e = prime_power(q)
        if q > 4096:
            raise ValueError(f"table field of order {q} is too large")
        self.q, self.p, self.e = q, p, e
        self.modulus = _irreducible(p, e)
        digits = [[(x // p**i) % p for i in range(e)] for x in range(q)]
        weights = [p**i for i in range(e)]

        def enc(d):
            return sum(w * c for w, c in zip(weights, d))

        add = np.zeros((q, q), dtype=np.int64)
        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                add[a, b] = enc([(x + y) % p for x, y in zip(digits[a], digits[b])])
                mul[a, b] = enc(_poly_mulmod(digits[a], digits[b], self.modulus, p)) if e > 1 else (a * b) % p
        neg = np.array([enc([(-x) % p for x in digits[a]]) for a in range(q)], dtype=np.int64)
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.nonzero(mul[a] == 1)[0][0])
        sqrt = np.full(q, -1, dtype=np.int64)
        for a in range(q - 1, -1, -1):
            sqrt[mul[a, a]] = a
        self.add_t, self.mul_t, self.neg_t, self.inv_t, self.sqrt_t = add, mul, neg, inv, sqrt
        for t in (add, mul, neg, inv, sqrt):
            t.setflags(write=False)

    def tables(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        return self.add_t, self.mul_t, self.neg_t, self.inv_t

    # scalar or array operations via table lookup
    def add(self, a, b):
        return self.add_t[a, b]

    def sub(self, a, b):
        return self.add_t[a, self.neg_t[b]]

    def mul(self, a, b):
        return self.mul_t[a, b]

    def neg(self, a):
        return self.neg_t[a]

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("inverse of zero")
        return self.inv_t[a]

    def div(self, a, b):
        return self.mul_t[a, self.inv(b)]

    def from_int(self, x: int) -> int:
        """Image of an integer in the prime subfield."""
        return int(x) % self.p

    def element_str(self, a: int) -> str:
        if self.e == 1 or a < self.p:
            return str(int(a))
        terms = []
        for i in range(self.e - 1, -1, -1):
            c = (int(a) // self.p**i) % self.p
            if c:
                mono = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
                terms.append(mono if c == 1 and mono else f"{c}{'*' if mono else ''}{mono}")
        return "+".join(terms)

    def is_prime_subfield(self, a) -> bool:
        return bool(np.all(np.asarray(a) < self.p))

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other):
        return isinstance(other, GF) and other.q == self.q

    def __hash__(self):
        return hash(("GF", self.q))


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)


class FqScalar:
    """A single element of GF(q) with operator overloading (convenience wrapper)."""

    __slots__ = ("residue", "field")

    def __init__(self, residue: int, fld: GF | int):
        self.field = fld if isinstance(fld, GF) else field(fld)
        if not 0 <= residue < self.field.q:
            residue = self.field.from_int(residue)
        self.residue = int(residue)

    @property
    def modulus(self) -> int:
        return self.field.q

    def _coerce(self, other) -> int:
        if isinstance(other, FqScalar):
            if other.field != self.field:
                raise ValueError("scalars from different fields")
            return other.residue
        return self.field.from_int(other)

    def __add__(self, other):
        return FqScalar(int(self.field.add(self.residue, self._coerce(other))), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return FqScalar(int(self.field.sub(self.residue, self._coerce(other))), self.field)

    def __mul__(self, other):
        return FqScalar(int(self.field.mul(self.residue, self._coerce(other))), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FqScalar(int(self.field.div(self.residue, self._coerce(other))), self.field)

    def __neg__(self):
        return FqScalar(int(self.field.neg(self.residue)), self.field)

    def __eq__(self, other):
        try:
            return self.residue == self._coerce(other)
        except ValueError:
            return False

    def __hash__(self):
        return hash((self.residue, self.field.q))

    def __repr__(self):
        return f"FqScalar({self.field.element_str(self.residue)} in GF({self.field.q}))"
