"""Sparse exact-integer polynomials.

``IntPolynomial`` lives in an open-ended set of variables ``x1, x2, ...`` and
stores exponent tuples without trailing zeros.  ``MonomialPolynomial`` is the
fixed-width variant used for truncated symmetric functions.
"""

from __future__ import annotations

import json
from itertools import combinations, permutations
from typing import Iterable, Mapping


def _trim(e: Iterable[int]) -> tuple[int, ...]:
    e = list(e)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _add_exps(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + y for x, y in zip(a, b)) + a[len(b):]


def _monomial_str(e: tuple[int, ...]) -> str:
    parts = []
    for i, a in enumerate(e, start=1):
        if a == 1:
            parts.append(f"x{i}")
        elif a > 1:
            parts.append(f"x{i}^{a}")
    return "*".join(parts)


def _format_terms(items: list[tuple[tuple[int, ...], int]]) -> str:
    if not items:
        return "0"
    out = []
    for n, (e, c) in enumerate(items):
        mono = _monomial_str(e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if n == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


class IntPolynomial:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        acc: dict[tuple[int, ...], int] = {}
        for e, c in (terms or {}).items():
            if c:
                k = _trim(e)
                acc[k] = acc.get(k, 0) + int(c)
        self.terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def _raw(cls, terms: dict[tuple[int, ...], int]) -> "IntPolynomial":
        p = cls.__new__(cls)
        p.terms = {e: c for e, c in terms.items() if c}
        return p

    @classmethod
    def const(cls, c: int) -> "IntPolynomial":
        return cls._raw({(): int(c)})

    @classmethod
    def var(cls, i: int) -> "IntPolynomial":
        if i < 1:
            raise ValueError("variables are numbered from 1")
        return cls._raw({(0,) * (i - 1) + (1,): 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], coef: int = 1) -> "IntPolynomial":
        return cls({tuple(exps): coef})

    @classmethod
    def elementary(cls, k: int, n: int) -> "IntPolynomial":
        terms = {}
        for S in combinations(range(n), k):
            e = [0] * n
            for s in S:
                e[s] = 1
            terms[tuple(e)] = 1
        return cls(terms)

    @classmethod
    def complete(cls, d: int, n: int) -> "IntPolynomial":
        """The complete homogeneous symmetric polynomial h_d(x1..xn)."""
        terms: dict[tuple[int, ...], int] = {}

        def rec(i: int, left: int, acc: list[int]):
            if i == n - 1:
                terms[tuple(acc + [left])] = 1
                return
            for a in range(left, -1, -1):
                rec(i + 1, left - a, acc + [a])

        if n == 0:
            return cls.const(1) if d == 0 else cls()
        rec(0, d, [])
        return cls(terms)

    def nvars(self) -> int:
        return max((len(e) for e in self.terms), default=0)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, exps: Iterable[int]) -> int:
        return self.terms.get(_trim(exps), 0)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.const(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return IntPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial._raw({e: c * other for e, c in self.terms.items()})
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exps(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return IntPolynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntPolynomial.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.const(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms by decreasing degree, then decreasing lexicographic exponent order."""
        n = self.nvars()
        return sorted(self.terms.items(),
                      key=lambda t: (sum(t[0]), t[0] + (0,) * (n - len(t[0]))), reverse=True)

    def __str__(self) -> str:
        return _format_terms(self.sorted_terms())

    def __repr__(self) -> str:
        return f"IntPolynomial({self})"

    def to_json(self) -> str:
        n = self.nvars()
        return json.dumps([{"exps": list(e) + [0] * (n - len(e)), "coef": c} for e, c in self.sorted_terms()])

    @classmethod
    def from_json(cls, text: str) -> "IntPolynomial":
        return cls({tuple(t["exps"]): t["coef"] for t in json.loads(text)})

    def swap_variables(self, i: int) -> "IntPolynomial":
        return swap_variables(self, i)


def swap_variables(p: IntPolynomial, i: int) -> IntPolynomial:
    """Exchange ``x_i`` and ``x_{i+1}``."""
    if i < 1:
        raise ValueError("variables are numbered from 1")
    out: dict[tuple[int, ...], int] = {}
    for e, c in p.terms.items():
        e = list(e) + [0] * max(0, i + 1 - len(e))
        e[i - 1], e[i] = e[i], e[i - 1]
        k = _trim(e)
        out[k] = out.get(k, 0) + c
    return IntPolynomial._raw(out)


def exact_divide_by_difference(p: IntPolynomial, i: int) -> IntPolynomial:
    """Divide by ``x_i - x_{i+1}`` by synthetic division in ``x_i``.

    Writing ``p = sum_d c_d x_i^d``, the quotient satisfies ``q_{d-1} = c_d + x_{i+1} q_d``
    and the remainder ``c_0 + x_{i+1} q_0`` has to vanish.
    """
    a, b = i - 1, i
    by_deg: dict[int, dict[tuple[int, ...], int]] = {}
    for e, c in p.terms.items():
        e = list(e) + [0] * max(0, i + 1 - len(e))
        d = e[a]
        e[a] = 0
        by_deg.setdefault(d, {})[tuple(e)] = c
    if not by_deg:
        return IntPolynomial()
    top = max(by_deg)
    quotient: dict[tuple[int, ...], int] = {}
    carry: dict[tuple[int, ...], int] = {}
    for d in range(top, 0, -1):
        # q_{d-1} = c_d + x_{i+1} * q_d, where carry holds q_d
        qd1 = dict(by_deg.get(d, {}))
        for e, c in carry.items():
            e2 = list(e)
            e2[b] += 1
            e2 = tuple(e2)
            qd1[e2] = qd1.get(e2, 0) + c
        qd1 = {e: c for e, c in qd1.items() if c}
        for e, c in qd1.items():
            e2 = list(e)
            e2[a] = d - 1
            k = _trim(e2)
            quotient[k] = quotient.get(k, 0) + c
        carry = qd1
    rem = dict(by_deg.get(0, {}))
    for e, c in carry.items():
        e2 = list(e)
        e2[b] += 1
        e2 = tuple(e2)
        rem[e2] = rem.get(e2, 0) + c
    if any(rem.values()):
        raise ArithmeticError(f"x{i} - x{i + 1} does not divide the polynomial")
    return IntPolynomial._raw(quotient)


class MonomialPolynomial:
    """A polynomial in exactly ``nvars`` variables with full-length exponent tuples."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        if nvars < 1:
            raise ValueError("need at least one variable")
        self.nvars = nvars
        acc: dict[tuple[int, ...], int] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have length {nvars}")
            if c:
                acc[e] = acc.get(e, 0) + int(c)
        self.terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def zero(cls, nvars: int) -> "MonomialPolynomial":
        return cls(nvars)

    def _check(self, other: "MonomialPolynomial") -> None:
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MonomialPolynomial(self.nvars, out)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, other):
        if isinstance(other, int):
            return MonomialPolynomial(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        # pack exponents into one integer so that multiplying monomials is integer addition
        base = self.degree() + other.degree() + 1
        if base <= 0:
            return MonomialPolynomial(self.nvars)
        weights = [base**j for j in range(self.nvars)]

        def pack(e):
            return sum(w * a for w, a in zip(weights, e))

        left = [(pack(e), c) for e, c in self.terms.items()]
        right = [(pack(e), c) for e, c in other.terms.items()]
        acc: dict[int, int] = {}
        for k1, c1 in left:
            for k2, c2 in right:
                k = k1 + k2
                acc[k] = acc.get(k, 0) + c1 * c2
        out = {}
        for k, c in acc.items():
            if c:
                e = []
                for _ in range(self.nvars):
                    k, r = divmod(k, base)
                    e.append(r)
                out[tuple(e)] = c
        return MonomialPolynomial(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, MonomialPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def is_symmetric(self) -> bool:
        for e, c in self.terms.items():
            for i in range(self.nvars - 1):
                f = list(e)
                f[i], f[i + 1] = f[i + 1], f[i]
                if self.terms.get(tuple(f), 0) != c:
                    return False
        return True

    def leading(self) -> tuple[tuple[int, ...], int] | None:
        """Lexicographically largest monomial and its coefficient."""
        if not self.terms:
            return None
        e = max(self.terms)
        return e, self.terms[e]

    def to_int_polynomial(self) -> IntPolynomial:
        return IntPolynomial(self.terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self) -> str:
        return _format_terms(self.sorted_terms())

    def __repr__(self) -> str:
        return f"MonomialPolynomial({self.nvars}, {self})"


def monomial_symmetric(lam: Iterable[int], nvars: int) -> MonomialPolynomial:
    """The monomial symmetric polynomial m_lam in ``nvars`` variables."""
    lam = [a for a in lam if a]
    if len(lam) > nvars:
        return MonomialPolynomial(nvars)
    base = tuple(lam) + (0,) * (nvars - len(lam))
    return MonomialPolynomial(nvars, {e: 1 for e in set(permutations(base))})
