"""Complete flags over GF(q), including flags orthogonal for the reverse form."""

from __future__ import annotations

import numpy as np

from .field import GF, field
from .linalg import FqMatrix, annihilator, inverse


def anti_identity(n: int, fld: GF) -> FqMatrix:
    return FqMatrix(np.eye(n, dtype=np.int64)[::-1].copy(), fld)


def reverse_form(a, b, fld: GF) -> int:
    """``<a, b> = sum_c a_c b_{N+1-c}``: each coordinate pairs with its mirror image."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape != b.shape:
        raise ValueError("vectors of different lengths")
    return int(_dot(a, b[::-1], fld))


def _dot(a: np.ndarray, b: np.ndarray, fld: GF) -> int:
    s = 0
    for x, y in zip(a, b):
        s = fld.add_t[s, fld.mul_t[x, y]]
    return s


def gram(M: FqMatrix) -> FqMatrix:
    """Matrix of reverse-form pairings between the rows of ``M``."""
    return M @ FqMatrix(M.data[:, ::-1].T.copy(), M.field)


class FlagFq:
    """A complete flag: ``F_i`` is the span of the first ``i`` rows of ``basis``."""

    __slots__ = ("basis",)

    def __init__(self, basis: FqMatrix):
        if basis.rows != basis.cols:
            raise ValueError("a complete flag needs a square basis matrix")
        if basis.rank() != basis.rows:
            raise ValueError("flag basis is not linearly independent")
        self.basis = basis

    @property
    def n(self) -> int:
        return self.basis.rows

    @property
    def field(self) -> GF:
        return self.basis.field

    def subspace(self, i: int) -> FqMatrix:
        if not 0 <= i <= self.n:
            raise ValueError(f"flag has no subspace of dimension {i}")
        return self.basis.top(i)

    def lift(self, fld: GF) -> "FlagFq":
        return FlagFq(self.basis.lift(fld))

    @classmethod
    def standard(cls, n: int, fld: GF | int) -> "FlagFq":
        """``F_i = <e_1, ..., e_i>``: the last ``i`` columns."""
        fld = fld if isinstance(fld, GF) else field(fld)
        return cls(anti_identity(n, fld))

    @classmethod
    def opposite(cls, n: int, fld: GF | int) -> "FlagFq":
        """``E_i = <e_n, ..., e_{n+1-i}>``: the first ``i`` columns."""
        fld = fld if isinstance(fld, GF) else field(fld)
        return cls(FqMatrix(np.eye(n, dtype=np.int64), fld))

    @classmethod
    def random(cls, n: int, fld: GF | int, rng: np.random.Generator, prime_subfield: bool = True) -> "FlagFq":
        """Uniformly random flag from a uniformly random invertible matrix (by rejection)."""
        fld = fld if isinstance(fld, GF) else field(fld)
        hi = fld.p if prime_subfield else fld.q
        while True:
            M = FqMatrix(rng.integers(0, hi, size=(n, n)), fld)
            if M.rank() == n:
                return cls(M)

    @classmethod
    def random_orthogonal(cls, n_param: int, fld: GF | int, rng: np.random.Generator,
                          prime_subfield: bool = True, max_tries: int = 1000) -> "FlagFq":
        """Random flag in ``GF(q)^(2n+1)`` with ``F_i^perp = F_{2n+1-i}`` for the reverse form.

        The basis is built in hyperbolic pairs: a random isotropic ``g_a`` from the
        orthogonal complement of the pairs chosen so far, then a partner ``g_{N+1-a}``
        with ``<g_a, g_{N+1-a}> = 1``.  The last vector spans what is left and is scaled
        so its square is 1, which makes the Gram matrix the anti-identity.
        """
        fld = fld if isinstance(fld, GF) else field(fld)
        if fld.p == 2:
            raise ValueError("orthogonal flags need odd characteristic")
        N = 2 * n_param + 1
        hi = fld.p if prime_subfield else fld.q
        add, mul, neg, inv = fld.tables()
        for _ in range(max_tries):
            G = np.zeros((N, N), dtype=np.int64)
            ok = True
            for a in range(n_param):
                used = [G[b] for b in range(a)] + [G[N - 1 - b] for b in range(a)]
                W = _perp_basis(used, N, fld)
                x = _random_isotropic(W, fld, rng, hi)
                if x is None:
                    ok = False
                    break
                y = None
                for _ in range(64):
                    cand = _combine(W, rng.integers(0, hi, size=W.shape[0]), fld)
                    if _dot(x, cand[::-1], fld):
                        y = cand
                        break
                if y is None:
                    ok = False
                    break
                y = mul[inv[_dot(x, y[::-1], fld)], y]
                # y - (<y,y>/2) x is isotropic and still pairs to 1 with x
                half = mul[_dot(y, y[::-1], fld), inv[add[1, 1]]]
                h = add[y, mul[neg[half], x]]
                G[a], G[N - 1 - a] = x, h
            if not ok:
                continue
            used = [G[b] for b in range(n_param)] + [G[N - 1 - b] for b in range(n_param)]
            m = _perp_basis(used, N, fld)[0]
            c = _dot(m, m[::-1], fld)
            root = fld.sqrt_t[inv[c]] if c else -1
            if root < 0:
                continue
            G[n_param] = mul[root, m]
            return cls(FqMatrix(G, fld))
        raise RuntimeError("could not complete an orthogonal flag")

    def is_orthogonal(self) -> bool:
        """``<g_a, g_b> = 0`` whenever ``a + b <= N``, i.e. ``F_i`` is orthogonal to ``F_{N-i}``."""
        Gm = gram(self.basis).data
        N = self.n
        return all(Gm[a, b] == 0 for a in range(N) for b in range(N - 1 - a))

    def to_json(self) -> dict:
        return {"q": self.field.q, "basis": self.basis.tolist()}

    @classmethod
    def from_json(cls, d: dict) -> "FlagFq":
        return cls(FqMatrix(d["basis"], d["q"]))

    def __eq__(self, other):
        return isinstance(other, FlagFq) and other.basis == self.basis

    def __repr__(self) -> str:
        return f"FlagFq(GF({self.field.q}), {self.basis.tolist()})"


def _perp_basis(vectors: list[np.ndarray], N: int, fld: GF) -> np.ndarray:
    if not vectors:
        return np.eye(N, dtype=np.int64)
    S = FqMatrix(np.array([v[::-1] for v in vectors], dtype=np.int64), fld)
    return annihilator(S).data


def _combine(W: np.ndarray, coeffs: np.ndarray, fld: GF) -> np.ndarray:
    v = np.zeros(W.shape[1], dtype=np.int64)
    for c, row in zip(coeffs, W):
        if c:
            v = fld.add_t[v, fld.mul_t[c, row]]
    return v


def _random_isotropic(W: np.ndarray, fld: GF, rng: np.random.Generator, hi: int, tries: int = 10_000):
    for _ in range(tries):
        v = _combine(W, rng.integers(0, hi, size=W.shape[0]), fld)
        if v.any() and _dot(v, v[::-1], fld) == 0:
            return v
    return None


def adapt_to(flag: FlagFq) -> tuple[FqMatrix, FqMatrix]:
    """Coordinate change ``T`` taking ``flag`` to the standard flag, and its inverse.

    Row vectors transform as ``x -> x T``.  When ``flag`` has anti-identity Gram
    matrix, ``T`` also preserves the reverse form.
    """
    J = anti_identity(flag.n, flag.field)
    T = inverse(flag.basis) @ J
    return T, J @ flag.basis


def is_isotropic(V: FqMatrix, n_param: int) -> bool:
    """Whether every pair of rows of ``V`` pairs to zero under the reverse form on ``2n+1`` coordinates."""
    if V.field.p == 2:
        raise ValueError("isotropy is only supported in odd characteristic")
    if V.cols != 2 * n_param + 1:
        raise ValueError(f"expected vectors of length {2 * n_param + 1}, got {V.cols}")
    return not gram(V).data.any()
