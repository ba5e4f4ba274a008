"""Matrices over GF(q), echelon forms, Schubert-cell patterns and Pluecker coordinates.

Column ``j`` (1-indexed, left to right) of an ``n``-column matrix carries the
coordinate of the unit vector ``e_{n+1-j}``: ``e_1`` is the last column.  Echelon
forms put pivots in increasing column order from the bottom row to the top row.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from ..partitions import AmbientRectangle, Partition, fits_in, format_partition
from .field import GF, field
from .kernels import rank_batch, rref_batch


class FqMatrix:
    __slots__ = ("data", "field")

    def __init__(self, data, fld: GF | int):
        self.field = fld if isinstance(fld, GF) else field(fld)
        arr = np.array(data, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise ValueError("FqMatrix needs a 2-d array")
        if arr.size and (arr.min() < 0 or arr.max() >= self.field.q):
            raise ValueError(f"entries must be field elements 0..{self.field.q - 1}")
        self.data = arr

    @classmethod
    def from_ints(cls, rows: Iterable[Iterable[int]], fld: GF | int) -> "FqMatrix":
        """Reduce integer entries into the prime subfield."""
        fld = fld if isinstance(fld, GF) else field(fld)
        return cls(np.array([[int(x) % fld.p for x in r] for r in rows], dtype=np.int64), fld)

    @classmethod
    def zeros(cls, r: int, c: int, fld: GF | int) -> "FqMatrix":
        return cls(np.zeros((r, c), dtype=np.int64), fld)

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def _tables(self):
        return self.field.tables()

    def __matmul__(self, other: "FqMatrix") -> "FqMatrix":
        if other.field != self.field:
            raise ValueError("matrices over different fields")
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        add, mul, _, _ = self._tables()
        out = np.zeros((self.rows, other.cols), dtype=np.int64)
        for t in range(self.cols):
            out = add[out, mul[self.data[:, t, None], other.data[None, t, :]]]
        return FqMatrix(out, self.field)

    def stack(self, other: "FqMatrix") -> "FqMatrix":
        if other.field != self.field or other.cols != self.cols:
            raise ValueError("cannot stack matrices of different widths or fields")
        return FqMatrix(np.vstack([self.data, other.data]), self.field)

    def top(self, r: int) -> "FqMatrix":
        return FqMatrix(self.data[:r], self.field)

    def lift(self, fld: GF) -> "FqMatrix":
        """The same matrix over an extension field (entries must lie in the prime subfield)."""
        if fld.p != self.field.p or fld.e % self.field.e:
            raise ValueError(f"GF({fld.q}) does not contain GF({self.field.q})")
        if self.field.e != 1 and fld != self.field:
            raise ValueError("only prime-field matrices can be lifted")
        return FqMatrix(self.data, fld)

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        return int(rank_batch(self.data[None].copy(), *self._tables())[0])

    def rref(self) -> "FqMatrix":
        return rref(self)

    def pivot_columns(self) -> list[int]:
        """1-indexed column of the leftmost nonzero entry of each nonzero row, top to bottom."""
        out = []
        for row in self.data:
            nz = np.nonzero(row)[0]
            if len(nz):
                out.append(int(nz[0]) + 1)
        return out

    def __eq__(self, other):
        return isinstance(other, FqMatrix) and other.field == self.field and np.array_equal(self.data, other.data)

    def __hash__(self):
        return hash((self.field.q, self.data.tobytes(), self.data.shape))

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    def to_json(self) -> str:
        return json.dumps({"q": self.field.q, "rows": self.tolist()})

    @classmethod
    def from_json(cls, text: str) -> "FqMatrix":
        d = json.loads(text)
        return cls(d["rows"], d["q"])

    def __str__(self) -> str:
        w = max((len(self.field.element_str(x)) for x in self.data.flat), default=1)
        return "\n".join("[" + " ".join(f"{self.field.element_str(x):>{w}}" for x in row) + "]" for row in self.data)

    def __repr__(self) -> str:
        return f"FqMatrix(GF({self.field.q}), {self.tolist()})"


def _std_rref(M: FqMatrix) -> tuple[np.ndarray, int]:
    if M.rows == 0:
        return M.data.copy(), 0
    out, ranks = rref_batch(M.data[None].copy(), *M.field.tables())
    return out[0], int(ranks[0])


def rref(M: FqMatrix) -> FqMatrix:
    """Canonical echelon form: pivots run left to right going up from the bottom row.

    This is the usual reduced row echelon form (pivot columns cleared) with the row
    order reversed, so zero rows, if any, end up on top.
    """
    data, _ = _std_rref(M)
    return FqMatrix(data[::-1].copy(), M.field)


def is_rref(M: FqMatrix) -> bool:
    return M == rref(M)


def row_spans_equal(A: FqMatrix, B: FqMatrix) -> bool:
    r = A.rank()
    return r == B.rank() and A.stack(B).rank() == r


def dim_intersection(V: FqMatrix, F: FqMatrix) -> int:
    return V.rank() + F.rank() - V.stack(F).rank()


def inverse(M: FqMatrix) -> FqMatrix:
    n = M.rows
    if M.cols != n:
        raise ValueError("inverse of a non-square matrix")
    aug = np.hstack([M.data, np.eye(n, dtype=np.int64)])
    out, rank = _std_rref(FqMatrix(aug, M.field))
    if rank < n or not np.array_equal(out[:, :n], np.eye(n, dtype=np.int64)):
        raise ZeroDivisionError("matrix is singular")
    return FqMatrix(out[:, n:].copy(), M.field)


def annihilator(F: FqMatrix) -> FqMatrix:
    """Rows spanning ``{a : F a^T = 0}``, so that ``x`` lies in rowspan(F) iff ``x a^T = 0`` for all rows."""
    n = F.cols
    data, rank = _std_rref(F)
    pivots = []
    for i in range(rank):
        pivots.append(int(np.nonzero(data[i])[0][0]))
    free = [j for j in range(n) if j not in pivots]
    neg = F.field.neg_t
    out = np.zeros((len(free), n), dtype=np.int64)
    for t, j in enumerate(free):
        out[t, j] = 1
        for i, pc in enumerate(pivots):
            out[t, pc] = neg[data[i, j]]
    return FqMatrix(out, F.field)


def cell_pattern(lam: Partition, k: int, n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """0-indexed pivot columns (top row first) and star positions of the cell of ``lam``.

    Row ``i`` has its pivot in column ``k + 1 - i + lam_i`` (1-indexed) and stars in
    the later columns that hold no other pivot.
    """
    lam = Partition(lam)
    box = AmbientRectangle(k, n - k) if 0 < k < n else None
    if box is not None and not fits_in(lam, box):
        raise ValueError(f"{format_partition(lam) or '-'} does not fit in {k}x{n - k}")
    padded = lam.padded(k)
    piv = np.array([k - 1 - i + padded[i] for i in range(k)], dtype=np.int64)  # 0-indexed
    pset = set(piv.tolist())
    sr, sc = [], []
    for i in range(k):
        for c in range(piv[i] + 1, n):
            if c not in pset:
                sr.append(i)
                sc.append(c)
    return piv, np.array(sr, dtype=np.int64), np.array(sc, dtype=np.int64)


def cell_partition(M: FqMatrix, k: int, n: int) -> Partition:
    """Partition indexing the Schubert cell of a full-rank echelon matrix."""
    if M.shape != (k, n):
        raise ValueError(f"expected a {k}x{n} matrix, got {M.shape}")
    if not is_rref(M):
        raise ValueError("matrix is not in the canonical echelon form")
    piv = M.pivot_columns()
    if len(piv) != k:
        raise ValueError("matrix does not have full rank")
    # lam_i = n - k + i - p_i with p_i = n + 1 - c_i counted from the right
    return Partition([piv[i - 1] - k - 1 + i for i in range(1, k + 1)])


def _det_fraction(rows: Sequence[Sequence]) -> Fraction:
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] / m[c][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


def _det_field(block: np.ndarray, fld: GF) -> int:
    add, mul, neg, inv = fld.tables()
    A = block.copy()
    n = A.shape[0]
    det = 1
    for c in range(n):
        nz = [r for r in range(c, n) if A[r, c]]
        if not nz:
            return 0
        piv = nz[0]
        if piv != c:
            A[[c, piv]] = A[[piv, c]]
            det = int(neg[det])
        det = int(mul[det, A[c, c]])
        iv = inv[A[c, c]]
        for r in range(c + 1, n):
            if A[r, c]:
                f = mul[neg[A[r, c]], iv]
                A[r] = add[A[r], mul[f, A[c]]]
    return det


def plucker(M, k: int | None = None, n: int | None = None) -> list:
    """Maximal minors over all column subsets in lexicographic order.

    Integer or rational matrices give exact integers/fractions; an ``FqMatrix``
    gives field elements.
    """
    if isinstance(M, FqMatrix):
        k, n = M.shape if k is None else (k, n)
        if M.shape != (k, n):
            raise ValueError(f"expected a {k}x{n} matrix")
        return [_det_field(M.data[:, list(S)], M.field) for S in combinations(range(n), k)]
    rows = [list(r) for r in M]
    k = len(rows) if k is None else k
    n = len(rows[0]) if n is None else n
    if len(rows) != k or any(len(r) != n for r in rows):
        raise ValueError(f"expected a {k}x{n} matrix")
    out = []
    for S in combinations(range(n), k):
        d = _det_fraction([[r[j] for j in S] for r in rows])
        out.append(int(d) if d.denominator == 1 else d)
    return out


def plucker_index(S: Sequence[int], n: int) -> int:
    """Position of the 1-indexed subset ``S`` in the lexicographic order used by ``plucker``."""
    S = tuple(sorted(S))
    for idx, T in enumerate(combinations(range(1, n + 1), len(S))):
        if T == S:
            return idx
    raise ValueError(f"{S} is not a subset of 1..{n}")
