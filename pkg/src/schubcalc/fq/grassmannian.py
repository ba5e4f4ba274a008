"""Points of Gr(n,k) over GF(q), streamed one Schubert cell at a time."""

from __future__ import annotations

from collections import Counter
from typing import Iterator

import numpy as np

from ..errors import CapExceeded
from ..partitions import AmbientRectangle, Partition, cell_dimension, partitions_in
from .field import GF, field
from .flags import FlagFq
from .kernels import cell_points_np, rank_batch, rref_batch
from .linalg import FqMatrix, cell_pattern, dim_intersection

DEFAULT_CAP = 10**7


def _box(k: int, n: int) -> AmbientRectangle:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return AmbientRectangle(k, n - k)


def cells(k: int, n: int) -> list[Partition]:
    box = _box(k, n)
    return [lam for size in range(box.area() + 1) for lam in partitions_in(box, size)]


def grassmannian_size(q: int, n: int, k: int) -> int:
    """Cell-sum count ``sum_lam q^(k(n-k) - |lam|)``."""
    box = _box(k, n)
    return sum(q ** cell_dimension(lam, box) for lam in cells(k, n))


def iter_cell(q: int | GF, lam: Partition, k: int, n: int, chunk: int = 4096) -> Iterator[np.ndarray]:
    """Arrays of shape (B, k, n) covering the cell of ``lam`` in blocks."""
    fld = q if isinstance(q, GF) else field(q)
    piv, sr, sc = cell_pattern(lam, k, n)
    total = fld.q ** len(sr)
    for start in range(0, total, chunk):
        yield cell_points_np(k, n, piv, sr, sc, fld.q, start, min(total, start + chunk))


def enumerate_grassmannian(q: int, n: int, k: int, cap: int = DEFAULT_CAP) -> Iterator[FqMatrix]:
    """Every k-subspace of GF(q)^n exactly once, as its echelon matrix, cell by cell."""
    fld = field(q)
    total = grassmannian_size(q, n, k)
    if total > cap:
        raise CapExceeded(f"|Gr({n},{k})| over GF({q})", cap)
    for lam in cells(k, n):
        for block in iter_cell(fld, lam, k, n):
            for W in block:
                yield FqMatrix(W, fld)


def count_by_rowspan(q: int, n: int, k: int, cap: int = 2 * 10**6) -> int:
    """Count k-subspaces by brute force: all k x n matrices, keep full rank, dedupe echelon forms."""
    fld = field(q)
    total = q ** (k * n)
    if total > cap:
        raise CapExceeded(f"{q}^{k * n} matrices", cap)
    if k == 0:
        return 1
    seen: set[bytes] = set()
    chunk = 1 << 14
    powers = q ** np.arange(k * n, dtype=np.int64)
    for start in range(0, total, chunk):
        ids = np.arange(start, min(total, start + chunk), dtype=np.int64)
        mats = ((ids[:, None] // powers[None, :]) % q).reshape(-1, k, n)
        red, ranks = rref_batch(mats, *fld.tables())
        for M in red[ranks == k]:
            seen.add(M.tobytes())
    return len(seen)


def _check(V: FqMatrix, F: FlagFq, k: int, n: int) -> None:
    if V.shape != (k, n):
        raise ValueError(f"expected a {k}x{n} matrix, got {V.shape[0]}x{V.shape[1]}")
    if F.n != n:
        raise ValueError(f"flag lives in dimension {F.n}, expected {n}")
    if V.field != F.field:
        raise ValueError("subspace and flag are over different fields")


def schubert_condition(V: FqMatrix, F: FlagFq, lam: Partition, k: int, n: int) -> bool:
    """``dim(V cap F_{n-k+i-lam_i}) >= i`` for ``i = 1..k``."""
    _check(V, F, k, n)
    lam = Partition(lam)
    if lam.length() > k or (lam and lam[0] > n - k):
        raise ValueError(f"{lam} does not fit in {k}x{n - k}")
    for i in range(1, k + 1):
        li = lam.part(i)
        if li and dim_intersection(V, F.subspace(n - k + i - li)) < i:
            return False
    return True


def schubert_position(V: FqMatrix, F: FlagFq, k: int, n: int) -> Partition:
    """The cell of ``V`` relative to ``F``: the largest ``lam`` with ``V`` satisfying its conditions."""
    _check(V, F, k, n)
    dims = [dim_intersection(V, F.subspace(r)) for r in range(n + 1)]
    if dims[n] != k:
        raise ValueError("rows of V are not independent")
    parts = []
    for i in range(1, k + 1):
        p = next(r for r in range(n + 1) if dims[r] >= i)
        parts.append(n - k + i - p)
    return Partition(parts)


def _positions(block: np.ndarray, F: FlagFq, k: int, n: int) -> list[Partition]:
    B = len(block)
    tabs = F.field.tables()
    dims = np.zeros((B, n + 1), dtype=np.int64)
    for r in range(1, n + 1):
        stacked = np.concatenate([block, np.broadcast_to(F.basis.data[:r], (B, r, n))], axis=1)
        dims[:, r] = k + r - rank_batch(np.ascontiguousarray(stacked), *tabs)
    out = []
    for row in dims:
        p = np.searchsorted(row, np.arange(1, k + 1))  # first r with dims[r] >= i
        out.append(Partition([n - k + i - int(p[i - 1]) for i in range(1, k + 1)]))
    return out


def position_census(q: int, n: int, k: int, flags: tuple[FlagFq, FlagFq] | None = None,
                    cap: int = DEFAULT_CAP) -> Counter:
    """Tally of ``(position w.r.t. F, position w.r.t. E)`` over every point of Gr(n,k).

    Defaults to the standard and opposite flags.
    """
    fld = field(q)
    F, E = flags if flags is not None else (FlagFq.standard(n, fld), FlagFq.opposite(n, fld))
    if grassmannian_size(q, n, k) > cap:
        raise CapExceeded(f"|Gr({n},{k})| over GF({q})", cap)
    tally: Counter = Counter()
    for lam in cells(k, n):
        for block in iter_cell(fld, lam, k, n):
            tally.update(zip(_positions(block, F, k, n), _positions(block, E, k, n)))
    return tally


def exhaustive_pairs(census: Counter, lam: Partition, mu: Partition) -> int:
    """Number of points meeting ``lam`` for the first flag and ``mu`` for the second."""
    lam, mu = Partition(lam), Partition(mu)
    return sum(m for (a, b), m in census.items() if a.contains(lam) and b.contains(mu))
