"""Counting points of Schubert intersections over finite fields.

One flag is moved to standard position; the points satisfying its condition are
exactly the Schubert cells ``mu ⊇ lam`` of that flag, which are enumerated
directly.  The remaining flags become rank conditions checked inside the kernels.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Callable, Sequence

import numpy as np

from ..errors import CapExceeded
from ..partitions import AmbientRectangle, Partition, cell_dimension, double, fits_in, format_partition, \
    partitions_between, ShiftedPartition, shifted_partitions_in_triangle, staircase
from .field import GF, field
from .flags import FlagFq, adapt_to
from .kernels import gr_cell_count, og_cells_count
from .linalg import FqMatrix, annihilator, cell_pattern

DEFAULT_CAP = 10**8


def splitting_degree(c: int) -> int:
    """Extension degree over which every zero-dimensional scheme of degree ``c`` splits completely."""
    return math.lcm(*range(1, max(c, 1) + 1))


def _conditions(flags: Sequence[FlagFq], lambdas: Sequence[Partition], T: FqMatrix, k: int, N: int):
    """Annihilator stack and rank bounds for ``dim(V cap F_r) >= i`` in adapted coordinates."""
    anns, bounds = [], []
    for F, lam in zip(flags, lambdas):
        basis = F.basis @ T
        for i in range(1, k + 1):
            li = lam.part(i)
            if li == 0:
                continue
            r = N - k + i - li
            A = annihilator(basis.top(r)).data
            pad = np.zeros((N, N), dtype=np.int64)
            pad[:len(A)] = A
            anns.append(pad)
            bounds.append(k - i)
    if not anns:
        return np.zeros((0, N, N), dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.array(anns, dtype=np.int64), np.array(bounds, dtype=np.int64)


def _prepare(flags, lambdas, fld: GF | None):
    if len(flags) != len(lambdas):
        raise ValueError("need one partition per flag")
    if not flags:
        raise ValueError("need at least one flag")
    fld = fld or flags[0].field
    flags = [F if F.field == fld else F.lift(fld) for F in flags]
    lead = max(range(len(lambdas)), key=lambda j: (lambdas[j].size(), -j))
    T, Tinv = adapt_to(flags[lead])
    others = [j for j in range(len(flags)) if j != lead]
    return fld, flags, lead, T, Tinv, others


def intersection_points(q: int, n: int, k: int, flags: Sequence[FlagFq], lambdas: Sequence[Partition],
                        field_order: int | None = None, keep: int = 0,
                        cap: int = DEFAULT_CAP) -> tuple[int, list[FqMatrix]]:
    """Count the k-subspaces meeting every Schubert condition; return up to ``keep`` of them.

    Flags over GF(q) are lifted to GF(field_order) when that is given.
    """
    lambdas = [Partition(l) for l in lambdas]
    box = AmbientRectangle(k, n - k)
    for lam in lambdas:
        if not fits_in(lam, box):
            raise ValueError(f"{format_partition(lam) or '-'} does not fit in {k}x{n - k}")
    fld = field(field_order or q)
    fld, flags, lead, T, Tinv, others = _prepare(list(flags), lambdas, fld)
    for F in flags:
        if F.n != n:
            raise ValueError(f"flag lives in dimension {F.n}, expected {n}")
    cells = partitions_between(box.full(), lambdas[lead])
    work = sum(fld.q ** cell_dimension(mu, box) for mu in cells)
    if work > cap:
        raise CapExceeded(f"{work} candidate subspaces", cap)
    anns, bounds = _conditions([flags[j] for j in others], [lambdas[j] for j in others], T, k, n)
    tabs = fld.tables()
    total, kept = 0, []
    for mu in cells:
        piv, sr, sc = cell_pattern(mu, k, n)
        c, pts = gr_cell_count(k, n, piv, sr, sc, fld.q, *tabs, anns, bounds, max(0, keep - len(kept)))
        total += int(c)
        kept.extend(FqMatrix(W, fld) @ Tinv for W in pts[:min(int(c), keep - len(kept))])
    return total, kept


def empirical_intersection(q: int, n: int, k: int, flags: Sequence[FlagFq], lambdas: Sequence[Partition],
                           field_order: int | None = None, cap: int = DEFAULT_CAP) -> int:
    return intersection_points(q, n, k, flags, lambdas, field_order, 0, cap)[0]


def og_intersection_points(q: int, n: int, flags: Sequence[FlagFq], shifted_lambdas: Sequence[ShiftedPartition],
                           field_order: int | None = None, keep: int = 0,
                           cap: int = DEFAULT_CAP) -> tuple[int, list[FqMatrix]]:
    """Isotropic n-subspaces of GF^(2n+1) meeting the doubled-partition conditions of each flag.

    Every Grassmannian cell containing the lead doubled partition is searched,
    including cells that are not symmetric, so an empty result there is observed
    rather than assumed.
    """
    N = 2 * n + 1
    bars = [double(ShiftedPartition(l), n) for l in shifted_lambdas]
    fld = field(field_order or q)
    if fld.p == 2:
        raise ValueError("isotropic subspaces need odd characteristic")
    fld, flags, lead, T, Tinv, others = _prepare(list(flags), bars, fld)
    for F in flags:
        if F.n != N:
            raise ValueError(f"flag lives in dimension {F.n}, expected {N}")
        if not F.is_orthogonal():
            raise ValueError("flag is not orthogonal for the reverse form")
    box = AmbientRectangle(n, n + 1)
    lead_shifted = ShiftedPartition(shifted_lambdas[lead])
    stair = staircase(n)
    work = sum(fld.q ** (stair.size() - nu.size()) for nu in shifted_partitions_in_triangle(n)
               if nu.contains(lead_shifted))
    if work > cap:
        raise CapExceeded(f"{work} isotropic candidates", cap)
    anns, bounds = _conditions([flags[j] for j in others], [bars[j] for j in others], T, n, N)
    tabs = fld.tables()
    total, kept = 0, []
    for mu in partitions_between(box.full(), bars[lead]):
        piv, sr, sc = cell_pattern(mu, n, N)
        start = np.searchsorted(sr, np.arange(n + 1)).astype(np.int64)
        c, pts = og_cells_count(n, N, piv, start, sc, fld.q, *tabs, fld.sqrt_t, anns, bounds,
                                max(0, keep - len(kept)))
        total += int(c)
        kept.extend(FqMatrix(W, fld) @ Tinv for W in pts[:min(int(c), keep - len(kept))])
    return total, kept


def empirical_og_intersection(q: int, n: int, flags: Sequence[FlagFq], shifted_lambdas: Sequence[ShiftedPartition],
                              field_order: int | None = None, cap: int = DEFAULT_CAP) -> int:
    return og_intersection_points(q, n, flags, shifted_lambdas, field_order, 0, cap)[0]


def isotropic_cell_count(q: int, lam_bar: Partition, n: int) -> int:
    """Isotropic points in the standard Schubert cell of ``lam_bar`` in Gr(2n+1, n)."""
    N = 2 * n + 1
    fld = field(q)
    piv, sr, sc = cell_pattern(Partition(lam_bar), n, N)
    start = np.searchsorted(sr, np.arange(n + 1)).astype(np.int64)
    empty = np.zeros((0, N, N), dtype=np.int64)
    c, _ = og_cells_count(n, N, piv, start, sc, fld.q, *fld.tables(), fld.sqrt_t, empty,
                          np.zeros(0, dtype=np.int64), 0)
    return int(c)


def isotropic_cell_count_bruteforce(q: int, lam_bar: Partition, n: int, cap: int = 10**7) -> int:
    """Same count by testing every point of the cell for isotropy."""
    from .grassmannian import iter_cell

    N = 2 * n + 1
    fld = field(q)
    piv, sr, sc = cell_pattern(Partition(lam_bar), n, N)
    if q ** len(sr) > cap:
        raise CapExceeded(f"{q}^{len(sr)} cell points", cap)
    add, mul = fld.add_t, fld.mul_t
    count = 0
    for W in iter_cell(fld, Partition(lam_bar), n, N, chunk=1 << 15):
        G = np.zeros(W.shape[:1] + (n, n), dtype=np.int64)
        for c in range(N):
            G = add[G, mul[W[:, :, None, c], W[:, None, :, N - 1 - c]]]
        count += int((~G.reshape(len(W), -1).any(axis=1)).sum())
    return count


@dataclass
class TrialReport:
    """Counts from repeated random draws; the mode is ``None`` when two values tie."""

    field_order: int
    counts: list[int]
    flag_field: int = 0
    seeds: list[int] = dc_field(default_factory=list)

    @property
    def histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.counts).items()))

    @property
    def modal(self) -> int | None:
        if not self.counts:
            return None
        ranked = Counter(self.counts).most_common()
        if len(ranked) > 1 and ranked[0][1] == ranked[1][1]:
            return None
        return ranked[0][0]

    @property
    def inconclusive(self) -> bool:
        return self.modal is None

    def to_json(self) -> dict:
        return {
            "field": self.field_order,
            "flag_field": self.flag_field,
            "trials": len(self.counts),
            "counts": self.counts,
            "histogram": {str(k): v for k, v in self.histogram.items()},
            "modal": self.modal,
        }

    def __str__(self) -> str:
        hist = ", ".join(f"{k}: {v}" for k, v in self.histogram.items())
        mode = "inconclusive (tie)" if self.modal is None else str(self.modal)
        return f"modal {mode} over {len(self.counts)} trials in GF({self.field_order}); histogram {{{hist}}}"


def _run_trials(one: Callable[[np.random.Generator], int], trials: int, seed: int, threads: int) -> list[int]:
    def task(t: int) -> int:
        return one(np.random.default_rng([seed, t]))

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            return list(pool.map(task, range(trials)))
    return [task(t) for t in range(trials)]


def intersection_trials(q: int, n: int, k: int, lambdas: Sequence[Partition], trials: int = 20, seed: int = 0,
                        ext: int = 1, threads: int = 1, cap: int = DEFAULT_CAP) -> TrialReport:
    """Draw random flags over GF(q) and count solutions over GF(q^ext), ``trials`` times."""
    fld = field(q)
    big = q**ext

    def one(rng):
        flags = [FlagFq.random(n, fld, rng) for _ in lambdas]
        return empirical_intersection(q, n, k, flags, lambdas, big, cap)

    return TrialReport(big, _run_trials(one, trials, seed, threads), q, [seed])


def og_intersection_trials(q: int, n: int, shifted_lambdas: Sequence[ShiftedPartition], trials: int = 20,
                           seed: int = 0, ext: int = 1, threads: int = 1, cap: int = DEFAULT_CAP) -> TrialReport:
    """Random orthogonal flags over GF(q), isotropic solutions counted over GF(q^ext)."""
    fld = field(q)
    big = q**ext

    def one(rng):
        flags = [FlagFq.random_orthogonal(n, fld, rng) for _ in shifted_lambdas]
        return empirical_og_intersection(q, n, flags, shifted_lambdas, big, cap)

    return TrialReport(big, _run_trials(one, trials, seed, threads), q, [seed])
