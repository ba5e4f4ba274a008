"""Time the numba kernels against their numpy counterparts.

    python3 benchmarks/bench_kernels.py [--repeat 3]

The numba path gets one untimed warm-up call so JIT compilation is excluded.
Every case also checks that the two backends return the same count.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from schubcalc.fq import FlagFq, field
from schubcalc.fq import kernels as K
from schubcalc.fq.empirical import _conditions, _prepare
from schubcalc.fq.linalg import cell_pattern
from schubcalc.partitions import AmbientRectangle, Partition, ShiftedPartition, double, partitions_between


def gr_case(q: int, n: int, k: int, lambdas: list[Partition], seed: int = 1):
    """Cell-by-cell argument tuples for one random Grassmannian intersection."""
    fld = field(q)
    rng = np.random.default_rng(seed)
    flags = [FlagFq.random(n, fld, rng) for _ in lambdas]
    fld, flags, lead, T, _, others = _prepare(flags, lambdas, fld)
    anns, bounds = _conditions([flags[j] for j in others], [lambdas[j] for j in others], T, k, n)
    calls = []
    for mu in partitions_between(AmbientRectangle(k, n - k).full(), lambdas[lead]):
        piv, sr, sc = cell_pattern(mu, k, n)
        calls.append((k, n, piv, sr, sc, fld.q, *fld.tables(), anns, bounds, 0))
    return calls


def og_cell_case(q: int, lam_bar: Partition, n: int):
    N = 2 * n + 1
    fld = field(q)
    piv, sr, sc = cell_pattern(lam_bar, n, N)
    start = np.searchsorted(sr, np.arange(n + 1)).astype(np.int64)
    empty = np.zeros((0, N, N), dtype=np.int64)
    return [(n, N, piv, start, sc, q, *fld.tables(), fld.sqrt_t, empty, np.zeros(0, dtype=np.int64), 0)]


def og_case(q: int, n: int, classes: list[ShiftedPartition], seed: int = 1, ext: int = 1):
    """Flags drawn over GF(q), points searched over GF(q^ext)."""
    N = 2 * n + 1
    rng = np.random.default_rng(seed)
    flags = [FlagFq.random_orthogonal(n, field(q), rng) for _ in classes]
    bars = [double(c, n) for c in classes]
    fld, flags, lead, T, _, others = _prepare(flags, bars, field(q**ext))
    anns, bounds = _conditions([flags[j] for j in others], [bars[j] for j in others], T, n, N)
    calls = []
    for mu in partitions_between(AmbientRectangle(n, n + 1).full(), bars[lead]):
        piv, sr, sc = cell_pattern(mu, n, N)
        start = np.searchsorted(sr, np.arange(n + 1)).astype(np.int64)
        calls.append((n, N, piv, start, sc, fld.q, *fld.tables(), fld.sqrt_t, anns, bounds, 0))
    return calls


def run_all(kernel, calls) -> int:
    return sum(kernel(*args)[0] for args in calls)


def best_time(kernel, calls, repeat: int, warm: bool) -> tuple[float, int]:
    if warm:
        run_all(kernel, calls)  # compile
    best, total = float("inf"), 0
    for _ in range(repeat):
        t0 = time.perf_counter()
        total = run_all(kernel, calls)
        best = min(best, time.perf_counter() - t0)
    return best, total


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not K.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    one = Partition((1,))
    cases = [
        ("gr cells, Gr(5,2) four (1)s, q=7", "gr", gr_case(7, 5, 2, [one] * 4 + [Partition((2,))])),
        ("gr cells, Gr(6,3) three (2,1)s, q=3", "gr", gr_case(3, 6, 3, [Partition((2, 1))] * 3)),
        ("og cell (4,3,1) in OG(9,4), q=3", "og", og_cell_case(3, Partition((4, 3, 1)), 4)),
        ("og cells, OG(5,2) three (1)s, q=7", "og", og_case(7, 2, [ShiftedPartition((1,))] * 3)),
        ("og cells, OG(7,3) six (1)s, GF(9)", "og", og_case(3, 3, [ShiftedPartition((1,))] * 6, ext=2)),
    ]
    print(f"{'case':42} {'numba s':>10} {'numpy s':>10} {'speedup':>8}  count")
    for name, kind, calls in cases:
        nb = K.gr_cell_count_nb if kind == "gr" else K.og_cells_count_nb
        npk = K.gr_cell_count_np if kind == "gr" else K.og_cells_count_np
        t_nb, c_nb = best_time(nb, calls, args.repeat, True)
        t_np, c_np = best_time(npk, calls, args.repeat, False)
        if c_nb != c_np:
            raise SystemExit(f"{name}: backends disagree ({c_nb} vs {c_np})")
        print(f"{name:42} {t_nb:10.4f} {t_np:10.4f} {t_np / t_nb:8.1f}x  {c_nb}")


if __name__ == "__main__":
    main()
