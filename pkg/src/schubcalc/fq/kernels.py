"""Hot loops of the finite-field oracle, in numba and in vectorized numpy.

Every kernel takes the field as lookup tables (``add``, ``mul``, ``neg``, ``inv``
and, for quadratic solving, ``sqrt``), so one compiled kernel serves every GF(q).
Matrices hold field elements as int64.

Conditions are passed as a stack of annihilator matrices ``anns[c]`` (zero-padded to
``N`` rows) with bounds ``maxrank[c]``: a row space ``W`` passes condition ``c`` iff
``rank(W @ anns[c].T) <= maxrank[c]``, which says ``dim(W cap A_c) >= k - maxrank[c]``.
"""

from __future__ import annotations

import numpy as np

from .._accel import BACKEND, HAVE_NUMBA, njit

# ---------------------------------------------------------------- numba kernels


@njit(cache=True)
def _rank_inplace(A, nr, nc, add, mul, neg, inv):
    r = 0
    for c in range(nc):
        piv = -1
        for i in range(r, nr):
            if A[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, nc):
                t = A[r, j]
                A[r, j] = A[piv, j]
                A[piv, j] = t
        iv = inv[A[r, c]]
        for j in range(c, nc):
            A[r, j] = mul[A[r, j], iv]
        for i in range(r + 1, nr):
            f = A[i, c]
            if f != 0:
                nf = neg[f]
                for j in range(c, nc):
                    A[i, j] = add[A[i, j], mul[nf, A[r, j]]]
        r += 1
        if r == nr:
            break
    return r


@njit(cache=True)
def _rref_inplace(A, nr, nc, add, mul, neg, inv):
    """Gauss-Jordan with leftmost pivots, top to bottom; returns the rank."""
    r = 0
    for c in range(nc):
        piv = -1
        for i in range(r, nr):
            if A[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(nc):
                t = A[r, j]
                A[r, j] = A[piv, j]
                A[piv, j] = t
        iv = inv[A[r, c]]
        for j in range(nc):
            A[r, j] = mul[A[r, j], iv]
        for i in range(nr):
            if i != r:
                f = A[i, c]
                if f != 0:
                    nf = neg[f]
                    for j in range(nc):
                        A[i, j] = add[A[i, j], mul[nf, A[r, j]]]
        r += 1
        if r == nr:
            break
    return r


@njit(cache=True)
def rank_batch_nb(mats, add, mul, neg, inv):
    B, nr, nc = mats.shape
    out = np.zeros(B, dtype=np.int64)
    A = np.empty((nr, nc), dtype=np.int64)
    for b in range(B):
        for i in range(nr):
            for j in range(nc):
                A[i, j] = mats[b, i, j]
        out[b] = _rank_inplace(A, nr, nc, add, mul, neg, inv)
    return out


@njit(cache=True)
def rref_batch_nb(mats, add, mul, neg, inv):
    B, nr, nc = mats.shape
    out = mats.copy()
    ranks = np.zeros(B, dtype=np.int64)
    for b in range(B):
        ranks[b] = _rref_inplace(out[b], nr, nc, add, mul, neg, inv)
    return out, ranks


@njit(cache=True)
def _passes(W, k, N, anns, maxrank, P, add, mul, neg, inv):
    C = anns.shape[0]
    R = anns.shape[1]
    for c in range(C):
        for i in range(k):
            for j in range(R):
                s = 0
                for t in range(N):
                    a = W[i, t]
                    if a != 0:
                        b = anns[c, j, t]
                        if b != 0:
                            s = add[s, mul[a, b]]
                P[i, j] = s
        if _rank_inplace(P, k, R, add, mul, neg, inv) > maxrank[c]:
            return False
    return True


@njit(cache=True, nogil=True)
def gr_cell_count_nb(k, N, pivots, star_rows, star_cols, q, add, mul, neg, inv, anns, maxrank, keep):
    """Count points of one RREF cell passing every condition; keep up to ``keep`` of them."""
    d = star_rows.shape[0]
    W = np.zeros((k, N), dtype=np.int64)
    for i in range(k):
        W[i, pivots[i]] = 1
    P = np.zeros((k, anns.shape[1]), dtype=np.int64)
    digits = np.zeros(d, dtype=np.int64)
    kept = np.zeros((keep, k, N), dtype=np.int64)
    count = 0
    while True:
        for s in range(d):
            W[star_rows[s], star_cols[s]] = digits[s]
        if _passes(W, k, N, anns, maxrank, P, add, mul, neg, inv):
            if count < keep:
                kept[count] = W
            count += 1
        pos = 0
        while pos < d:
            digits[pos] += 1
            if digits[pos] < q:
                break
            digits[pos] = 0
            pos += 1
        if pos == d:
            break
    return count, kept


@njit(cache=True)
def _pair(u, v, N, add, mul):
    s = 0
    for c in range(N):
        a = u[c]
        if a != 0:
            b = v[N - 1 - c]
            if b != 0:
                s = add[s, mul[a, b]]
    return s


@njit(cache=True)
def _setup_row(b, W, N, pivots, star_start, star_cols, add, mul, neg, inv, x0, null, nfree):
    """Solve the linear conditions <W_a, row_b> = 0 (a < b) for the stars of row ``b``.

    Fills the particular solution ``x0[b]`` and null vectors ``null[b, t]``; sets
    ``nfree[b] = -1`` when the system is inconsistent.
    """
    s0 = star_start[b]
    m = star_start[b + 1] - s0
    E = np.zeros((max(b, 1), m + 1), dtype=np.int64)
    for a in range(b):
        for s in range(m):
            E[a, s] = W[a, N - 1 - star_cols[s0 + s]]
        E[a, m] = neg[W[a, N - 1 - pivots[b]]]
    rank = _rref_inplace(E, b, m + 1, add, mul, neg, inv) if b > 0 else 0
    pivcol = np.full(max(rank, 1), -1, dtype=np.int64)
    for i in range(rank):
        c = 0
        while E[i, c] == 0:
            c += 1
        if c == m:
            nfree[b] = -1
            return
        pivcol[i] = c
    isfree = np.ones(m, dtype=np.bool_)
    for i in range(rank):
        isfree[pivcol[i]] = False
    for s in range(m):
        x0[b, s] = 0
    for i in range(rank):
        x0[b, pivcol[i]] = E[i, m]
    f = 0
    for j in range(m):
        if isfree[j]:
            for s in range(m):
                null[b, f, s] = 0
            null[b, f, j] = 1
            for i in range(rank):
                null[b, f, pivcol[i]] = neg[E[i, j]]
            f += 1
    nfree[b] = f


@njit(cache=True)
def _fill_row(b, W, N, pivots, star_start, star_cols, x0, null, nfree, ctr, last, add, mul):
    s0 = star_start[b]
    m = star_start[b + 1] - s0
    f = nfree[b]
    for c in range(N):
        W[b, c] = 0
    W[b, pivots[b]] = 1
    for s in range(m):
        v = x0[b, s]
        for t in range(f - 1):
            if ctr[b, t] != 0:
                v = add[v, mul[ctr[b, t], null[b, t, s]]]
        if f > 0 and last != 0:
            v = add[v, mul[last, null[b, f - 1, s]]]
        W[b, star_cols[s0 + s]] = v


@njit(cache=True, nogil=True)
def og_cells_count_nb(k, N, pivots, star_start, star_cols, q, add, mul, neg, inv, sqrt, anns, maxrank, keep):
    """Count isotropic points (reverse form) of one RREF cell passing every condition.

    Rows are chosen top to bottom.  Pairings with earlier rows are linear in the
    stars of the current row; the self-pairing is quadratic and is solved for the
    last free parameter with a square-root table (odd characteristic).
    """
    W = np.zeros((k, N), dtype=np.int64)
    P = np.zeros((k, anns.shape[1]), dtype=np.int64)
    x0 = np.zeros((k, N), dtype=np.int64)
    null = np.zeros((k, N, N), dtype=np.int64)
    nfree = np.zeros(k, dtype=np.int64)
    ctr = np.zeros((k, N), dtype=np.int64)
    started = np.zeros(k, dtype=np.int64)
    roots = np.zeros((k, q), dtype=np.int64)
    nroots = np.zeros(k, dtype=np.int64)
    ridx = np.zeros(k, dtype=np.int64)
    d = np.zeros(N, dtype=np.int64)
    kept = np.zeros((keep, k, N), dtype=np.int64)
    two = add[1, 1]
    count = 0

    level = 0
    _setup_row(0, W, N, pivots, star_start, star_cols, add, mul, neg, inv, x0, null, nfree)
    started[0] = 0
    nroots[0] = 0
    ridx[0] = 0
    while level >= 0:
        b = level
        advanced = False
        if nfree[b] >= 0:
            while True:
                if ridx[b] < nroots[b]:
                    _fill_row(b, W, N, pivots, star_start, star_cols, x0, null, nfree, ctr, roots[b, ridx[b]], add, mul)
                    ridx[b] += 1
                    advanced = True
                    break
                f = nfree[b]
                nd = f - 1 if f > 0 else 0
                if started[b] == 0:
                    started[b] = 1
                    for t in range(nd):
                        ctr[b, t] = 0
                else:
                    pos = 0
                    while pos < nd:
                        ctr[b, pos] += 1
                        if ctr[b, pos] < q:
                            break
                        ctr[b, pos] = 0
                        pos += 1
                    if pos == nd:
                        break
                # quadratic in the last free parameter: alpha t^2 + beta t + gamma
                _fill_row(b, W, N, pivots, star_start, star_cols, x0, null, nfree, ctr, 0, add, mul)
                gamma = _pair(W[b], W[b], N, add, mul)
                ridx[b] = 0
                if f == 0:
                    nroots[b] = 1 if gamma == 0 else 0
                    roots[b, 0] = 0
                    continue
                for c in range(N):
                    d[c] = 0
                s0 = star_start[b]
                for s in range(star_start[b + 1] - s0):
                    d[star_cols[s0 + s]] = null[b, f - 1, s]
                alpha = _pair(d, d, N, add, mul)
                cross = _pair(W[b], d, N, add, mul)
                beta = add[cross, cross]
                if alpha == 0:
                    if beta == 0:
                        if gamma == 0:
                            for t in range(q):
                                roots[b, t] = t
                            nroots[b] = q
                        else:
                            nroots[b] = 0
                    else:
                        roots[b, 0] = mul[neg[gamma], inv[beta]]
                        nroots[b] = 1
                else:
                    disc = add[mul[beta, beta], neg[mul[mul[two, two], mul[alpha, gamma]]]]
                    sq = sqrt[disc]
                    if sq < 0:
                        nroots[b] = 0
                    else:
                        den = inv[mul[two, alpha]]
                        roots[b, 0] = mul[add[neg[beta], sq], den]
                        if sq == 0:
                            nroots[b] = 1
                        else:
                            roots[b, 1] = mul[add[neg[beta], neg[sq]], den]
                            nroots[b] = 2
        if not advanced:
            level -= 1
            continue
        if b == k - 1:
            if _passes(W, k, N, anns, maxrank, P, add, mul, neg, inv):
                if count < keep:
                    kept[count] = W
                count += 1
        else:
            level += 1
            nb = level
            _setup_row(nb, W, N, pivots, star_start, star_cols, add, mul, neg, inv, x0, null, nfree)
            started[nb] = 0
            nroots[nb] = 0
            ridx[nb] = 0
    return count, kept


# ---------------------------------------------------------------- numpy kernels


def rref_batch_np(mats, add, mul, neg, inv):
    A = np.array(mats, dtype=np.int64, copy=True)
    B, nr, nc = A.shape
    rank = np.zeros(B, dtype=np.int64)
    idx = np.arange(B)
    for c in range(nc):
        active = rank < nr
        rows = np.arange(nr)[None, :]
        cand = (A[:, :, c] != 0) & (rows >= rank[:, None]) & active[:, None]
        has = cand.any(axis=1)
        if not has.any():
            continue
        piv = np.argmax(cand, axis=1)
        b = idx[has]
        pr, rr = piv[has], rank[has]
        tmp = A[b, pr].copy()
        A[b, pr] = A[b, rr]
        A[b, rr] = tmp
        iv = inv[A[b, rr, c]]
        A[b, rr] = mul[A[b, rr], iv[:, None]]
        prow = A[b, rr]
        f = A[b, :, c].copy()
        f[np.arange(len(b)), rr] = 0
        A[b] = add[A[b], mul[neg[f][:, :, None], prow[:, None, :]]]
        rank[has] += 1
    return A, rank


def rank_batch_np(mats, add, mul, neg, inv):
    return rref_batch_np(mats, add, mul, neg, inv)[1]


def _passes_np(Ws, anns, maxrank, add, mul, neg, inv):
    ok = np.ones(len(Ws), dtype=bool)
    for c in range(anns.shape[0]):
        if not ok.any():
            break
        sel = np.nonzero(ok)[0]
        P = np.zeros((len(sel), Ws.shape[1], anns.shape[1]), dtype=np.int64)
        for t in range(Ws.shape[2]):
            P = add[P, mul[Ws[sel, :, t][:, :, None], anns[c, :, t][None, None, :]]]
        r = rank_batch_np(P, add, mul, neg, inv)
        ok[sel[r > maxrank[c]]] = False
    return ok


def cell_points_np(k, N, pivots, star_rows, star_cols, q, start, stop):
    """Points ``start .. stop-1`` of an RREF cell as a (B, k, N) array."""
    d = len(star_rows)
    ids = np.arange(start, stop, dtype=np.int64)
    W = np.zeros((len(ids), k, N), dtype=np.int64)
    W[:, np.arange(k), pivots] = 1
    for s in range(d):
        W[:, star_rows[s], star_cols[s]] = (ids // q**s) % q
    return W


def gr_cell_count_np(k, N, pivots, star_rows, star_cols, q, add, mul, neg, inv, anns, maxrank, keep, chunk=1 << 15):
    total = q ** len(star_rows)
    count = 0
    kept = np.zeros((keep, k, N), dtype=np.int64)
    for start in range(0, total, chunk):
        W = cell_points_np(k, N, pivots, star_rows, star_cols, q, start, min(total, start + chunk))
        ok = _passes_np(W, anns, maxrank, add, mul, neg, inv)
        good = W[ok]
        take = min(keep - min(count, keep), len(good))
        if take > 0:
            kept[count:count + take] = good[:take]
        count += len(good)
    return count, kept


def _pair_np(U, V, add, mul):
    """Reverse-form pairing of matching rows of U and V (arrays of shape (B, N))."""
    N = U.shape[-1]
    s = np.zeros(U.shape[:-1], dtype=np.int64)
    for c in range(N):
        s = add[s, mul[U[..., c], V[..., N - 1 - c]]]
    return s


def og_cells_count_np(k, N, pivots, star_start, star_cols, q, add, mul, neg, inv, sqrt, anns, maxrank, keep,
                      budget=1 << 22):
    """Row-by-row breadth-first search, testing every star assignment of each row.

    Cost grows like ``q^(stars per row)`` times the number of partial solutions, so
    this path is only practical for small fields.
    """
    partial = np.zeros((1, 0, N), dtype=np.int64)
    for b in range(k):
        s0, s1 = star_start[b], star_start[b + 1]
        m = s1 - s0
        total = q**m
        chunk = max(1, budget // max(1, len(partial)))
        nxt = []
        for start in range(0, total, chunk):
            ids = np.arange(start, min(total, start + chunk), dtype=np.int64)
            rows = np.zeros((len(ids), N), dtype=np.int64)
            rows[:, pivots[b]] = 1
            for s in range(m):
                rows[:, star_cols[s0 + s]] = (ids // q**s) % q
            rows = rows[_pair_np(rows, rows, add, mul) == 0]
            if not len(rows):
                continue
            # every earlier row must pair to zero with the new row
            good = np.ones((len(partial), len(rows)), dtype=bool)
            for a in range(b):
                good &= _pair_np(partial[:, a, None, :], rows[None, :, :], add, mul) == 0
            pi, ri = np.nonzero(good)
            if len(pi):
                nxt.append(np.concatenate([partial[pi], rows[ri][:, None, :]], axis=1))
        partial = np.concatenate(nxt) if nxt else np.zeros((0, b + 1, N), dtype=np.int64)
        if not len(partial):
            break
    if len(partial) and partial.shape[1] == k:
        ok = _passes_np(partial, anns, maxrank, add, mul, neg, inv)
        good = partial[ok]
    else:
        good = np.zeros((0, k, N), dtype=np.int64)
    kept = np.zeros((keep, k, N), dtype=np.int64)
    take = min(keep, len(good))
    kept[:take] = good[:take]
    return len(good), kept


# ---------------------------------------------------------------- dispatch

if BACKEND == "numba":
    rank_batch = rank_batch_nb
    rref_batch = rref_batch_nb
    gr_cell_count = gr_cell_count_nb
    og_cells_count = og_cells_count_nb
else:
    rank_batch = rank_batch_np
    rref_batch = rref_batch_np
    gr_cell_count = gr_cell_count_np
    og_cells_count = og_cells_count_np

__all__ = [
    "BACKEND", "HAVE_NUMBA", "rank_batch", "rref_batch", "gr_cell_count", "og_cells_count",
    "rank_batch_nb", "rref_batch_nb", "gr_cell_count_nb", "og_cells_count_nb",
    "rank_batch_np", "rref_batch_np", "gr_cell_count_np", "og_cells_count_np", "cell_points_np",
]
