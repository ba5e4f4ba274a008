"""Young tableaux on skew shapes, Yamanouchi words and Littlewood-Richardson enumeration."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded
from .partitions import Partition, SkewShape, format_partition, parse_partition, partitions_between

DEFAULT_CAP = 10**6

Word = tuple[int, ...]


@dataclass(frozen=True)
class Tableau:
    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        want = [hi - lo + 1 for lo, hi in self.shape.row_bounds()]
        got = [len(r) for r in rows]
        if want != got:
            raise ValueError(f"row lengths {got} do not match skew shape {want}")
        if any(x < 1 for r in rows for x in r):
            raise ValueError("tableau entries must be positive")

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]], outer=None, inner=()) -> "Tableau":
        rows = [tuple(r) for r in rows]
        inner = Partition(inner)
        if outer is None:
            outer = [inner.part(i + 1) + len(r) for i, r in enumerate(rows)]
        return cls(SkewShape.of(outer, inner), tuple(rows))

    def entry(self, row: int, col: int) -> int:
        lo = self.shape.inner.part(row) + 1
        return self.rows[row - 1][col - lo]

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        for r, (lo, _) in enumerate(self.shape.row_bounds(), start=1):
            for j, x in enumerate(self.rows[r - 1]):
                yield (r, lo + j), x

    def to_json(self) -> str:
        return json.dumps({"outer": format_partition(self.shape.outer),
                           "inner": format_partition(self.shape.inner),
                           "rows": [list(r) for r in self.rows]})

    @classmethod
    def from_json(cls, text: str) -> "Tableau":
        d = json.loads(text)
        return cls(SkewShape.of(parse_partition(d["outer"]), parse_partition(d["inner"])),
                   tuple(tuple(r) for r in d["rows"]))

    def __str__(self) -> str:
        lines = []
        for (lo, _), r in zip(self.shape.row_bounds(), self.rows):
            lines.append(" ".join(["."] * (lo - 1) + [str(x) for x in r]))
        return "\n".join(lines)


def is_semistandard(t: Tableau) -> bool:
    cells = dict(t.items())
    for (r, c), x in cells.items():
        right = cells.get((r, c + 1))
        if right is not None and right < x:
            return False
        below = cells.get((r + 1, c))
        if below is not None and below <= x:
            return False
    return True


def reading_word(t: Tableau) -> Word:
    return tuple(x for row in reversed(t.rows) for x in row)


def is_yamanouchi(w: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for x in reversed(w):
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


def content(t: Tableau) -> tuple[int, ...]:
    letters = [x for r in t.rows for x in r]
    if not letters:
        return ()
    out = [0] * max(letters)
    for x in letters:
        out[x - 1] += 1
    return tuple(out)


def _lr_fillings(outer: Partition, inner: Partition, mu: Partition) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield LR fillings row by row.

    Cells are visited in reverse reading order (top row first, each row right to
    left), so the Yamanouchi condition is checked on growing suffixes.
    """
    bounds = [(inner.part(r) + 1, p) for r, p in enumerate(outer, start=1)]
    nrows = len(bounds)
    grid = [[0] * (hi + 1) for _, hi in bounds]
    remaining = list(mu)
    seen = [0] * (len(mu) + 1)
    m = len(mu)
    order = [(r, c) for r in range(nrows) for c in range(bounds[r][1], bounds[r][0] - 1, -1)]

    def rec(idx: int):
        if idx == len(order):
            yield tuple(tuple(grid[r][lo:hi + 1]) for r, (lo, hi) in enumerate(bounds))
            return
        r, c = order[idx]
        lo, hi = bounds[r]
        upper = m
        if c < hi:
            upper = min(upper, grid[r][c + 1])
        lower = 1
        if r > 0 and c <= bounds[r - 1][1] and c >= bounds[r - 1][0]:
            lower = grid[r - 1][c] + 1
        # by induction on rows, the largest letter seen before row r is r
        upper = min(upper, r + 1)
        for v in range(lower, upper + 1):
            if not remaining[v - 1]:
                continue
            if v > 1 and seen[v] + 1 > seen[v - 1]:
                continue
            remaining[v - 1] -= 1
            seen[v] += 1
            grid[r][c] = v
            yield from rec(idx + 1)
            seen[v] -= 1
            remaining[v - 1] += 1
        grid[r][c] = 0

    # seen is indexed by letter; seen[0] is a sentinel that is never compared
    seen[0] = 10**9
    yield from rec(0)


def enumerate_lr_tableaux(shape: SkewShape, mu: Partition, cap: int = DEFAULT_CAP) -> list[Tableau]:
    mu = Partition(mu)
    if shape.size() != mu.size():
        return []
    out = []
    for rows in _lr_fillings(shape.outer, shape.inner, mu):
        out.append(Tableau(shape, rows))
        if len(out) > cap:
            raise CapExceeded("LR tableau list", cap)
    out.sort(key=lambda t: t.rows)
    return out


@lru_cache(maxsize=None)
def lr_tableau_count(outer: Partition, inner: Partition, mu: Partition) -> int:
    outer, inner, mu = Partition(outer), Partition(inner), Partition(mu)
    if not outer.contains(inner) or outer.size() - inner.size() != mu.size():
        return 0
    return sum(1 for _ in _lr_fillings(outer, inner, mu))


def _check_chain_sizes(contents: Sequence[Partition], total: Partition) -> None:
    s = sum(Partition(c).size() for c in contents)
    if s != Partition(total).size():
        raise ValueError(f"contents have total size {s} but the target shape has size {Partition(total).size()}")


def enumerate_lr_chains(contents: Sequence[Partition], total: Partition) -> int:
    """Number of LR tableau chains with the given contents filling ``total``."""
    contents = [Partition(c) for c in contents]
    total = Partition(total)
    _check_chain_sizes(contents, total)
    layer: dict[Partition, int] = {Partition(): 1}
    for mu in contents:
        nxt: dict[Partition, int] = {}
        for inner, ways in layer.items():
            for nu in partitions_between(total, inner, inner.size() + mu.size()):
                c = lr_tableau_count(nu, inner, mu)
                if c:
                    nxt[nu] = nxt.get(nu, 0) + ways * c
        layer = nxt
    return layer.get(total, 0)


def iter_lr_chains(contents: Sequence[Partition], total: Partition) -> Iterator[tuple[Tableau, ...]]:
    """The chains themselves, in canonical order (lexicographic in the tableau sequence)."""
    contents = [Partition(c) for c in contents]
    total = Partition(total)
    _check_chain_sizes(contents, total)

    def rec(j: int, inner: Partition):
        if j == len(contents):
            if inner == total:
                yield ()
            return
        mu = contents[j]
        steps = []
        for nu in partitions_between(total, inner, inner.size() + mu.size()):
            for t in enumerate_lr_tableaux(SkewShape(nu, inner), mu):
                steps.append(t)
        steps.sort(key=lambda t: (t.shape.outer, t.rows))
        for t in steps:
            for rest in rec(j + 1, t.shape.outer):
                yield (t,) + rest

    yield from rec(0, Partition())


def enumerate_syt(lam: Partition, cap: int = DEFAULT_CAP) -> list[Tableau]:
    lam = Partition(lam)
    m = lam.size()
    grid = [[0] * p for p in lam]
    filled = [0] * len(lam)
    out: list[Tableau] = []

    def rec(v: int):
        if v > m:
            out.append(Tableau(SkewShape(lam, Partition()), tuple(tuple(r) for r in grid)))
            if len(out) > cap:
                raise CapExceeded("standard tableau list", cap)
            return
        for r in range(len(lam)):
            c = filled[r]
            if c < lam[r] and (r == 0 or filled[r - 1] > c):
                grid[r][c] = v
                filled[r] += 1
                rec(v + 1)
                filled[r] -= 1

    rec(1)
    out.sort(key=lambda t: t.rows)
    return out

