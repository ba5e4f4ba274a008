"""Partitions, shifted partitions, skew shapes and ambient rectangles.

Conventions: parts are stored without trailing zeros, cells are addressed by
1-indexed ``(row, col)`` pairs, and the Grassmannian ``Gr(n, k)`` has ambient
rectangle ``k x (n - k)``.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, NamedTuple


class Partition(tuple):
    """A weakly decreasing sequence of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        if any(p == 0 for p in parts):
            raise ValueError(f"zero part before a positive one: {parts}")
        return super().__new__(cls, parts)

    def size(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-indexed part, zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def padded(self, length: int) -> tuple[int, ...]:
        if length < len(self):
            raise ValueError(f"{self} has more than {length} parts")
        return tuple(self) + (0,) * (length - len(self))

    def contains(self, other: "Partition") -> bool:
        """True iff the diagram of ``other`` lies inside this diagram."""
        return len(other) <= len(self) and all(b <= a for a, b in zip(self, other))

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def cells(self) -> Iterator[tuple[int, int]]:
        for r, p in enumerate(self, start=1):
            for c in range(1, p + 1):
                yield (r, c)

    def __repr__(self) -> str:
        return f"Partition({format_partition(self) or '-'})"


class ShiftedPartition(tuple):
    """A strictly decreasing sequence of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "ShiftedPartition":
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p <= 0 for p in parts):
            raise ValueError(f"shifted partition parts must be positive: {parts}")
        if any(a <= b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be strictly decreasing: {parts}")
        return super().__new__(cls, parts)

    def size(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def contains(self, other: "ShiftedPartition") -> bool:
        return len(other) <= len(self) and all(b <= a for a, b in zip(self, other))

    def cells(self) -> Iterator[tuple[int, int]]:
        """Cells of the shifted diagram; row ``i`` starts in column ``i``."""
        for r, p in enumerate(self, start=1):
            for c in range(r, r + p):
                yield (r, c)

    def __repr__(self) -> str:
        return f"ShiftedPartition(s:{format_partition(self)})"


class AmbientRectangle(NamedTuple):
    """The ``rows x cols`` box; for ``Gr(n, k)`` this is ``k x (n - k)``."""

    rows: int
    cols: int

    @classmethod
    def for_grassmannian(cls, n: int, k: int) -> "AmbientRectangle":
        if not 0 < k < n:
            raise ValueError(f"need 0 < k < n for Gr({n},{k})")
        return cls(k, n - k)

    def full(self) -> Partition:
        return Partition([self.cols] * self.rows)

    def area(self) -> int:
        return self.rows * self.cols


class SkewShape(NamedTuple):
    outer: Partition
    inner: Partition

    @classmethod
    def of(cls, outer: Iterable[int], inner: Iterable[int] = ()) -> "SkewShape":
        outer, inner = Partition(outer), Partition(inner)
        if not outer.contains(inner):
            raise ValueError(f"{inner} is not contained in {outer}")
        return cls(outer, inner)

    def size(self) -> int:
        return self.outer.size() - self.inner.size()

    def row_bounds(self) -> list[tuple[int, int]]:
        """Per row, the (first, last) 1-indexed columns; empty rows give first > last."""
        return [(self.inner.part(r) + 1, p) for r, p in enumerate(self.outer, start=1)]

    def cells(self) -> Iterator[tuple[int, int]]:
        for r, (lo, hi) in enumerate(self.row_bounds(), start=1):
            for c in range(lo, hi + 1):
                yield (r, c)

    def is_horizontal_strip(self) -> bool:
        # no column holds two cells <=> outer_{i+1} <= inner_i
        return all(self.outer.part(i + 1) <= self.inner.part(i) for i in range(1, len(self.outer)))


def fits_in(lam: Partition, box: AmbientRectangle) -> bool:
    return len(lam) <= box.rows and (not lam or lam[0] <= box.cols)


def _require_fit(lam: Partition, box: AmbientRectangle) -> None:
    if not fits_in(lam, box):
        raise ValueError(f"{format_partition(lam) or '-'} does not fit in {box.rows}x{box.cols}")


def complement(lam: Partition, box: AmbientRectangle) -> Partition:
    """The partition ``mu`` with ``lam_i + mu_{k+1-i} = cols`` for all ``i``."""
    _require_fit(lam, box)
    padded = Partition(lam).padded(box.rows)
    return Partition(box.cols - p for p in reversed(padded))


def hook_length(lam: Partition, row: int, col: int) -> int:
    lam = Partition(lam)
    if not (1 <= row <= len(lam) and 1 <= col <= lam[row - 1]):
        raise ValueError(f"cell ({row},{col}) is not in {lam}")
    arm = lam[row - 1] - col
    leg = sum(1 for p in lam[row:] if p >= col)
    return arm + leg + 1


def count_syt_hook_formula(lam: Partition) -> int:
    lam = Partition(lam)
    denom = 1
    for r, c in lam.cells():
        denom *= hook_length(lam, r, c)
    num = factorial(lam.size())
    q, rem = divmod(num, denom)
    assert rem == 0, "hook product must divide |lam|!"
    return q


def double(lam: ShiftedPartition, n: int) -> Partition:
    """Reflect a shifted partition across the staircase cut of the ``n x (n+1)`` box.

    The ambient triangle is the part of the rectangle strictly above the cut:
    row ``i`` of the triangle is columns ``i+1 .. n+1``.  A shifted row ``i`` of
    length ``l`` occupies columns ``i+1 .. i+l`` there, and its mirror image
    below the cut is cell ``(c-1, r)`` for each upper cell ``(r, c)``.
    """
    lam = ShiftedPartition(lam)
    if len(lam) > n or (lam and lam[0] > n):
        raise ValueError(f"s:{format_partition(lam)} does not fit in the triangle for n={n}")
    cells = set()
    for r, l in enumerate(lam, start=1):
        for c in range(r + 1, r + l + 1):
            cells.add((r, c))
            cells.add((c - 1, r))
    rows = [0] * n
    for r, _ in cells:
        rows[r - 1] += 1
    out = Partition(rows)
    assert set(out.cells()) == cells, "reflected cell set is not a Young diagram"
    return out


def is_staircase_symmetric(lam: Partition, n: int) -> tuple[bool, ShiftedPartition | None]:
    """Whether ``lam`` is a doubled partition; if so also return its shifted half."""
    lam = Partition(lam)
    box = AmbientRectangle(n, n + 1)
    _require_fit(lam, box)
    cells = set(lam.cells())
    if any((c - 1, r) not in cells for r, c in cells if c > r):
        return False, None
    if any((c, r + 1) not in cells for r, c in cells if c <= r):
        return False, None
    upper = [sum(1 for (r, c) in cells if r == i and c > i) for i in range(1, n + 1)]
    try:
        mu = ShiftedPartition(upper)
    except ValueError:
        return False, None
    return (True, mu) if double(mu, n) == lam else (False, None)


def cell_dimension(lam: Partition, box: AmbientRectangle) -> int:
    _require_fit(lam, box)
    return box.area() - Partition(lam).size()


@lru_cache(maxsize=None)
def _partitions(total: int, max_part: int, max_len: int) -> tuple[Partition, ...]:
    if total == 0:
        return (Partition(),)
    if max_len == 0:
        return ()
    out = []
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first, max_len - 1):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def partitions_of(total: int, max_part: int | None = None, max_len: int | None = None) -> tuple[Partition, ...]:
    """Partitions of ``total`` in decreasing lexicographic order."""
    return _partitions(total, total if max_part is None else max_part, total if max_len is None else max_len)


def partitions_in(box: AmbientRectangle, size: int | None = None) -> list[Partition]:
    sizes = range(box.area() + 1) if size is None else [size]
    return [p for s in sizes for p in partitions_of(s, box.cols, box.rows)]


def partitions_between(outer: Partition, inner: Partition = Partition(), size: int | None = None) -> list[Partition]:
    """All partitions ``nu`` with ``inner <= nu <= outer`` (optionally of one size)."""
    outer, inner = Partition(outer), Partition(inner)
    k = len(outer)
    lo = inner.padded(k) if len(inner) <= k else None
    if lo is None:
        return []
    out: list[Partition] = []

    def rec(i: int, prev: int, acc: list[int], used: int) -> None:
        if i == k:
            if size is None or used == size:
                out.append(Partition(acc))
            return
        hi = min(outer[i], prev)
        for v in range(hi, lo[i] - 1, -1):
            if size is not None and used + v > size:
                continue
            acc.append(v)
            rec(i + 1, v, acc, used + v)
            acc.pop()

    rec(0, outer[0] if k else 0, [], 0)
    return out


def shifted_partitions_in_triangle(n: int, size: int | None = None) -> list[ShiftedPartition]:
    """Strict partitions with at most ``n`` parts and largest part at most ``n``."""
    out = []

    def rec(prev: int, acc: list[int]) -> None:
        out.append(ShiftedPartition(acc))
        for v in range(min(prev - 1, n), 0, -1):
            acc.append(v)
            rec(v, acc)
            acc.pop()

    rec(n + 1, [])
    if size is not None:
        out = [p for p in out if p.size() == size]
    return sorted(out, key=lambda p: (p.size(), tuple(p)), reverse=False)


def strict_partitions_of(total: int) -> list[ShiftedPartition]:
    return [ShiftedPartition(p) for p in partitions_of(total) if all(a > b for a, b in zip(p, p[1:]))]


def staircase(n: int) -> ShiftedPartition:
    """The ambient triangle ``(n, n-1, ..., 1)``."""
    return ShiftedPartition(range(n, 0, -1))


def parse_partition(text: str) -> Partition:
    """Parse ``"4,2,1"``; the empty string or ``"-"`` is the empty partition."""
    text = text.strip()
    if text in ("", "-"):
        return Partition()
    try:
        return Partition(int(t) for t in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad partition syntax {text!r}: {exc}") from None


def parse_shifted(text: str) -> ShiftedPartition:
    """Parse ``"s:3,1"`` (the ``s:`` prefix is optional here)."""
    text = text.strip()
    if text.startswith("s:"):
        text = text[2:]
    if text in ("", "-"):
        return ShiftedPartition()
    try:
        return ShiftedPartition(int(t) for t in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad shifted partition syntax {text!r}: {exc}") from None


def format_partition(lam: Iterable[int]) -> str:
    return ",".join(str(p) for p in lam)
