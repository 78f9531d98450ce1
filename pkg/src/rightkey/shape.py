"""
Partitions, Young-diagram cells and the column-major reading order.

All indices are 1-based. A cell is addressed as ``Location(col, row)``,
column first, because the algorithms in this package walk columns.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple, Optional, Sequence, Tuple

from .errors import ParseError, ValidationError


class Location(NamedTuple):
    col: int
    row: int

    def __str__(self) -> str:
        return f"({self.col},{self.row})"


def reading_key(loc: Location) -> Tuple[int, int]:
    """Sort key realising the reading order: columns left to right, bottom to top."""
    return (loc[0], -loc[1])


def reading_leq(a: Location, b: Location) -> bool:
    return reading_key(a) <= reading_key(b)


def reading_lt(a: Location, b: Location) -> bool:
    return reading_key(a) < reading_key(b)


@dataclass(frozen=True)
class ColumnProfile:
    """
    Distinct column lengths and where they end.

    ``zetas[h-1]`` is the h-th smallest distinct column length and
    ``betas[h-1]`` the index of the rightmost column having that length.
    The sentinels ``zeta(0) = 0``, ``zeta(d+1) = n`` and ``beta(d+1) = 1``
    are available through :meth:`zeta` and :meth:`beta`.
    """

    n: int
    zetas: Tuple[int, ...]
    betas: Tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.zetas)

    def zeta(self, h: int) -> int:
        if h == 0:
            return 0
        if h == self.d + 1:
            return self.n
        return self.zetas[h - 1]

    def beta(self, h: int) -> int:
        if h == self.d + 1:
            return 1
        return self.betas[h - 1]

    def blocks(self) -> list[range]:
        """Position blocks ``zeta(h-1)+1 .. zeta(h)`` for ``h = 1 .. d+1``."""
        return [range(self.zeta(h - 1) + 1, self.zeta(h) + 1) for h in range(1, self.d + 2)]


@dataclass(frozen=True)
class Partition:
    """
    A nonzero partition with at most ``n - 1`` nonzero parts.

    ``parts`` may be given without trailing zeros; it is stored padded to
    length ``n``.
    """

    parts: Tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        n = int(self.n)
        if n < 2:
            raise ValidationError(f"n must be at least 2, got {n}")
        while len(parts) > n and parts[-1] == 0:
            parts = parts[:-1]
        if len(parts) > n:
            raise ValidationError(f"{parts} has more than n={n} parts")
        parts = parts + (0,) * (n - len(parts))
        if any(p < 0 for p in parts):
            raise ValidationError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValidationError(f"parts {parts} are not weakly decreasing")
        if parts[-1] != 0:
            raise ValidationError(f"last part must be 0 (columns of length n are excluded): {parts}")
        if parts[0] == 0:
            raise ValidationError("the empty partition is not allowed")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", n)

    def __str__(self) -> str:
        nonzero = ",".join(str(p) for p in self.parts if p)
        return f"n={self.n}; {nonzero}"

    @property
    def width(self) -> int:
        """lambda_1, the number of columns."""
        return self.parts[0]

    @property
    def size(self) -> int:
        return sum(self.parts)

    @cached_property
    def columns(self) -> Tuple[int, ...]:
        return column_lengths(self)

    @cached_property
    def profile(self) -> ColumnProfile:
        return column_profile(self)

    def c(self, j: int) -> int:
        """Length of column ``j`` (1-based)."""
        return self.columns[j - 1]

    def __contains__(self, loc: object) -> bool:
        if not isinstance(loc, tuple) or len(loc) != 2:
            return False
        j, i = loc
        return 1 <= j <= self.width and 1 <= i <= self.columns[j - 1]

    def cells(self) -> Iterator[Location]:
        """All cells in reading order, starting at ``(1, c_1)`` and ending at ``(width, 1)``."""
        for j, c in enumerate(self.columns, start=1):
            for i in range(c, 0, -1):
                yield Location(j, i)

    def truncate(self, j: int) -> "Partition":
        """The shape made of the first ``j`` columns."""
        if not 1 <= j <= self.width:
            raise ValidationError(f"column {j} out of range 1..{self.width}")
        return Partition(tuple(min(p, j) for p in self.parts), self.n)

    @classmethod
    def from_columns(cls, columns: Sequence[int], n: int) -> "Partition":
        if not columns:
            raise ValidationError("the empty partition is not allowed")
        parts = [sum(1 for c in columns if c >= r) for r in range(1, max(columns) + 1)]
        return cls(tuple(parts), n)


def column_lengths(p: Partition) -> Tuple[int, ...]:
    """``(c_1, ..., c_{lambda_1})`` with ``c_j = #{i : lambda_i >= j}``."""
    return tuple(sum(1 for part in p.parts if part >= j) for j in range(1, p.width + 1))


def column_profile(p: Partition) -> ColumnProfile:
    cols = column_lengths(p)
    zetas = tuple(sorted(set(cols)))
    # columns weakly decrease, so the last occurrence is the rightmost one
    betas = tuple(max(j for j, c in enumerate(cols, start=1) if c == z) for z in zetas)
    return ColumnProfile(p.n, zetas, betas)


def _check_cell(p: Partition, a: Location) -> None:
    if a not in p:
        raise ValidationError(f"location {tuple(a)} is not a cell of {p}")


def next_location(p: Partition, a: Location) -> Optional[Location]:
    """The cell immediately after ``a`` in reading order, or ``None`` past ``(width, 1)``."""
    _check_cell(p, a)
    j, i = a
    if i > 1:
        return Location(j, i - 1)
    if j < p.width:
        return Location(j + 1, p.c(j + 1))
    return None


def previous_location(p: Partition, a: Location) -> Optional[Location]:
    """The cell immediately before ``a``; ``(j, c_j)`` steps back to ``(j-1, 1)``."""
    _check_cell(p, a)
    j, i = a
    if i < p.c(j):
        return Location(j, i + 1)
    if j > 1:
        return Location(j - 1, 1)
    return None


_PARTITION_RE = re.compile(r"^\s*n\s*=\s*(\d+)\s*;\s*(.*?)\s*$", re.S)


def parse_partition(text: str) -> Partition:
    """Parse ``"n=9; 4,4,3,2,1,1,1"`` (trailing zeros optional)."""
    m = _PARTITION_RE.match(text)
    if not m:
        raise ParseError(f"expected 'n=N; p1,p2,...', got {text!r}")
    body = m.group(2).strip().rstrip(",")
    try:
        parts = tuple(int(tok) for tok in re.split(r"[,\s]+", body) if tok)
    except ValueError as exc:
        raise ParseError(f"non-integer part in {text!r}") from exc
    return Partition(parts, int(m.group(1)))


def partitions_of(size: int, max_parts: int, max_part: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Integer partitions of ``size`` with at most ``max_parts`` parts, in reverse lex order."""
    if max_part is None:
        max_part = size
    if size == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(size, max_part), 0, -1):
        for rest in partitions_of(size - first, max_parts - 1, first):
            yield (first,) + rest


def all_shapes(max_n: int, max_cells: int, min_n: int = 2) -> Iterator[Partition]:
    """Every valid ``Partition`` with ``min_n <= n <= max_n`` and at most ``max_cells`` cells."""
    for n in range(min_n, max_n + 1):
        for size in range(1, max_cells + 1):
            for parts in partitions_of(size, n - 1):
                yield Partition(parts, n)
