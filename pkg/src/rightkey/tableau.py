"""
Fillings of a partition shape, semistandard tableaux and keys.

A :class:`Tableau` stores its columns; ``t[j, i]`` is the value in column
``j``, row ``i`` (both 1-based). Only the filling itself is validated on
construction, semistandardness is a separate check because a few callers
need to hold arbitrary fillings.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence, Tuple

from .errors import ParseError, ValidationError
from .shape import Location, Partition

Column = Tuple[int, ...]


class NotSemistandardError(ValidationError):
    pass


@dataclass(frozen=True)
class Tableau:
    shape: Partition
    columns: Tuple[Column, ...]

    def __post_init__(self) -> None:
        cols = tuple(tuple(int(v) for v in col) for col in self.columns)
        object.__setattr__(self, "columns", cols)
        if tuple(len(c) for c in cols) != self.shape.columns:
            raise ValidationError(
                f"column lengths {tuple(len(c) for c in cols)} do not match shape {self.shape.columns}"
            )
        n = self.shape.n
        for col in cols:
            for v in col:
                if not 1 <= v <= n:
                    raise ValidationError(f"value {v} outside [1, {n}]")

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], n: int) -> "Tableau":
        return cls(Partition.from_columns([len(c) for c in columns], n), tuple(map(tuple, columns)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n: int) -> "Tableau":
        rows = [list(r) for r in rows if len(r)]
        if not rows:
            raise ValidationError("a tableau needs at least one box")
        shape = Partition(tuple(len(r) for r in rows), n)
        cols = tuple(tuple(rows[i][j] for i in range(c)) for j, c in enumerate(shape.columns))
        return cls(shape, cols)

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        nrows = self.shape.columns[0]
        return tuple(
            tuple(col[i] for col in self.columns if len(col) > i) for i in range(nrows)
        )

    def __getitem__(self, loc: Tuple[int, int]) -> int:
        j, i = loc
        if (j, i) not in self.shape:
            raise KeyError(f"location {(j, i)} is not a cell of the shape")
        return self.columns[j - 1][i - 1]

    def column(self, j: int) -> Column:
        return self.columns[j - 1]

    def values(self) -> Iterator[int]:
        for col in self.columns:
            yield from col

    def is_semistandard(self) -> bool:
        for col in self.columns:
            if any(a >= b for a, b in zip(col, col[1:])):
                return False
        for left, right in zip(self.columns, self.columns[1:]):
            if any(a > b for a, b in zip(left, right)):
                return False
        return True

    def truncate(self, j: int) -> "Tableau":
        """Keep only the first ``j`` columns."""
        return Tableau(self.shape.truncate(j), self.columns[:j])

    def reading_word(self) -> Tuple[int, ...]:
        """Values in reading order (columns left to right, each read bottom to top)."""
        return tuple(v for col in self.columns for v in reversed(col))

    def __str__(self) -> str:
        return format_tableau(self)


def require_semistandard(t: Tableau) -> Tableau:
    if not t.is_semistandard():
        raise NotSemistandardError(f"tableau is not semistandard:\n{format_tableau(t)}")
    return t


def is_key(t: Tableau) -> bool:
    """True when every column's values also occur in the column to its left."""
    return all(set(right) <= set(left) for left, right in zip(t.columns, t.columns[1:]))


def key_of_permutation(p: Partition, phi: Iterable[int]) -> Tableau:
    """
    The key of shape ``p`` attached to a permutation.

    A column of length ``c`` holds the first ``c`` images of ``phi`` in
    increasing order.
    """
    images = tuple(phi)
    if len(images) != p.n or sorted(images) != list(range(1, p.n + 1)):
        raise ValidationError(f"{images} is not a permutation of 1..{p.n}")
    return Tableau(p, tuple(tuple(sorted(images[:c])) for c in p.columns))


def key_leq(a: Tableau, b: Tableau) -> bool:
    """Entrywise comparison of two tableaux of the same shape."""
    if a.shape != b.shape:
        raise ValidationError(f"shape mismatch: {a.shape} vs {b.shape}")
    return all(x <= y for ca, cb in zip(a.columns, b.columns) for x, y in zip(ca, cb))


def weight(t: Tableau) -> Tuple[int, ...]:
    """Exponent vector: entry ``i-1`` counts the occurrences of ``i``."""
    counts = Counter(t.values())
    return tuple(counts.get(v, 0) for v in range(1, t.n + 1))


def _columns_above(prev: Optional[Column], length: int, n: int) -> list[Column]:
    cands = [
        c for c in combinations(range(1, n + 1), length)
        if prev is None or all(x >= y for x, y in zip(c, prev))
    ]
    # lexicographic on the bottom-to-top reading of the column
    cands.sort(key=lambda c: c[::-1])
    return cands


def enumerate_ssyt(p: Partition) -> Iterator[Tableau]:
    """
    Every semistandard tableau of shape ``p`` with entries in ``[n]``.

    Yielded in lexicographic order of :meth:`Tableau.reading_word`.
    """
    n = p.n
    lengths = p.columns
    cols: list[Column] = []

    def rec(j: int) -> Iterator[Tableau]:
        if j == len(lengths):
            yield Tableau(p, tuple(cols))
            return
        prev = cols[-1] if cols else None
        for c in _columns_above(prev, lengths[j], n):
            cols.append(c)
            yield from rec(j + 1)
            cols.pop()

    yield from rec(0)


# text / json forms

_HEADER_RE = re.compile(r"^n\s*=\s*(\d+)\s*[;\n]")


def format_tableau(t: Tableau) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in t.rows)


def parse_tableau(text: str, n: Optional[int] = None) -> Tableau:
    """
    Parse the row text form or the JSON form ``{"n": 9, "rows": [[...], ...]}``.

    Rows are separated by newlines or ``/``. An optional leading ``n=N;``
    (or a first line ``n=N``) fixes ``n``; otherwise ``n`` must be passed
    or defaults to ``max(largest entry, number of rows + 1)``.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
            return tableau_from_json(data)
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise ParseError(f"bad tableau JSON: {exc}") from exc
    m = _HEADER_RE.match(stripped)
    if m:
        n_given = int(m.group(1))
        if n is not None and n != n_given:
            raise ParseError(f"conflicting n: {n} vs {n_given}")
        n = n_given
        stripped = stripped[m.end():]
    rows = []
    for chunk in stripped.replace("/", "\n").split("\n"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            rows.append([int(tok) for tok in chunk.replace(",", " ").split()])
        except ValueError as exc:
            raise ParseError(f"non-integer entry in row {chunk!r}") from exc
    if not rows:
        raise ParseError("empty tableau")
    if n is None:
        n = max(max(max(r) for r in rows), len(rows) + 1)
    return Tableau.from_rows(rows, n)


def tableau_to_json(t: Tableau) -> dict:
    return {"n": t.n, "rows": [list(r) for r in t.rows]}


def tableau_from_json(data: dict) -> Tableau:
    return Tableau.from_rows(data["rows"], int(data["n"]))


def cells_of(t: Tableau) -> Iterator[Tuple[Location, int]]:
    for loc in t.shape.cells():
        yield loc, t[loc]
