"""
The scanning method: scanning paths, most recent values and the scanning tableau.

Deleting a path is simulated with a per-column pointer to the current
bottom row, so the input tableau is never modified and the paths from
every origin column can be computed independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .errors import InvariantError, ValidationError
from .permutation import Permutation, key_to_permutation
from .shape import Location, reading_leq, reading_lt
from .tableau import Tableau, require_semistandard


@dataclass(frozen=True)
class ScanningPath:
    origin: Location
    cells: Tuple[Location, ...]

    @property
    def final(self) -> Location:
        return self.cells[-1]

    def __contains__(self, loc: object) -> bool:
        return loc in self.cells


def ewis(xs: Sequence[int]) -> Tuple[int, ...]:
    """
    1-based indices of the earliest weakly increasing subsequence of ``xs``.

    The first index is 1; each next index is the smallest later index whose
    value is at least the last chosen value.
    """
    if not xs:
        raise ValueError("EWIS of an empty sequence")
    chosen = [1]
    last = xs[0]
    for idx in range(2, len(xs) + 1):
        if xs[idx - 1] >= last:
            chosen.append(idx)
            last = xs[idx - 1]
    return tuple(chosen)


def scanning_paths(t: Tableau, j: int) -> list[ScanningPath]:
    """
    The paths ``P(T; j, i)`` for ``i = c_j, c_j - 1, ..., 1``, in that order.

    Each path runs the EWIS over the current bottom entries of columns
    ``j .. width``, then its cells are deleted before the next path starts.
    """
    require_semistandard(t)
    shape = t.shape
    if not 1 <= j <= shape.width:
        raise ValidationError(f"column {j} out of range 1..{shape.width}")
    bottom = {l: shape.c(l) for l in range(j, shape.width + 1)}
    paths = []
    for i in range(shape.c(j), 0, -1):
        # deletions keep a partition shape, so the live columns form a prefix
        live = []
        for l in range(j, shape.width + 1):
            if bottom[l] == 0:
                break
            live.append(l)
        seq = [t[l, bottom[l]] for l in live]
        cells = []
        for idx in ewis(seq):
            l = live[idx - 1]
            cells.append(Location(l, bottom[l]))
            bottom[l] -= 1
        if cells[0] != (j, i):
            raise InvariantError(f"path should start at {(j, i)}, got {cells[0]}")
        paths.append(ScanningPath(Location(j, i), tuple(cells)))
    return paths


def path_for(paths: Sequence[ScanningPath], k: int) -> ScanningPath:
    """Pick ``P(T; l, k)`` out of a family returned by :func:`scanning_paths`."""
    for path in paths:
        if path.origin.row == k:
            return path
    raise ValidationError(f"no path with origin row {k}")


def path_containing(paths: Sequence[ScanningPath], loc: Location) -> Optional[ScanningPath]:
    for path in paths:
        if loc in path:
            return path
    return None


def most_recent(
    t: Tableau, paths: Sequence[ScanningPath], l: int, k: int, loc: Location
) -> Tuple[Location, int]:
    """
    The latest cell of ``P(T; l, k)`` strictly before ``loc``, and its value.

    Only defined for ``loc`` after ``(l, 1)``.
    """
    path = path_for(paths, k)
    if path.origin.col != l:
        raise ValidationError(f"path family originates in column {path.origin.col}, not {l}")
    if not reading_lt(Location(l, 1), loc):
        raise ValidationError(f"{tuple(loc)} does not come after {(l, 1)}")
    before = [c for c in path.cells if reading_lt(c, loc)]
    cell = before[-1]
    return cell, t[cell]


def u_set(t: Tableau, l: int, loc: Location, paths: Optional[Sequence[ScanningPath]] = None) -> frozenset[int]:
    """
    Most recent values of the paths from column ``l``, taken weakly before ``loc``.

    At ``loc = (width, 1)`` these are the final values of the paths, i.e.
    column ``l`` of the scanning tableau.
    """
    if paths is None:
        paths = scanning_paths(t, l)
    if loc not in t.shape:
        raise ValidationError(f"{tuple(loc)} is not a cell")
    if not reading_leq(Location(l, 1), loc):
        raise ValidationError(f"{tuple(loc)} comes before {(l, 1)}")
    out = set()
    for path in paths:
        last = [c for c in path.cells if reading_leq(c, loc)][-1]
        out.add(t[last])
    return frozenset(out)


def scanning_tableau(t: Tableau) -> Tableau:
    """The key whose cell ``(j, i)`` holds the value at the end of ``P(T; j, i)``."""
    require_semistandard(t)
    cols = []
    for j in range(1, t.shape.width + 1):
        finals = {p.origin.row: t[p.final] for p in scanning_paths(t, j)}
        cols.append(tuple(finals[i] for i in range(1, t.shape.c(j) + 1)))
    return Tableau(t.shape, tuple(cols))


def sigma(t: Tableau) -> Permutation:
    """The permutation in ``S_n^lambda`` whose key is the scanning tableau."""
    return key_to_permutation(scanning_tableau(t))


def annotate_paths(t: Tableau, j: int = 1) -> str:
    """
    Render ``t`` with each cell reached from column ``j`` tagged ``value^k``.

    ``k`` is the origin row of the path holding the cell; cells left of
    column ``j`` are printed bare.
    """
    owner = {}
    for path in scanning_paths(t, j):
        for cell in path.cells:
            owner[cell] = path.origin.row
    lines = []
    for i, row in enumerate(t.rows, start=1):
        toks = []
        for jj, v in enumerate(row, start=1):
            toks.append(f"{v}^{owner[(jj, i)]}" if (jj, i) in owner else str(v))
        lines.append(" ".join(toks))
    return "\n".join(lines)
