"""
Inverse filling map of the type A alcove model.

A semistandard tableau ``T`` is turned into a Bruhat-increasing chain of
permutations, one per cell from ``(1, 1)`` to ``(width, 1)`` in reading
order, by the greedy algorithm. Refining each greedy step into single
transpositions, and prepending the passage from the identity through an
imaginary column ``C_0 = (1, 2, ..., n)``, gives the saturated chain
``B_T``. The transpositions used are recorded as an admissible subset of
the list ``Gamma(lambda)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence, Tuple, Union

from .errors import InvariantError, ValidationError
from .permutation import Permutation, identity, is_bruhat_cover, length
from .shape import Location, Partition
from .tableau import NotSemistandardError, Tableau, require_semistandard


class SubstepLabel(NamedTuple):
    """Label ``(col, row; step)`` of an intermediate permutation inside one greedy step."""

    col: int
    row: int
    step: int

    def __str__(self) -> str:
        return f"({self.col},{self.row};{self.step})"


Label = Union[Location, SubstepLabel]


@dataclass(frozen=True)
class ChainEntry:
    label: Label
    perm: Permutation
    # positions swapped to reach this entry from the previous one (saturated chain only)
    transposition: Optional[Tuple[int, int]] = None


@dataclass(frozen=True)
class AdmissibleSubset:
    indices: Tuple[int, ...]
    shape: Partition

    def __post_init__(self) -> None:
        idx = tuple(int(i) for i in self.indices)
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValidationError(f"indices {idx} are not strictly increasing")
        object.__setattr__(self, "indices", idx)

    def __len__(self) -> int:
        return len(self.indices)


def _lower(t: Tableau, j: int, i: int) -> int:
    """``T(j-1, i)`` with column 0 read as ``C_0(i) = i``."""
    return i if j == 1 else t[j - 1, i]


def _greedy_indices(prev: Sequence[int], i: int, c: int, target: int) -> list[int]:
    """0-based positions ``i_0, i_1, ..., i_m`` chosen by the greedy algorithm."""
    chosen = [i - 1]
    cur = prev[i - 1]
    while cur != target:
        nxt = None
        for k in range(c, len(prev)):
            if cur < prev[k] <= target:
                nxt = k
                break
        if nxt is None:
            raise ValidationError(
                f"greedy step stuck: no entry in ({cur}, {target}] past position {c} of {tuple(prev)}"
            )
        chosen.append(nxt)
        cur = prev[nxt]
    return chosen


def _cycle(prev: Sequence[int], chosen: Sequence[int]) -> Tuple[int, ...]:
    out = list(prev)
    for x in range(1, len(chosen)):
        out[chosen[x]] = prev[chosen[x - 1]]
    out[chosen[0]] = prev[chosen[-1]]
    return tuple(out)


def initial_perm(t: Tableau) -> Permutation:
    """First column increasing, then the remaining values of ``[n]`` increasing."""
    require_semistandard(t)
    first = t.column(1)
    rest = sorted(set(range(1, t.n + 1)) - set(first))
    return Permutation(tuple(first) + tuple(rest))


def greedy_step(prev: Permutation, t: Tableau, loc: Location) -> Tuple[Permutation, Tuple[int, ...]]:
    """
    Produce the permutation at ``loc = (j, i)`` from the one just before it.

    Returns the new permutation and the 1-based positions chosen (empty when
    ``T(j-1, i) == T(j, i)``). For ``j == 1`` the column to the left is
    ``C_0``, whose entry in row ``i`` is ``i``.
    """
    require_semistandard(t)
    if loc not in t.shape:
        raise ValidationError(f"{tuple(loc)} is not a cell")
    j, i = loc
    if prev.n != t.n:
        raise ValidationError(f"permutation size {prev.n} != n = {t.n}")
    for k in range(1, i + 1):
        if prev(k) != _lower(t, j, k):
            raise ValidationError(
                f"permutation {prev} does not match column {j - 1} at position {k}"
            )
    lower, target = _lower(t, j, i), t[j, i]
    if lower > target:
        raise NotSemistandardError(f"row condition fails at {tuple(loc)}")
    if lower == target:
        return prev, ()
    chosen = _greedy_indices(prev.images, i, t.shape.c(j), target)
    return Permutation(_cycle(prev.images, chosen)), tuple(k + 1 for k in chosen)


class _Step(NamedTuple):
    loc: Location
    before: Tuple[int, ...]
    chosen: Tuple[int, ...]  # 0-based, empty when nothing moves
    after: Tuple[int, ...]


def _steps(t: Tableau) -> Iterator[_Step]:
    """Every greedy step, column 1 (from the identity) through the last column."""
    require_semistandard(t)
    shape = t.shape
    cur = tuple(range(1, t.n + 1))
    for j in range(1, shape.width + 1):
        c = shape.c(j)
        for i in range(c, 0, -1):
            lower, target = _lower(t, j, i), t[j, i]
            if lower == target:
                chosen: Tuple[int, ...] = ()
                new = cur
            else:
                chosen = tuple(_greedy_indices(cur, i, c, target))
                new = _cycle(cur, chosen)
            _check_location_perm(t, Location(j, i), new)
            yield _Step(Location(j, i), cur, chosen, new)
            cur = new


def _check_location_perm(t: Tableau, loc: Location, perm: Sequence[int]) -> None:
    j, i = loc
    for k in range(1, t.shape.c(j) + 1):
        expect = _lower(t, j, k) if k < i else t[j, k]
        if perm[k - 1] != expect:
            raise InvariantError(f"permutation {tuple(perm)} at {tuple(loc)} disagrees with T at row {k}")


def location_chain(t: Tableau) -> list[ChainEntry]:
    """
    ``pi^(1,1)`` followed by one permutation per cell ``(2, c_2) .. (width, 1)``.

    The last entry is ``pi_T``.
    """
    chain = []
    for step in _steps(t):
        # column 1 only contributes its last cell, pi^(1,1)
        if step.loc.col > 1 or step.loc.row == 1:
            chain.append(ChainEntry(step.loc, Permutation(step.after)))
    if chain[0].perm != initial_perm(t):
        raise InvariantError("column-0 phase did not reach the initial permutation")
    return chain


def alcove_permutation(t: Tableau) -> Permutation:
    """``pi_T``, the last permutation of the chain."""
    cur = None
    for step in _steps(t):
        cur = step.after
    return Permutation(cur)


def saturated_chain(t: Tableau) -> list[ChainEntry]:
    """
    ``B_T``: the identity, then one entry per transposition applied.

    A greedy step at ``(j, i)`` choosing ``i_0, i_1, ..., i_m`` contributes
    ``m`` entries, labelled ``(j, i+1; 1) .. (j, i+1; m-1)`` and finally
    ``(j, i)``; each swaps position ``i_0`` with the next ``i_x``.
    """
    entries = [ChainEntry(Location(0, 0), identity(t.n))]
    for step in _steps(t):
        if not step.chosen:
            continue
        cur = list(step.before)
        i0 = step.chosen[0]
        m = len(step.chosen) - 1
        for x in range(1, m + 1):
            ix = step.chosen[x]
            cur[i0], cur[ix] = cur[ix], cur[i0]
            label: Label = step.loc if x == m else SubstepLabel(step.loc.col, step.loc.row + 1, x)
            entries.append(ChainEntry(label, Permutation(tuple(cur)), (i0 + 1, ix + 1)))
        if tuple(cur) != step.after:
            raise InvariantError(f"sub-steps at {tuple(step.loc)} do not compose to the greedy step")
    return entries


def gamma_column(c: int, n: int) -> list[Tuple[int, int]]:
    """Transpositions ``(r, s)``: ``r`` from ``c`` down to 1, ``s`` from ``c+1`` up to ``n``."""
    return [(r, s) for r in range(c, 0, -1) for s in range(c + 1, n + 1)]


def gamma(p: Partition) -> Tuple[Tuple[int, int], ...]:
    """Concatenation of the per-column lists; position ``x-1`` holds transposition ``x``."""
    out: list[Tuple[int, int]] = []
    for c in p.columns:
        out.extend(gamma_column(c, p.n))
    return tuple(out)


def gamma_segments(p: Partition) -> list[range]:
    """1-based index range of each column's block inside :func:`gamma`."""
    segs = []
    start = 1
    for c in p.columns:
        size = c * (p.n - c)
        segs.append(range(start, start + size))
        start += size
    return segs


def admissible_subset(t: Tableau) -> AdmissibleSubset:
    """
    Indices into ``gamma(shape)`` of the transpositions used by ``B_T``.

    Transpositions applied while filling column ``j`` (column 1 includes the
    passage from the identity) are matched in order inside column ``j``'s
    block.
    """
    shape = t.shape
    gam = gamma(shape)
    segs = gamma_segments(shape)
    indices: list[int] = []
    pointers = [seg.start for seg in segs]
    for entry in saturated_chain(t)[1:]:
        j = entry.label.col
        seg = segs[j - 1]
        x = pointers[j - 1]
        while x < seg.stop and gam[x - 1] != entry.transposition:
            x += 1
        if x >= seg.stop:
            raise InvariantError(
                f"transposition {entry.transposition} at {entry.label} not found in order in column {j} block"
            )
        indices.append(x)
        pointers[j - 1] = x + 1
    return AdmissibleSubset(tuple(indices), shape)


class NotAdmissibleError(ValidationError):
    pass


def tableau_from_admissible(p: Partition, subset: AdmissibleSubset | Sequence[int]) -> Tableau:
    """
    Rebuild ``T_J``: walk ``J`` from the identity and read column ``j`` off
    the first ``c_j`` entries once column ``j``'s block is consumed.

    Raises :class:`NotAdmissibleError` if a step is not a Bruhat cover or the
    resulting filling is not semistandard.
    """
    indices = subset.indices if isinstance(subset, AdmissibleSubset) else tuple(subset)
    gam = gamma(p)
    segs = gamma_segments(p)
    if any(not 1 <= x <= len(gam) for x in indices):
        raise NotAdmissibleError(f"index out of range 1..{len(gam)}")
    if any(a >= b for a, b in zip(indices, indices[1:])):
        raise NotAdmissibleError("indices must be strictly increasing")
    cur = identity(p.n)
    cols = []
    pos = 0
    for j, seg in enumerate(segs, start=1):
        while pos < len(indices) and indices[pos] in seg:
            r, s = gam[indices[pos] - 1]
            nxt = cur.swap(r, s)
            if not is_bruhat_cover(cur, nxt):
                raise NotAdmissibleError(f"step {indices[pos]} = {(r, s)} is not a cover of {cur}")
            cur = nxt
            pos += 1
        cols.append(cur.images[: p.c(j)])
    t = Tableau(p, tuple(cols))
    if not t.is_semistandard():
        raise NotAdmissibleError(f"subset {indices} yields a non-semistandard filling")
    return t


def enumerate_admissible(p: Partition) -> Iterator[AdmissibleSubset]:
    """
    Every subset of ``[x]`` whose transpositions, applied in order from the
    identity, form a saturated Bruhat chain.

    Depth-first over ``gamma(p)`` pruning at the first non-cover, so the cost
    scales with the number of subsets found.
    """
    gam = gamma(p)
    chosen: list[int] = []

    def rec(start: int, cur: Permutation, ln: int) -> Iterator[AdmissibleSubset]:
        yield AdmissibleSubset(tuple(chosen), p)
        for x in range(start, len(gam) + 1):
            r, s = gam[x - 1]
            if cur(r) > cur(s):
                continue
            nxt = cur.swap(r, s)
            if length(nxt) != ln + 1:
                continue
            chosen.append(x)
            yield from rec(x + 1, nxt, ln + 1)
            chosen.pop()

    yield from rec(1, identity(p.n), 0)


def chain_end(p: Partition, subset: AdmissibleSubset | Sequence[int]) -> Permutation:
    """Final permutation of the chain a subset describes (no admissibility check)."""
    indices = subset.indices if isinstance(subset, AdmissibleSubset) else tuple(subset)
    gam = gamma(p)
    cur = identity(p.n)
    for x in indices:
        cur = cur.swap(*gam[x - 1])
    return cur
