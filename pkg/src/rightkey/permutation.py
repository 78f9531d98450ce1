"""
Permutations in one-rowed form, Bruhat order and minimal coset representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator, Sequence, Tuple

from .errors import ParseError, ValidationError
from .shape import Partition
from .tableau import Tableau, is_key, require_semistandard


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``[n]`` stored as its images ``(phi_1, ..., phi_n)``."""

    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValidationError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        """Image of ``i`` (1-based)."""
        return self.images[i - 1]

    def __str__(self) -> str:
        return ",".join(map(str, self.images))

    def swap(self, a: int, b: int) -> "Permutation":
        """Interchange the entries at positions ``a`` and ``b`` (right multiplication by a transposition)."""
        out = list(self.images)
        out[a - 1], out[b - 1] = out[b - 1], out[a - 1]
        return Permutation(tuple(out))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for pos, v in enumerate(self.images, start=1):
            inv[v - 1] = pos
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def all_permutations(n: int) -> Iterator[Permutation]:
    for images in _itertools_permutations(range(1, n + 1)):
        yield Permutation(images)


def parse_permutation(text: str) -> Permutation:
    try:
        images = tuple(int(tok) for tok in text.replace(",", " ").split())
    except ValueError as exc:
        raise ParseError(f"bad permutation {text!r}") from exc
    if not images:
        raise ParseError("empty permutation")
    return Permutation(images)


def _same_size(u: Permutation, w: Permutation) -> None:
    if u.n != w.n:
        raise ValidationError(f"size mismatch: {u.n} vs {w.n}")


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """
    Bruhat comparison by the sorted-prefix (tableau) criterion.

    ``u <= w`` iff for every ``k`` the sorted first ``k`` images of ``u`` are
    entrywise at most those of ``w``.
    """
    _same_size(u, w)
    for k in range(1, u.n):
        a = sorted(u.images[:k])
        b = sorted(w.images[:k])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def length(u: Permutation) -> int:
    """Number of inversions."""
    im = u.images
    return sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])


def is_bruhat_cover(u: Permutation, w: Permutation) -> bool:
    """True when ``w`` is ``u`` with two entries swapped and ``length(w) == length(u) + 1``."""
    _same_size(u, w)
    diff = [k for k in range(u.n) if u.images[k] != w.images[k]]
    if len(diff) != 2:
        return False
    a, b = diff
    lo, hi = u.images[a], u.images[b]
    if lo > hi:
        return False
    # no entry strictly between lo and hi sits strictly between positions a and b
    return not any(lo < u.images[k] < hi for k in range(a + 1, b))


def reduced_word(u: Permutation, strategy: str = "leftmost") -> Tuple[int, ...]:
    """
    A reduced word ``(r_1, ..., r_l)`` with ``u = s_{r_1} s_{r_2} ... s_{r_l}``.

    Sorting proceeds by adjacent swaps of descents; ``strategy`` picks the
    leftmost or rightmost descent each time. The recorded swaps undo ``u``
    from the right, so they are returned reversed.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    im = list(u.images)
    recorded = []
    while True:
        descents = [i for i in range(1, len(im)) if im[i - 1] > im[i]]
        if not descents:
            break
        i = descents[0] if strategy == "leftmost" else descents[-1]
        im[i - 1], im[i] = im[i], im[i - 1]
        recorded.append(i)
    return tuple(reversed(recorded))


def is_min_coset_rep(u: Permutation, p: Partition) -> bool:
    """True iff ``u`` increases within every block ``zeta(h-1)+1 .. zeta(h)``."""
    if u.n != p.n:
        raise ValidationError(f"size mismatch: {u.n} vs {p.n}")
    for block in p.profile.blocks():
        vals = [u(k) for k in block]
        if any(a > b for a, b in zip(vals, vals[1:])):
            return False
    return True


def min_coset_rep(u: Permutation, p: Partition) -> Permutation:
    """Sort ``u`` within each block; the result has the same key as ``u``."""
    out: list[int] = []
    for block in p.profile.blocks():
        out.extend(sorted(u(k) for k in block))
    return Permutation(tuple(out))


def coset_representatives(p: Partition) -> list[Permutation]:
    """All of ``S_n^lambda``, in lexicographic order of images."""
    return sorted({min_coset_rep(u, p) for u in all_permutations(p.n)}, key=lambda u: u.images)


def longest_coset_rep(p: Partition) -> Permutation:
    """The Bruhat-maximal element of ``S_n^lambda``."""
    return min_coset_rep(Permutation(tuple(range(p.n, 0, -1))), p)


def key_to_permutation(k: Tableau) -> Permutation:
    """
    The permutation in ``S_n^lambda`` whose key is ``k``.

    Block ``h`` holds, increasingly, the values of the column of length
    ``zeta_h`` that are missing from the column of length ``zeta_{h-1}``; the
    last block holds what is missing from the first column.
    """
    require_semistandard(k)
    if not is_key(k):
        raise ValidationError(f"not a key:\n{k}")
    prof = k.shape.profile
    out: list[int] = []
    seen: set[int] = set()
    for h in range(1, prof.d + 1):
        col = set(k.column(prof.beta(h)))
        out.extend(sorted(col - seen))
        seen = col
    out.extend(sorted(set(range(1, k.n + 1)) - seen))
    return Permutation(tuple(out))


def as_permutation(x: Permutation | Sequence[int] | Iterable[int]) -> Permutation:
    return x if isinstance(x, Permutation) else Permutation(tuple(x))
