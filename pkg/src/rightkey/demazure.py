"""
Demazure characters (key polynomials) and their generating sets.

``D(lambda, w)`` collects the tableaux whose right key lies below the key of
``w``; ``A(lambda, w)`` collects the tableaux whose alcove-model chain ends
at or below ``w``. Both give the same set. The character is also produced
independently by isobaric divided differences, which touch neither the
scanning code nor the alcove code.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from .alcove import (
    alcove_permutation,
    chain_end,
    enumerate_admissible,
    location_chain,
    tableau_from_admissible,
)
from .errors import InvariantError, ValidationError
from .permutation import (
    Permutation,
    as_permutation,
    bruhat_leq,
    is_min_coset_rep,
    key_to_permutation,
    reduced_word,
)
from .shape import Partition
from .scanning import scanning_tableau
from .tableau import Tableau, enumerate_ssyt, key_leq, key_of_permutation, weight

Exponent = Tuple[int, ...]


class Polynomial:
    """Integer polynomial in ``x_1 .. x_n`` stored as ``{exponent vector: coefficient}``."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Exponent, int] | Iterable[Tuple[Exponent, int]] = ()):
        self.n = n
        acc: Dict[Exponent, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coeff in items:
            exp = tuple(exp)
            if len(exp) != n or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for n={n}")
            acc[exp] += coeff
        self._terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: int = 1) -> "Polynomial":
        return cls(len(exp), {tuple(exp): coeff})

    @property
    def terms(self) -> Dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> list[Tuple[Exponent, int]]:
        """Terms in canonical order: exponent vectors lexicographically descending."""
        return sorted(self._terms.items(), reverse=True)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if self.n != other.n:
            raise ValueError("different numbers of variables")
        return Polynomial(self.n, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def evaluate(self, point: Sequence[int]) -> int:
        total = 0
        for exp, coeff in self._terms.items():
            term = coeff
            for x, e in zip(point, exp):
                term *= x ** e
            total += term
        return total

    def __repr__(self) -> str:
        return f"Polynomial({self.n}, {dict(self.items())!r})"

    def __str__(self) -> str:
        return format_polynomial(self)

    def to_json(self) -> dict:
        return {"n": self.n, "terms": [[list(e), c] for e, c in self.items()]}

    @classmethod
    def from_json(cls, data: dict) -> "Polynomial":
        return cls(int(data["n"]), [(tuple(e), int(c)) for e, c in data["terms"]])


def format_polynomial(poly: Polynomial) -> str:
    """Render as ``x1^2*x2 + 2*x1*x2*x3 - x3``; zero renders as ``0``."""
    if not poly:
        return "0"
    out = []
    for k, (exp, coeff) in enumerate(poly.items()):
        factors = [f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in enumerate(exp, start=1) if e]
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        if k == 0:
            out.append(body if coeff > 0 else f"-{body}")
        else:
            out.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(out)


def _require_rep(p: Partition, w: Permutation) -> Permutation:
    w = as_permutation(w)
    if w.n != p.n:
        raise ValidationError(f"permutation size {w.n} != n = {p.n}")
    if not is_min_coset_rep(w, p):
        raise ValidationError(f"{w} is not a minimal coset representative for {p}")
    return w


def demazure_members(p: Partition, w: Permutation, criterion: str = "key") -> Iterator[Tableau]:
    """
    Tableaux of shape ``p`` contributing to the Demazure character of ``w``.

    ``criterion="key"`` keeps ``T`` with ``S(T) <= Y(w)`` entrywise;
    ``criterion="bruhat"`` keeps ``T`` with ``pi_T <= w``.
    """
    w = _require_rep(p, w)
    if criterion == "key":
        top = key_of_permutation(p, w)
        for t in enumerate_ssyt(p):
            if key_leq(scanning_tableau(t), top):
                yield t
    elif criterion == "bruhat":
        for t in enumerate_ssyt(p):
            if bruhat_leq(alcove_permutation(t), w):
                yield t
    else:
        raise ValueError(f"unknown criterion {criterion!r}")


def admissible_members(p: Partition, w: Permutation, method: str = "tableaux") -> Iterator[Tableau]:
    """
    The tableaux ``T_J`` for admissible subsets ``J`` whose chain ends at or below ``w``.

    ``method="tableaux"`` runs over all tableaux and keeps those with
    ``pi_T <= w``; ``method="subsets"`` walks admissible subsets of
    ``Gamma(lambda)`` directly and rebuilds each tableau.
    """
    w = _require_rep(p, w)
    if method == "tableaux":
        for t in enumerate_ssyt(p):
            if bruhat_leq(alcove_permutation(t), w):
                yield t
    elif method == "subsets":
        for subset in enumerate_admissible(p):
            if bruhat_leq(chain_end(p, subset), w):
                yield tableau_from_admissible(p, subset)
    else:
        raise ValueError(f"unknown method {method!r}")


def demazure_character(p: Partition, w: Permutation) -> Polynomial:
    """Sum of ``x^T`` over :func:`demazure_members`."""
    return Polynomial(p.n, [(weight(t), 1) for t in demazure_members(p, w)])


def is_member(t: Tableau, w: Permutation, verify: bool = False) -> bool:
    """
    Whether ``t`` lies in ``D(lambda, w)``, decided by ``pi_T <= w``.

    With ``verify=True`` the key criterion is evaluated too and a
    disagreement raises :class:`InvariantError`.
    """
    w = _require_rep(t.shape, w)
    answer = bruhat_leq(alcove_permutation(t), w)
    if verify:
        other = key_leq(scanning_tableau(t), key_of_permutation(t.shape, w))
        if other != answer:
            raise InvariantError(f"membership criteria disagree for w={w}:\n{t}")
    return answer


@dataclass(frozen=True)
class DefiningChain:
    perms: Tuple[Permutation, ...]

    def __len__(self) -> int:
        return len(self.perms)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.perms)


def is_defining_chain(t: Tableau, perms: Sequence[Permutation]) -> bool:
    """``perms`` increase in Bruhat order and the first ``c_j`` images of the j-th one are column ``j``."""
    if len(perms) != t.shape.width:
        return False
    for j, u in enumerate(perms, start=1):
        if tuple(sorted(u.images[: t.shape.c(j)])) != t.column(j):
            return False
    return all(bruhat_leq(a, b) for a, b in zip(perms, perms[1:]))


def minimal_defining_chain(t: Tableau) -> DefiningChain:
    """The permutations of the alcove chain at the cells ``(j, 1)``."""
    chain = location_chain(t)
    return DefiningChain(tuple(e.perm for e in chain if e.label.row == 1))


def canonical_lift(t: Tableau) -> Permutation:
    """Shortest permutation whose key of shape ``t.shape`` is the right key of ``t``."""
    return key_to_permutation(scanning_tableau(t))


# divided-difference oracle

def _pi_monomial(exp: Exponent, i: int) -> list[Tuple[Exponent, int]]:
    """Isobaric divided difference ``pi_i`` (1-based ``i``) of ``x^exp``."""
    a, b = exp[i - 1], exp[i]
    out = []

    def with_pair(k: int, rest: int) -> Exponent:
        e = list(exp)
        e[i - 1], e[i] = k, rest
        return tuple(e)

    if a >= b:
        for k in range(b, a + 1):
            out.append((with_pair(k, a + b - k), 1))
    elif a + 1 < b:
        for k in range(a + 1, b):
            out.append((with_pair(k, a + b - k), -1))
    return out


def isobaric_divided_difference(poly: Polynomial, i: int) -> Polynomial:
    if not 1 <= i < poly.n:
        raise ValueError(f"operator index {i} out of range for n={poly.n}")
    terms: list[Tuple[Exponent, int]] = []
    for exp, coeff in poly.items():
        terms.extend((e, c * coeff) for e, c in _pi_monomial(exp, i))
    return Polynomial(poly.n, terms)


def divided_difference_character(p: Partition, w: Permutation, strategy: str = "leftmost") -> Polynomial:
    """
    Demazure operator of ``w`` applied to ``x^lambda``.

    For a reduced word ``w = s_{a_1} ... s_{a_l}`` this is
    ``pi_{a_1}(... pi_{a_l}(x^lambda))``.
    """
    w = _require_rep(p, w)
    poly = Polynomial.monomial(p.parts)
    for a in reversed(reduced_word(w, strategy)):
        poly = isobaric_divided_difference(poly, a)
    return poly


def full_character(p: Partition) -> Polynomial:
    """Sum of ``x^T`` over every semistandard tableau of shape ``p`` (the Schur polynomial)."""
    return Polynomial(p.n, [(weight(t), 1) for t in enumerate_ssyt(p)])
