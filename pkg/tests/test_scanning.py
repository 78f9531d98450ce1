import random

import pytest
from hypothesis import given, settings

from rightkey.errors import ValidationError
from rightkey.permutation import Permutation, coset_representatives, identity
from rightkey.scanning import (
    annotate_paths,
    ewis,
    most_recent,
    path_containing,
    path_for,
    scanning_paths,
    scanning_tableau,
    sigma,
    u_set,
)
from rightkey.shape import Location, Partition, all_shapes
from rightkey.tableau import Tableau, enumerate_ssyt, is_key, key_of_permutation

from conftest import WORKED_KEY_ROWS, WORKED_PI, ssyts, tab

# superscripts of the path annotation in the worked example
WORKED_ANNOTATED = """\
1^1 1^1 5^4 8^6
2^2 3^2 7^5 9^7
4^3 7^5 9^7
5^4 8^6
6^5
8^6
9^7"""


def test_ewis_examples():
    assert ewis((9, 8, 9, 9)) == (1, 3, 4)
    assert ewis((5,)) == (1,)
    assert ewis((2, 1, 3, 2, 4)) == (1, 3, 5)
    assert ewis((3, 3, 3)) == (1, 2, 3)
    with pytest.raises(ValueError):
        ewis(())


def test_worked_example_paths(worked):
    paths = scanning_paths(worked, 1)
    assert [p.origin.row for p in paths] == [7, 6, 5, 4, 3, 2, 1]
    assert path_for(paths, 5).cells == ((1, 5), (2, 3), (3, 2))
    assert path_for(paths, 7).cells == ((1, 7), (3, 3), (4, 2))
    assert annotate_paths(worked, 1) == WORKED_ANNOTATED


def test_paths_from_last_column_are_singletons(worked):
    for p in scanning_paths(worked, 4):
        assert p.cells == (p.origin,)


def test_small_paths():
    t = tab("1 2 / 2", 3)
    paths = scanning_paths(t, 1)
    assert path_for(paths, 2).cells == ((1, 2), (2, 1))
    assert path_for(paths, 1).cells == ((1, 1),)
    with pytest.raises(ValidationError):
        scanning_paths(t, 3)


def test_most_recent_examples(worked):
    paths = scanning_paths(worked, 1)
    assert most_recent(worked, paths, 1, 5, Location(3, 3)) == ((2, 3), 7)
    assert most_recent(worked, paths, 1, 7, Location(3, 3)) == ((1, 7), 9)
    # (2,4) is the first location after (1,1), so only the origin is before it
    assert most_recent(worked, paths, 1, 1, Location(2, 4)) == ((1, 1), 1)
    with pytest.raises(ValidationError):
        most_recent(worked, paths, 1, 3, Location(1, 2))


def test_u_set_examples(worked):
    assert u_set(worked, 1, Location(3, 2)) == {1, 3, 4, 5, 7, 8, 9}
    assert u_set(worked, 1, Location(4, 1)) == set(scanning_tableau(worked).column(1))
    assert u_set(worked, 4, Location(4, 1)) == set(worked.column(4))
    with pytest.raises(ValidationError):
        u_set(worked, 2, Location(1, 3))


def test_scanning_tableau_worked_example(worked, worked_key):
    assert scanning_tableau(worked) == worked_key
    assert sigma(worked).images == WORKED_PI


def test_single_column_is_fixed():
    t = tab("2 / 3 / 5", 6)
    assert scanning_tableau(t) == t


def test_sigma_small():
    t = tab("1 2 / 2", 3)
    s = scanning_tableau(t)
    assert key_of_permutation(t.shape, sigma(t)) == s
    p = Partition((2, 1), 3)
    assert sigma(key_of_permutation(p, identity(3))) == identity(3)


@pytest.mark.parametrize("p", list(all_shapes(4, 6)), ids=str)
def test_keys_are_fixed_points(p):
    for w in coset_representatives(p):
        k = key_of_permutation(p, w)
        assert scanning_tableau(k) == k


def _check_partition(t):
    """Paths from column j cover every cell from column j on exactly once."""
    for j in range(1, t.shape.width + 1):
        covered = [c for p in scanning_paths(t, j) for c in p.cells]
        expected = [c for c in t.shape.cells() if c.col >= j]
        assert sorted(covered) == sorted(expected)


def _check_deletions_stay_semistandard(t):
    """After each deletion the surviving cells of each column are a top segment
    and the column heights still form a partition."""
    for j in range(1, t.shape.width + 1):
        removed = set()
        for p in scanning_paths(t, j):
            removed |= set(p.cells)
            cols = []
            for l in range(j, t.shape.width + 1):
                kept = [i for i in range(1, t.shape.c(l) + 1) if (l, i) not in removed]
                assert kept == list(range(1, len(kept) + 1))
                if kept:
                    cols.append(tuple(t[l, i] for i in kept))
            heights = [len(c) for c in cols]
            assert heights == sorted(heights, reverse=True)
            if cols:
                rest = Tableau.from_columns(cols, t.n)
                assert rest.is_semistandard()


@pytest.mark.parametrize("p", list(all_shapes(4, 5)), ids=str)
def test_path_structure_exhaustive(p):
    for t in enumerate_ssyt(p):
        _check_partition(t)
        _check_deletions_stay_semistandard(t)
        assert is_key(scanning_tableau(t))


@settings(max_examples=150, deadline=None)
@given(ssyts(max_n=7, max_cells=12))
def test_path_structure_random(t):
    _check_partition(t)
    _check_deletions_stay_semistandard(t)
    s = scanning_tableau(t)
    assert is_key(s)
    # each scanning value is at least the starting value
    for j in range(1, t.shape.width + 1):
        for i in range(1, t.shape.c(j) + 1):
            assert s[j, i] >= t[j, i]


@settings(max_examples=150, deadline=None)
@given(ssyts(max_n=7, max_cells=12))
def test_paths_weakly_increase_and_move_right(t):
    for j in range(1, t.shape.width + 1):
        for p in scanning_paths(t, j):
            vals = [t[c] for c in p.cells]
            assert vals == sorted(vals)
            cols = [c.col for c in p.cells]
            assert all(a < b for a, b in zip(cols, cols[1:]))


def test_path_containing(worked):
    paths = scanning_paths(worked, 1)
    assert path_containing(paths, Location(2, 4)).origin.row == 6
    assert path_containing(scanning_paths(worked, 2), Location(1, 1)) is None
