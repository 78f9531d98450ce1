import json
from itertools import permutations, product

import pytest
from hypothesis import given

from rightkey.errors import ParseError, ValidationError
from rightkey.permutation import Permutation, coset_representatives
from rightkey.shape import Partition, all_shapes
from rightkey.tableau import (
    Tableau,
    enumerate_ssyt,
    format_tableau,
    is_key,
    key_leq,
    key_of_permutation,
    parse_tableau,
    tableau_from_json,
    tableau_to_json,
    weight,
)

from conftest import WORKED_KEY_ROWS, ssyts, tab


def brute_force_ssyt(p):
    """Every filling in [n]^cells, kept if rows weakly and columns strictly increase."""
    cells = [(r, c) for r in range(len(p.parts)) for c in range(p.parts[r])]
    out = []
    for vals in product(range(1, p.n + 1), repeat=len(cells)):
        f = dict(zip(cells, vals))
        ok = all(
            (c == 0 or f[(r, c - 1)] <= f[(r, c)]) and (r == 0 or f[(r - 1, c)] < f[(r, c)])
            for (r, c) in cells
        )
        if ok:
            rows = [[f[(r, c)] for c in range(p.parts[r])] for r in range(len(p.parts)) if p.parts[r]]
            out.append(Tableau.from_rows(rows, p.n))
    return out


def test_tableau_accessors(worked):
    assert worked[1, 7] == 9 and worked[4, 2] == 9 and worked[2, 3] == 7
    assert worked.column(3) == (5, 7, 9)
    assert worked.rows[0] == (1, 1, 5, 8)
    assert worked.is_semistandard()
    with pytest.raises(KeyError):
        worked[4, 3]


def test_invalid_fillings():
    with pytest.raises(ValidationError):
        Tableau.from_rows([[1, 4]], 3)
    assert not Tableau.from_rows([[2, 1]], 3).is_semistandard()
    assert not Tableau.from_rows([[1], [1]], 3).is_semistandard()


def test_key_of_permutation_worked_example(worked_key):
    p = worked_key.shape
    assert key_of_permutation(p, (8, 9, 5, 1, 3, 4, 7, 2, 6)) == worked_key


def test_key_of_permutation_small():
    assert key_of_permutation(Partition((1,), 2), (2, 1)).columns == ((2,),)
    assert key_of_permutation(Partition((2, 1), 3), (3, 1, 2)).columns == ((1, 3), (3,))


def test_key_leq():
    p = Partition((2, 1), 3)
    a = tab("1 2 / 2", 3)
    b = tab("1 3 / 3", 3)
    assert key_leq(a, b)
    assert key_leq(b, b)
    low = key_of_permutation(p, (1, 2, 3))
    for w in coset_representatives(p):
        assert key_leq(low, key_of_permutation(p, w))
    with pytest.raises(ValidationError):
        key_leq(a, tab("1 2", 3))


def test_weight(worked):
    # direct count of each value in the displayed tableau
    assert weight(worked) == (2, 1, 1, 1, 2, 1, 2, 3, 3)
    assert sum(weight(worked)) == worked.shape.size
    assert weight(tab("1", 2)) == (1, 0)
    assert weight(tab("1 1 / 2 2", 3)) == (2, 2, 0)


def test_enumerate_small_cases():
    assert [t.columns for t in enumerate_ssyt(Partition((1,), 2))] == [((1,),), ((2,),)]
    assert len(list(enumerate_ssyt(Partition((2, 1), 3)))) == 8
    assert [t.columns for t in enumerate_ssyt(Partition((1, 1), 3))] == [((1, 2),), ((1, 3),), ((2, 3),)]


@pytest.mark.parametrize("p", list(all_shapes(4, 5)), ids=str)
def test_enumerate_matches_brute_force(p):
    got = list(enumerate_ssyt(p))
    assert len(got) == len(set(got))
    assert set(got) == set(brute_force_ssyt(p))
    words = [t.reading_word() for t in got]
    assert words == sorted(words)


def test_is_key(worked, worked_key):
    assert is_key(worked_key)
    assert not is_key(worked)
    assert is_key(tab("1 / 3 / 4", 5))


def test_key_constant_on_cosets():
    # permuting inside each block leaves the key unchanged
    for p in all_shapes(5, 5):
        blocks = p.profile.blocks()
        for w in coset_representatives(p):
            k = key_of_permutation(p, w)
            for block in blocks:
                vals = [w(i) for i in block]
                for shuffled in permutations(vals):
                    images = list(w.images)
                    for pos, v in zip(block, shuffled):
                        images[pos - 1] = v
                    assert key_of_permutation(p, images) == k


def test_text_and_json_roundtrip(worked):
    text = format_tableau(worked)
    assert text.splitlines()[1] == "2 3 7 9"
    assert parse_tableau(text, 9) == worked
    assert parse_tableau("n=9; " + text.replace("\n", " / ")) == worked
    assert parse_tableau("n=9\n" + text) == worked
    data = tableau_to_json(worked)
    assert data == json.loads(json.dumps(data))
    assert tableau_from_json(data) == worked
    assert parse_tableau(json.dumps(data)) == worked


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_tableau("1 a / 2")
    with pytest.raises(ParseError):
        parse_tableau("   ")
    with pytest.raises(ParseError):
        parse_tableau("n=4; 1 2", 5)
    with pytest.raises(ParseError):
        parse_tableau('{"rows": [[1]]}')


def test_default_n_is_large_enough():
    t = parse_tableau("1 2 / 2")
    assert t.n == 3


@given(ssyts())
def test_random_tableaux_are_semistandard(t):
    assert t.is_semistandard()
    assert sum(weight(t)) == t.shape.size


def test_worked_key_rows_constant():
    assert tab(WORKED_KEY_ROWS, 9).rows[-1] == (9,)
