import pytest
from hypothesis import strategies as st

from rightkey.shape import Partition, partitions_of
from rightkey.tableau import Tableau, parse_tableau

WORKED_ROWS = "1 1 5 8 / 2 3 7 9 / 4 7 9 / 5 8 / 6 / 8 / 9"
WORKED_KEY_ROWS = "1 1 5 8 / 3 5 8 9 / 4 8 9 / 5 9 / 7 / 8 / 9"
WORKED_PI = (8, 9, 5, 1, 3, 4, 7, 2, 6)


def tab(rows: str, n: int) -> Tableau:
    return parse_tableau(rows, n)


@pytest.fixture
def worked() -> Tableau:
    return tab(WORKED_ROWS, 9)


@pytest.fixture
def worked_key() -> Tableau:
    return tab(WORKED_KEY_ROWS, 9)


@st.composite
def partitions(draw, min_n=2, max_n=6, max_cells=10):
    n = draw(st.integers(min_n, max_n))
    size = draw(st.integers(1, max_cells))
    parts = draw(st.sampled_from(list(partitions_of(size, n - 1))))
    return Partition(parts, n)


@st.composite
def ssyts(draw, min_n=2, max_n=6, max_cells=10):
    p = draw(partitions(min_n, max_n, max_cells))
    n = p.n
    cols = []
    for j, c in enumerate(p.columns):
        col = []
        for i in range(c):
            lo = col[-1] + 1 if i else 1
            if j:
                lo = max(lo, cols[j - 1][i])
            col.append(draw(st.integers(lo, n - (c - 1 - i))))
        cols.append(tuple(col))
    return Tableau(p, tuple(cols))
