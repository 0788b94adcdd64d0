import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from polelattice.linalg import IntMatrix, row_spaces_equal


def test_rank_examples():
    assert IntMatrix([[1, 2], [2, 4]], 2).rank() == 1
    assert IntMatrix([[0, 0, 0]], 3).rank() == 0
    assert IntMatrix([], 3).rank() == 0
    assert IntMatrix([{0: 1}, {1: 1}, {0: 1, 1: 1}], 2).rank() == 2


def test_large_entries_stay_exact():
    big = 10 ** 30
    assert IntMatrix([[big, 1], [big + 1, 1]], 2).rank() == 2
    assert IntMatrix([[big, 2 * big], [1, 2]], 2).rank() == 1


def test_row_space_comparison():
    a = IntMatrix([[1, 1, 0], [0, 1, 1]], 3)
    b = IntMatrix([[1, 2, 1], [1, 0, -1]], 3)
    assert row_spaces_equal(a, b)[0]
    c = IntMatrix([[1, 0, 0]], 3)
    assert not row_spaces_equal(a, c)[0]


def test_validation():
    with pytest.raises(ValueError):
        IntMatrix([[1, 2], [1]], 2)
    with pytest.raises(ValueError):
        IntMatrix([{5: 1}], 2)


@settings(max_examples=60)
@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_rank_matches_numpy(r, c, data):
    rows = data.draw(st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r))
    assert IntMatrix(rows, c).rank() == np.linalg.matrix_rank(np.array(rows, dtype=float))
