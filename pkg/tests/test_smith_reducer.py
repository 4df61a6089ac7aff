import pytest

from smith_reducer import SmithReducer, reduce_rows


def dense(rows):
    return [{c: v for c, v in enumerate(row) if v} for row in rows]


@pytest.mark.parametrize("rows, rank, torsion", [
    ([[1, 2], [3, 4]], 2, (2,)),
    ([[2, 0], [0, 3]], 2, (6,)),
    ([[2, 0], [0, 2]], 2, (2, 2)),
    ([[1, 1], [1, 1]], 1, ()),
    ([[0, 0], [0, 0]], 0, ()),
    ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], 3, (2, 6, 12)),
])
def test_rank_and_torsion(rows, rank, torsion):
    result = reduce_rows(dense(rows), len(rows[0]))
    assert result.rank == rank
    assert result.torsion == torsion


def test_unit_pivots_are_counted():
    result = SmithReducer().reduce(dense([[1, 0, 0], [0, -1, 0], [0, 0, 2]]), 3)
    assert result.unit_pivots == 2
    assert result.residual_shape == (1, 1)
    assert result.torsion == (2,)


def test_boundary_of_a_triangle_has_no_torsion():
    # Incidence matrix of a directed 3-cycle: rank 2, free cokernel part of rank 1.
    rows = dense([[-1, 1, 0], [0, -1, 1], [1, 0, -1]])
    result = reduce_rows(rows, 3)
    assert (result.rank, result.torsion) == (2, ())
    assert result.residual_shape == (0, 0)


def test_empty_input():
    assert reduce_rows([], 4).rank == 0
