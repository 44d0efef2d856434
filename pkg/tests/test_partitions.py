import pytest
from hypothesis import given, strategies as st

from borelbox import (
    CellNotInPartition,
    ClosureViolation,
    DimensionMismatch,
    InvalidCell,
    Partition,
    enumerate_partitions,
)

import bruteforce
from cases import SS_PARTITION_2D_CELLS, STAIRCASE_2D_CELLS, TS_PARTITION_2D_CELLS


def test_staircase_is_valid():
    p = Partition(2, STAIRCASE_2D_CELLS)
    assert len(p) == 7
    assert p.cells == STAIRCASE_2D_CELLS


def test_empty_partition_is_valid_in_any_dimension():
    for d in (1, 2, 3, 5):
        p = Partition(d)
        assert len(p) == 0
        assert p.bounding_side() == 0


def test_missing_origin_raises_closure_violation():
    with pytest.raises(ClosureViolation) as info:
        Partition(2, [(1, 0)])
    assert info.value.cell == (1, 0)
    assert info.value.axis == 1


def test_wrong_cell_length_raises():
    with pytest.raises(DimensionMismatch):
        Partition(2, [(0, 0, 0)])


def test_negative_coordinate_raises():
    with pytest.raises(InvalidCell):
        Partition(2, [(0, -1)])


def test_cells_canonical_deduplicated_sorted():
    p = Partition(2, [(1, 0), (0, 0), (0, 1), (0, 0)])
    assert p.cells == ((0, 0), (0, 1), (1, 0))
    assert p == Partition(2, [(0, 1), (1, 0), (0, 0)])
    assert hash(p) == hash(Partition(2, p.cells))


def test_hook_vector_on_strict_column_partition():
    p = Partition(2, SS_PARTITION_2D_CELLS)
    assert p.hook_vector((0, 0)) == (3, 6)


def test_hook_vector_examples():
    p = Partition(2, STAIRCASE_2D_CELLS)
    assert p.hook_vector((1, 0)) == (2, 1)
    assert Partition(2, [(0, 0)]).hook_vector((0, 0)) == (0, 0)


def test_hook_vector_requires_membership():
    p = Partition(2, [(0, 0)])
    with pytest.raises(CellNotInPartition):
        p.hook_vector((1, 1))


def test_strongly_stable_examples():
    assert Partition(2, SS_PARTITION_2D_CELLS).is_strongly_stable()
    assert Partition(3).is_strongly_stable()
    assert not Partition(2, [(0, 0), (1, 0)]).is_strongly_stable()


def test_totally_symmetric_examples():
    assert Partition(2, TS_PARTITION_2D_CELLS).is_totally_symmetric()
    assert Partition(3, [(0, 0, 0)]).is_totally_symmetric()
    assert not Partition(2, [(0, 0), (0, 1)]).is_totally_symmetric()


def test_bounding_side_examples():
    assert Partition(2, STAIRCASE_2D_CELLS).bounding_side() == 4
    assert Partition(3).bounding_side() == 0


def test_orbit_count_examples():
    assert Partition(2, TS_PARTITION_2D_CELLS).orbit_count() == 15
    assert Partition(3, [(0, 0, 0)]).orbit_count() == 1
    cube = Partition(3, bruteforce.box_cells(3, 2))
    assert cube.orbit_count() == 4


def test_one_dimensional_partitions_satisfy_both_predicates():
    for k in range(5):
        p = Partition(1, [(i,) for i in range(k)])
        assert p.is_strongly_stable()
        assert p.is_totally_symmetric()


def test_hooks_match_membership_scan_oracle():
    for p in enumerate_partitions(3, 2, "all"):
        for cell in p.cells:
            arms = p.hook_vector(cell)
            for j in range(3):
                assert arms[j] == bruteforce.arm_length(p.cells, cell, j)


def test_strongly_stable_matches_distinct_columns_in_5_box():
    # In two dimensions the hook condition is equivalent to all column
    # heights being distinct.
    for p in enumerate_partitions(2, 5, "all"):
        heights = {}
        for a, b in p.cells:
            heights[a] = max(heights.get(a, 0), b + 1)
        distinct = len(set(heights.values())) == len(heights)
        assert p.is_strongly_stable() == distinct


def test_predicates_match_naive_oracles_in_3_box():
    for p in enumerate_partitions(3, 3, "all"):
        assert p.is_strongly_stable() == bruteforce.naive_strongly_stable(p.cells)
        assert p.is_totally_symmetric() == bruteforce.naive_totally_symmetric(p.cells)


def test_orbit_count_at_most_cell_count():
    for p in enumerate_partitions(3, 2, "all"):
        assert p.orbit_count() <= len(p)


cell_lists_2d = st.lists(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), max_size=10)


@given(cell_lists_2d)
def test_removing_a_maximal_cell_keeps_validity(raw):
    cells = bruteforce.close_down(raw)
    p = Partition(2, cells)
    for cell in p.cells:
        successors = (cell[:j] + (cell[j] + 1,) + cell[j + 1:] for j in range(2))
        if any(s in p for s in successors):
            continue
        Partition(2, set(p.cells) - {cell})  # must not raise


@given(cell_lists_2d)
def test_json_round_trip(raw):
    p = Partition(2, bruteforce.close_down(raw))
    assert Partition.from_json_dict(p.to_json_dict()) == p
