"""d-dimensional partitions: finite downward-closed subsets of N^d.

A cell is a plain tuple of d nonnegative integers.  A set of cells is a
partition when decrementing any positive coordinate of any cell lands on
another cell.  For d=2 these are integer partitions (cells of a Ferrers
diagram), for d=3 plane partitions.

Two derived predicates drive everything else here.  The hook vector of a
cell collects, per axis, how far the partition extends beyond the cell in
that direction; a partition is *strongly stable* when every hook vector is
weakly increasing.  A partition is *totally symmetric* when its cell set
is fixed by every permutation of the coordinates.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import (
    CellNotInPartition,
    ClosureViolation,
    DimensionMismatch,
    InputError,
    InvalidCell,
)

Cell = tuple[int, ...]


def _as_cell(dim: int, raw) -> Cell:
    try:
        cell = tuple(raw)
    except TypeError:
        raise InvalidCell(f"cell {raw!r} must be a sequence of integers") from None
    if len(cell) != dim:
        raise DimensionMismatch(
            f"cell {cell} has length {len(cell)}, expected {dim}")
    for value in cell:
        if not isinstance(value, int) or value < 0:
            raise InvalidCell(f"cell {cell} must contain nonnegative integers")
    return cell


class Partition:
    """Canonical immutable partition.

    Cells are stored deduplicated in lexicographic order, so equal
    partitions compare and hash equal and serialize identically.  The
    empty partition is valid in any ambient dimension; the dimension is
    kept explicitly so round trips preserve it.

    Construction validates downward closure and raises
    :class:`ClosureViolation` naming the offending cell and axis.
    """

    __slots__ = ("dim", "cells", "_members")

    def __init__(self, dim: int, cells: Iterable[Iterable[int]] = ()):
        if not isinstance(dim, int) or dim < 1:
            raise InvalidCell(f"dimension must be a positive integer, got {dim!r}")
        canon = tuple(sorted({_as_cell(dim, c) for c in cells}))
        members = frozenset(canon)
        for cell in canon:
            for axis, value in enumerate(cell):
                if value > 0:
                    below = cell[:axis] + (value - 1,) + cell[axis + 1:]
                    if below not in members:
                        raise ClosureViolation(cell, axis + 1)
        self.dim = dim
        self.cells = canon
        self._members = members

    @classmethod
    def _trusted(cls, dim: int, sorted_cells: tuple[Cell, ...]) -> "Partition":
        # Internal fast path: caller guarantees canonical order and closure.
        part = object.__new__(cls)
        part.dim = dim
        part.cells = sorted_cells
        part._members = frozenset(sorted_cells)
        return part

    def __contains__(self, cell) -> bool:
        return tuple(cell) in self._members

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.dim == other.dim and self.cells == other.cells

    def __hash__(self) -> int:
        return hash((self.dim, self.cells))

    def __repr__(self) -> str:
        return f"Partition(dim={self.dim}, cells={list(self.cells)})"

    def bounding_side(self) -> int:
        """Side of the smallest cube-shaped box containing every cell.

        The empty partition fits in a box of side 0.  A nonempty partition
        with largest coordinate value m needs side m + 1.
        """
        if not self.cells:
            return 0
        return 1 + max(max(cell) for cell in self.cells)

    def hook_vector(self, cell) -> tuple[int, ...]:
        """Arm lengths of `cell`: per axis, the largest h such that the
        cell shifted h steps along that axis is still in the partition."""
        cell = _as_cell(self.dim, cell)
        if cell not in self._members:
            raise CellNotInPartition(f"cell {cell} is not in the partition")
        arms = []
        for axis in range(self.dim):
            h = 1
            while cell[:axis] + (cell[axis] + h,) + cell[axis + 1:] in self._members:
                h += 1
            arms.append(h - 1)
        return tuple(arms)

    def is_strongly_stable(self) -> bool:
        """True iff every cell's hook vector is weakly increasing."""
        for cell in self.cells:
            arms = self.hook_vector(cell)
            if any(arms[j] > arms[j + 1] for j in range(self.dim - 1)):
                return False
        return True

    def is_totally_symmetric(self) -> bool:
        """True iff the cell set is fixed by every coordinate permutation.

        Only adjacent transpositions are tested; they generate the whole
        symmetric group, and a set closed under generators is closed under
        the group.
        """
        for cell in self.cells:
            for j in range(self.dim - 1):
                swapped = cell[:j] + (cell[j + 1], cell[j]) + cell[j + 2:]
                if swapped not in self._members:
                    return False
        return True

    def orbit_count(self) -> int:
        """Number of cell classes under coordinate permutation, i.e. the
        number of distinct sorted coordinate multisets."""
        return len({tuple(sorted(cell)) for cell in self.cells})

    def to_json_dict(self) -> dict:
        return {"dim": self.dim, "cells": [list(cell) for cell in self.cells]}

    @classmethod
    def from_json_dict(cls, data) -> "Partition":
        if not isinstance(data, dict):
            raise InputError("partition JSON must be an object")
        try:
            dim = data["dim"]
            cells = data["cells"]
        except (KeyError, TypeError):
            raise InputError("partition JSON needs 'dim' and 'cells'") from None
        if not isinstance(dim, int) or not isinstance(cells, list):
            raise InputError("'dim' must be an integer and 'cells' a list")
        return cls(dim, cells)
