"""The complement correspondence between Artinian ideals and partitions.

An Artinian monomial ideal leaves only finitely many monomials outside
itself; their exponent vectors form a partition.  Conversely the
monomials whose exponents avoid a partition form an Artinian ideal.  The
two maps are mutually inverse, and they match strongly stable ideals with
strongly stable partitions and symmetric ideals with totally symmetric
partitions.
"""

from __future__ import annotations

from itertools import product

from .ideals import MonomialIdeal
from .partitions import Partition


def ideal_to_partition(ideal: MonomialIdeal) -> Partition:
    """Partition of all exponent vectors outside the ideal.

    Requires an Artinian ideal so the complement is finite; every cell
    coordinate is strictly below the largest pure power degree n, so the
    scan box {0..n-1}^d is exact.
    """
    n = ideal.artinian_side()
    cells = [cell for cell in product(range(n), repeat=ideal.dim)
             if not ideal.contains(cell)]
    return Partition(ideal.dim, cells)


def partition_to_ideal(partition: Partition) -> MonomialIdeal:
    """Minimal generators of the ideal of monomials outside the partition.

    A vector outside the partition is a minimal generator exactly when
    decrementing any positive coordinate lands inside the partition.  No
    minimal generator has a coordinate above the bounding side n, so the
    scan box {0..n}^d is exact.  The empty partition maps to the unit
    ideal.
    """
    n = partition.bounding_side()
    dim = partition.dim
    gens = []
    for alpha in product(range(n + 1), repeat=dim):
        if alpha in partition:
            continue
        if all(alpha[j] == 0
               or alpha[:j] + (alpha[j] - 1,) + alpha[j + 1:] in partition
               for j in range(dim)):
            gens.append(alpha)
    return MonomialIdeal(dim, gens)
