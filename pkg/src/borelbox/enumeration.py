"""Exhaustive enumeration of boxed partitions, with exact cross-checks.

The enumerators extend cell sets depth-first in graded lexicographic
order: every downward-closed set, listed in that order, has downward
closed prefixes, so a cell may be appended exactly when all of its
coordinate predecessors are already present.  Two refinements keep the
constrained streams small:

* strongly stable partitions are additionally closed under moving one
  unit of a coordinate to any later position, and that condition also
  holds prefix-by-prefix, so it prunes the walk to exactly the strongly
  stable sets;
* totally symmetric partitions are walked by orbit representative (cells
  with sorted coordinates), adding a whole orbit at a time.

Completed candidates are still re-validated with the definitional hook
and symmetry predicates before being yielded.  The stable and symmetric
counters share nothing with the bijection machinery, so equal counts are
a genuine cross-check of the side-preserving bijection.

Counting, the triple product formula for totally symmetric plane
partitions, and the q-analogue evaluated by exact polynomial division
round out the module.
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product
from typing import Callable, Iterator

from .errors import NonIntegerProduct, ResourceLimit
from .partitions import Cell, Partition
from .qpoly import QPolynomial

PREDICATES = ("all", "strongly_stable", "totally_symmetric")


class _Budget:
    """Node budget shared by every branch of one enumeration."""

    __slots__ = ("limit", "_ticks")

    def __init__(self, limit: int | None):
        if limit is not None and limit < 1:
            raise ValueError("budget must be a positive integer or None")
        self.limit = limit
        self._ticks = itertools.count(1)

    def tick(self) -> None:
        if self.limit is not None and next(self._ticks) > self.limit:
            raise ResourceLimit(self.limit)


def _graded(cells) -> list[Cell]:
    return sorted(cells, key=lambda c: (sum(c), c))


def _cell_requirements(dim: int, side: int, stable: bool):
    """Box cells in graded lexicographic order, with the set of earlier
    cells each one needs before it may be added (None when it can never
    occur in a strongly stable set bounded by this box)."""
    order = _graded(product(range(side), repeat=dim))
    index = {c: i for i, c in enumerate(order)}
    requires: list[tuple[int, ...] | None] = []
    for cell in order:
        need = []
        possible = True
        for j in range(dim):
            if cell[j] > 0:
                need.append(index[cell[:j] + (cell[j] - 1,) + cell[j + 1:]])
        if stable:
            for j in range(dim - 1):
                if cell[j] > 0:
                    image = cell[:j] + (cell[j] - 1, cell[j + 1] + 1) + cell[j + 2:]
                    if image[j + 1] >= side:
                        possible = False
                        break
                    need.append(index[image])
        requires.append(tuple(need) if possible else None)
    return order, requires


def _orbit_requirements(dim: int, side: int):
    """Orbit representatives (weakly increasing cells) in graded
    lexicographic order, each with the representatives of its predecessor
    orbits."""
    order = _graded(combinations_with_replacement(range(side), dim))
    index = {r: i for i, r in enumerate(order)}
    requires: list[tuple[int, ...] | None] = []
    for rep in order:
        need = set()
        for value in set(rep):
            if value > 0:
                pos = rep.index(value)
                below = tuple(sorted(rep[:pos] + (value - 1,) + rep[pos + 1:]))
                need.add(index[below])
        requires.append(tuple(sorted(need)))
    return order, requires


def _walk(requires, chosen: list[int], chosen_set: set[int], start: int,
          tick: Callable[[], None]) -> Iterator[tuple[int, ...]]:
    """Depth-first over admissible index sets; yields every extension of
    `chosen` (itself included) exactly once."""
    tick()
    yield tuple(chosen)
    for i in range(start, len(requires)):
        need = requires[i]
        if need is None or not chosen_set.issuperset(need):
            continue
        chosen.append(i)
        chosen_set.add(i)
        yield from _walk(requires, chosen, chosen_set, i + 1, tick)
        chosen.pop()
        chosen_set.remove(i)


def _mode(dim: int, side: int, predicate: str):
    if predicate == "totally_symmetric":
        order, requires = _orbit_requirements(dim, side)

        def finalize(idxs: tuple[int, ...]) -> Partition | None:
            cells = set()
            for i in idxs:
                cells.update(permutations(order[i]))
            part = Partition._trusted(dim, tuple(sorted(cells)))
            return part if part.is_totally_symmetric() else None
    else:
        stable = predicate == "strongly_stable"
        order, requires = _cell_requirements(dim, side, stable)

        def finalize(idxs: tuple[int, ...]) -> Partition | None:
            part = Partition._trusted(dim, tuple(sorted(order[i] for i in idxs)))
            if stable and not part.is_strongly_stable():
                return None
            return part
    return order, requires, finalize


def _check_box_args(dim: int, side: int, predicate: str) -> None:
    if not isinstance(dim, int) or dim < 1:
        raise ValueError(f"dimension must be a positive integer, got {dim!r}")
    if not isinstance(side, int) or side < 0:
        raise ValueError(f"side must be a nonnegative integer, got {side!r}")
    if predicate not in PREDICATES:
        raise ValueError(f"predicate must be one of {PREDICATES}, got {predicate!r}")


def enumerate_partitions(dim: int, side: int, predicate: str = "all", *,
                         budget: int | None = None) -> Iterator[Partition]:
    """Yield every partition with bounding side at most `side` satisfying
    the predicate, each exactly once, in a deterministic depth-first
    order starting from the empty partition.

    `budget` caps the number of search nodes; exceeding it raises
    :class:`ResourceLimit`.
    """
    _check_box_args(dim, side, predicate)
    _, requires, finalize = _mode(dim, side, predicate)
    limiter = _Budget(budget)
    for idxs in _walk(requires, [], set(), 0, limiter.tick):
        part = finalize(idxs)
        if part is not None:
            yield part


def _tally(dim: int, side: int, predicate: str, stat: Callable[[Partition], int],
           *, budget: int | None = None, threads: int = 1) -> Counter:
    """Tally stat(partition) over the enumerated stream.

    With threads > 1 the walk is partitioned at depth two (the sets of
    size below two are handled inline), and the per-subtree tallies are
    merged; merging counters is order-independent, so the result does not
    depend on the worker count.
    """
    _check_box_args(dim, side, predicate)
    if not isinstance(threads, int) or threads < 1:
        raise ValueError(f"threads must be a positive integer, got {threads!r}")
    _, requires, finalize = _mode(dim, side, predicate)
    limiter = _Budget(budget)
    counter: Counter = Counter()

    def absorb(idxs: tuple[int, ...]) -> None:
        part = finalize(idxs)
        if part is not None:
            counter[stat(part)] += 1

    if threads == 1 or not requires:
        for idxs in _walk(requires, [], set(), 0, limiter.tick):
            absorb(idxs)
        return counter

    roots = [i for i in range(len(requires)) if requires[i] == ()]
    limiter.tick()
    absorb(())
    tasks = []
    for i in roots:
        limiter.tick()
        absorb((i,))
        for j in range(i + 1, len(requires)):
            need = requires[j]
            if need is not None and set(need) <= {i}:
                tasks.append((i, j))

    def run(task: tuple[int, int]) -> Counter:
        i, j = task
        local: Counter = Counter()
        for idxs in _walk(requires, [i, j], {i, j}, j + 1, limiter.tick):
            part = finalize(idxs)
            if part is not None:
                local[stat(part)] += 1
        return local

    with ThreadPoolExecutor(max_workers=threads) as pool:
        for local in pool.map(run, tasks):
            counter.update(local)
    return counter


def count_ss(dim: int, side: int, *, budget: int | None = None,
             threads: int = 1) -> int:
    """Number of strongly stable partitions fitting in a box of the given
    side, the empty partition included."""
    tallies = _tally(dim, side, "strongly_stable", lambda p: 0,
                     budget=budget, threads=threads)
    return sum(tallies.values())


def count_ts(dim: int, side: int, *, budget: int | None = None,
             threads: int = 1) -> int:
    """Number of totally symmetric partitions fitting in a box of the
    given side, the empty partition included."""
    tallies = _tally(dim, side, "totally_symmetric", lambda p: 0,
                     budget=budget, threads=threads)
    return sum(tallies.values())


@dataclass(frozen=True)
class CountTable:
    """Cumulative counts of strongly stable and totally symmetric
    partitions by box side, from 0 up to `side`."""

    dim: int
    side: int
    stable: tuple[int, ...]
    symmetric: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {"d": self.dim, "n": self.side,
                "B": list(self.stable), "T": list(self.symmetric)}


def count_table(dim: int, side: int, *, budget: int | None = None,
                threads: int = 1) -> CountTable:
    """Cumulative count table built from one enumeration per class,
    bucketed by bounding side."""
    def cumulative(predicate: str) -> tuple[int, ...]:
        by_side = _tally(dim, side, predicate, Partition.bounding_side,
                         budget=budget, threads=threads)
        running, out = 0, []
        for k in range(side + 1):
            running += by_side.get(k, 0)
            out.append(running)
        return tuple(out)

    return CountTable(dim, side, cumulative("strongly_stable"),
                      cumulative("totally_symmetric"))


def _counter_poly(tallies: Counter) -> QPolynomial:
    coeffs = [0] * (max(tallies, default=0) + 1)
    for power, count in tallies.items():
        coeffs[power] = count
    return QPolynomial(coeffs)


def orbit_gf_ts(dim: int, side: int, *, budget: int | None = None,
                threads: int = 1) -> QPolynomial:
    """Generating function summing q^(orbit count) over the totally
    symmetric partitions in the box."""
    return _counter_poly(_tally(dim, side, "totally_symmetric",
                                Partition.orbit_count,
                                budget=budget, threads=threads))


def cell_gf_ss(dim: int, side: int, *, budget: int | None = None,
               threads: int = 1) -> QPolynomial:
    """Generating function summing q^(cell count) over the strongly
    stable partitions in the box."""
    return _counter_poly(_tally(dim, side, "strongly_stable", len,
            budget=budget, threads=threads))


def stembridge_t3(n: int) -> int:
    """Totally symmetric plane partitions in an n-box, by the triple
    product over 1 <= i <= j <= k <= n of (i+j+k-1)/(i+j+k-2), evaluated
    in exact rational arithmetic.

    The result is guaranteed to be an integer; a fractional outcome
    signals an arithmetic bug and raises :class:`NonIntegerProduct`.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    total = Fraction(1)
    for i, j, k in combinations_with_replacement(range(1, n + 1), 3):
        total *= Fraction(i + j + k - 1, i + j + k - 2)
    if total.denominator != 1:
        raise NonIntegerProduct(f"product for n={n} is the fraction {total}")
    return int(total)


def qtspp(n: int) -> QPolynomial:
    """Orbit-counting q-analogue for totally symmetric plane partitions in
    an n-box: the product over 1 <= i <= j <= k <= n of
    (1 - q^(i+j+k-1)) / (1 - q^(i+j+k-2)).

    The numerators are multiplied out first and each denominator is then
    divided off exactly; any nonzero remainder raises
    :class:`InexactDivision`, since polynomiality is guaranteed.
    Evaluating the result at q=1 equals :func:`stembridge_t3`.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    poly = QPolynomial.one()
    denominators = []
    for i, j, k in combinations_with_replacement(range(1, n + 1), 3):
        poly = poly * QPolynomial.one_minus_q_power(i + j + k - 1)
        denominators.append(i + j + k - 2)
    for b in denominators:
        poly = poly.exact_div(QPolynomial.one_minus_q_power(b))
    return poly


def hawkes_check(dim: int, side: int, *, budget: int | None = None,
                 threads: int = 1) -> bool:
    """Check the box-transposition identity: the count for dimension d and
    side n equals the count for dimension n-1 and side d+1.  Both sides
    are enumerated independently."""
    if side < 2:
        raise ValueError("the identity needs side >= 2")
    left = count_ss(dim, side, budget=budget, threads=threads)
    right = count_ss(side - 1, dim + 1, budget=budget, threads=threads)
    return left == right
