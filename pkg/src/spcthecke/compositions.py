"""Compositions, partitions, diagram geometry, and the bubble-sorting action.

A composition is a tuple of positive integers; the empty composition ``()``
has size and length 0.  Compositions of n are in bijection with subsets of
{1, ..., n-1} via partial sums (`set_of` / `comp_of`).

Two diagram conventions are used throughout the package and are kept apart
by tagging cells with a diagram kind:

* composition diagrams (``"cd"``): left-justified rows, row 1 at the TOP;
* ribbon diagrams (``"rd"``): rows indexed from the BOTTOM, the leftmost box
  of row i+1 sits directly above the rightmost box of row i.

Cells are 1-based ``(row, col)`` pairs in both conventions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Composition = tuple[int, ...]

#: largest n accepted by the shape enumerators
DEFAULT_ENUM_BOUND = 12


class BoundExceeded(ValueError):
    """Raised when a size bound guarding an exhaustive computation is hit."""


@dataclass(frozen=True, order=True)
class Cell:
    """A box of a diagram; `kind` is ``"cd"`` or ``"rd"`` (see module doc)."""

    row: int
    col: int
    kind: str = "cd"

    def __post_init__(self):
        if self.kind not in ("cd", "rd"):
            raise ValueError(f"unknown diagram kind {self.kind!r}")
        if self.row < 1 or self.col < 1:
            raise ValueError(f"cell indices are 1-based, got {(self.row, self.col)}")

    def same_kind(self, other: "Cell") -> None:
        if self.kind != other.kind:
            raise ValueError(f"mixing diagram kinds {self.kind!r} and {other.kind!r}")


def check_composition(alpha: Sequence[int]) -> Composition:
    """Validate and normalise a composition to a tuple.

    >>> check_composition([1, 3, 2])
    (1, 3, 2)
    """
    alpha = tuple(alpha)
    if any(not isinstance(a, int) or a < 1 for a in alpha):
        raise ValueError(f"composition parts must be positive integers: {alpha}")
    return alpha


def size(alpha: Sequence[int]) -> int:
    return sum(alpha)


def set_of(alpha: Sequence[int]) -> frozenset[int]:
    """The partial-sum subset of {1, ..., n-1} encoding a composition of n.

    >>> sorted(set_of((1, 3, 2)))
    [1, 4]
    >>> set_of((6,)) == frozenset()
    True
    >>> sorted(set_of((1, 1, 1)))
    [1, 2]
    """
    alpha = check_composition(alpha)
    partial = list(itertools.accumulate(alpha))
    return frozenset(partial[:-1])


def comp_of(subset: Iterable[int], n: int) -> Composition:
    """Inverse of `set_of` for compositions of n.

    >>> comp_of({1, 4}, 6)
    (1, 3, 2)
    >>> comp_of(set(), 5)
    (5,)
    >>> comp_of({1, 2, 3}, 4)
    (1, 1, 1, 1)
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    points = sorted(subset)
    if any(i < 1 or i > n - 1 for i in points):
        raise ValueError(f"subset {points} not contained in [1, {n - 1}]")
    if n == 0:
        return ()
    cuts = [0] + points + [n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def reverse_of(alpha: Sequence[int]) -> Composition:
    return tuple(reversed(check_composition(alpha)))


def complement_of(alpha: Sequence[int]) -> Composition:
    """The composition whose subset is the complement of `set_of(alpha)`.

    >>> complement_of((2, 2, 1, 1, 1, 2, 1))
    (1, 2, 5, 2)
    """
    n = size(alpha)
    return comp_of(frozenset(range(1, n)) - set_of(alpha), n)


def transpose_of(alpha: Sequence[int]) -> Composition:
    """reverse . complement == complement . reverse."""
    return reverse_of(complement_of(alpha))


def sorted_parts(alpha: Sequence[int]) -> Composition:
    """The partition obtained by sorting parts weakly decreasing."""
    return tuple(sorted(check_composition(alpha), reverse=True))


def transform(alpha: Sequence[int], kind: str) -> Composition:
    """Dispatch reverse / complement / transpose / sort by name.

    >>> transform((2, 2, 1, 1, 1, 2, 1), "complement")
    (1, 2, 5, 2)
    >>> transform((1, 3, 2), "reverse")
    (2, 3, 1)
    >>> transform((1, 3, 2), "sort")
    (3, 2, 1)
    """
    table = {
        "reverse": reverse_of,
        "complement": complement_of,
        "transpose": transpose_of,
        "sort": sorted_parts,
    }
    if kind not in table:
        raise ValueError(f"unknown transform {kind!r}")
    return table[kind](alpha)


def is_partition(alpha: Sequence[int]) -> bool:
    alpha = check_composition(alpha)
    return all(a >= b for a, b in zip(alpha, alpha[1:]))


# ---------------------------------------------------------------------------
# diagram geometry


def cd_cells(alpha: Sequence[int]) -> list[Cell]:
    """All cells of the composition diagram, column-major (col, then row)."""
    alpha = check_composition(alpha)
    width = max(alpha, default=0)
    return [
        Cell(r + 1, c, "cd")
        for c in range(1, width + 1)
        for r, part in enumerate(alpha)
        if part >= c
    ]


def rd_row_spans(alpha: Sequence[int]) -> list[tuple[int, int]]:
    """Column span (start, end) of each ribbon row, rows listed bottom-up.

    >>> rd_row_spans((1, 3, 2))
    [(1, 1), (1, 3), (3, 4)]
    """
    alpha = check_composition(alpha)
    spans = []
    start = 1
    for part in alpha:
        spans.append((start, start + part - 1))
        start += part - 1
    return spans


def rd_cells(alpha: Sequence[int]) -> list[Cell]:
    """Cells of the ribbon diagram, column-major, top-to-bottom in a column.

    Rows are indexed from the bottom, so "top" within a column means the
    larger row index.
    """
    spans = rd_row_spans(alpha)
    width = spans[-1][1] if spans else 0
    cells = []
    for c in range(1, width + 1):
        rows = [r + 1 for r, (lo, hi) in enumerate(spans) if lo <= c <= hi]
        for r in sorted(rows, reverse=True):
            cells.append(Cell(r, c, "rd"))
    return cells


def rd_column_heights(alpha: Sequence[int]) -> list[int]:
    """Number of boxes in each ribbon column, left to right.

    The column heights of rd(alpha) read off the complement composition:

    >>> rd_column_heights((2, 2, 1, 1, 1, 2, 1))
    [1, 2, 5, 2]
    """
    spans = rd_row_spans(alpha)
    width = spans[-1][1] if spans else 0
    return [
        sum(1 for lo, hi in spans if lo <= c <= hi) for c in range(1, width + 1)
    ]


# ---------------------------------------------------------------------------
# the bubble-sorting right action on compositions


def bubble_act(alpha: Sequence[int], i: int) -> Composition:
    """Apply the i-th bubble operator: swap parts i, i+1 iff part i is smaller.

    >>> bubble_act((1, 3, 2), 1)
    (3, 1, 2)
    >>> bubble_act((3, 1, 2), 2)
    (3, 2, 1)
    >>> bubble_act((2, 1), 1)
    (2, 1)
    """
    alpha = check_composition(alpha)
    if not 1 <= i <= len(alpha) - 1:
        raise ValueError(f"generator index {i} out of range for length {len(alpha)}")
    if alpha[i - 1] < alpha[i]:
        parts = list(alpha)
        parts[i - 1], parts[i] = parts[i], parts[i - 1]
        return tuple(parts)
    return alpha


def bubble_act_word(alpha: Sequence[int], word: Sequence[int]) -> Composition:
    """Apply a word of bubble operators left to right (a right action)."""
    beta = check_composition(alpha)
    for i in word:
        beta = bubble_act(beta, i)
    return beta


def bubble_fiber_word(alpha: Sequence[int], word: Sequence[int]) -> set[Composition]:
    """All beta with ``bubble_act_word(beta, word) == alpha``.

    Computed by pulling back one letter at a time from the end of the word;
    the single-letter preimages of gamma under operator i are gamma itself
    (when part i >= part i+1) and gamma with parts i, i+1 swapped (when
    part i > part i+1).
    """
    alpha = check_composition(alpha)
    fiber = {alpha}
    for i in reversed(list(word)):
        prev: set[Composition] = set()
        for gamma in fiber:
            if gamma[i - 1] >= gamma[i]:
                prev.add(gamma)
            if gamma[i - 1] > gamma[i]:
                parts = list(gamma)
                parts[i - 1], parts[i] = parts[i], parts[i - 1]
                prev.add(tuple(parts))
        fiber = prev
    return fiber


def bubble_fiber(alpha: Sequence[int], sigma: Sequence[int]) -> set[Composition]:
    """All beta sent to alpha by the bubble word of a reduced word of sigma.

    The result does not depend on the chosen reduced word (the operators
    satisfy the defining relations of the generators; this is also covered
    by tests).

    >>> sorted(bubble_fiber((2, 1), (2, 1)))
    [(1, 2), (2, 1)]
    >>> bubble_fiber((1, 2), (2, 1))
    set()
    >>> bubble_fiber((2, 2), (2, 1))
    {(2, 2)}
    """
    from . import permutations

    sigma = permutations.check_perm(sigma)
    if len(sigma) != len(alpha):
        raise ValueError(
            f"permutation degree {len(sigma)} != composition length {len(alpha)}"
        )
    return bubble_fiber_word(alpha, permutations.reduced_word(sigma))


# ---------------------------------------------------------------------------
# enumeration


def compositions(n: int) -> list[Composition]:
    """All compositions of n, lexicographic on parts.

    This order coincides with the binary order on characteristic vectors of
    `set_of`, which keeps golden files stable.

    >>> compositions(3)
    [(1, 1, 1), (1, 2), (2, 1), (3,)]
    >>> compositions(0)
    [()]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [()]
    out: list[Composition] = []

    def rec(remaining: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for first in range(1, remaining + 1):
            rec(remaining - first, prefix + (first,))

    rec(n, ())
    return out


def partitions(n: int) -> list[Composition]:
    """All partitions of n, lexicographic on part tuples.

    >>> partitions(4)
    [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [()]
    out: list[Composition] = []

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for first in range(1, min(cap, remaining) + 1):
            rec(remaining - first, first, prefix + (first,))

    rec(n, n, ())
    return sorted(out)


def subsets(n: int) -> list[frozenset[int]]:
    """Subsets of {1, ..., n-1} in the order matching `compositions(n)`."""
    return [set_of(alpha) for alpha in compositions(n)]


def enumerate_shapes(n: int, kind: str, bound: int = DEFAULT_ENUM_BOUND):
    """Bounded front end over `compositions` / `partitions` / `subsets`."""
    if n > bound:
        raise BoundExceeded(f"n = {n} exceeds enumeration bound {bound}")
    table = {"compositions": compositions, "partitions": partitions, "subsets": subsets}
    if kind not in table:
        raise ValueError(f"unknown enumeration kind {kind!r}")
    return table[kind](n)


def compositions_upto(n: int) -> Iterator[Composition]:
    """Compositions of every size from 1 through n, smaller sizes first."""
    for m in range(1, n + 1):
        yield from compositions(m)


def to_json(alpha: Sequence[int]) -> list[int]:
    return list(check_composition(alpha))
