"""Standard permuted composition tableaux and standard ribbon tableaux.

An `Spct` is a bijective filling of a composition diagram by 1..n whose
rows strictly decrease left to right, whose first column standardizes to a
prescribed permutation (the *type*), and which satisfies the triple
condition: whenever i < j and the entry at (i, k) exceeds the entry at
(j, k+1), the box (i, k+1) exists and its entry also exceeds the one at
(j, k+1).  Rows of an `Spct` are stored top to bottom.

An `Srt` is a filling of a ribbon diagram by 1..n with rows increasing left
to right and columns increasing top to bottom.  Ribbon rows are stored
bottom to top, matching the row indexing of ribbon diagrams.

Besides enumeration (column-major backtracking with the triple condition
checked as each box is placed), this module hosts the structural
predicates on shape/type pairs: compatibility, obstruction pairs with
their witness conditions, sigma-simplicity, removable nodes, and the
explicit canonical source tableau and its hatted variant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .compositions import (
    BoundExceeded,
    Cell,
    Composition,
    check_composition,
    comp_of,
    rd_row_spans,
)
from . import permutations
from .permutations import Permutation, standardize

#: largest n accepted by the tableau enumerators
DEFAULT_TABLEAU_BOUND = 9


class Spct:
    """A filling of a composition diagram; rows top to bottom, 1-based cells.

    The constructor checks only that the entries are exactly 1..n; use
    `is_valid_spct_rows` for the full defining conditions (constructions
    such as the hatted source filling are allowed to produce invalid
    fillings, which are kept as raw rows).
    """

    __slots__ = ("rows", "shape", "n", "_pos")

    def __init__(self, rows: Iterable[Iterable[int]]):
        self.rows: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in rows)
        self.shape: Composition = check_composition(tuple(len(r) for r in self.rows))
        self.n = sum(self.shape)
        self._pos: dict[int, tuple[int, int]] = {}
        for i, row in enumerate(self.rows, start=1):
            for j, v in enumerate(row, start=1):
                self._pos[v] = (i, j)
        if sorted(self._pos) != list(range(1, self.n + 1)):
            raise ValueError(f"entries must be exactly 1..{self.n}: {self.rows}")

    def entry(self, row: int, col: int) -> int | None:
        """Entry at 1-based (row, col), or None outside the diagram."""
        if 1 <= row <= len(self.rows) and 1 <= col <= len(self.rows[row - 1]):
            return self.rows[row - 1][col - 1]
        return None

    def pos(self, value: int) -> tuple[int, int]:
        return self._pos[value]

    @property
    def sigma(self) -> Permutation:
        """The type: standardization of the first column read top to bottom."""
        return standardize(tuple(row[0] for row in self.rows))

    def column(self, c: int) -> list[int]:
        """Entries of column c, top to bottom."""
        return [row[c - 1] for row in self.rows if len(row) >= c]

    def num_columns(self) -> int:
        return max(self.shape, default=0)

    def swap_values(self, i: int) -> "Spct":
        """The filling with values i and i+1 exchanged."""
        return Spct(
            tuple(
                tuple(i + 1 if v == i else i if v == i + 1 else v for v in row)
                for row in self.rows
            )
        )

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def pretty(self) -> str:
        """Left-justified rows, top to bottom, in diagram orientation."""
        width = max((len(str(v)) for row in self.rows for v in row), default=1)
        return "\n".join(
            " ".join(str(v).rjust(width) for v in row) for row in self.rows
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, Spct) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Spct({[list(r) for r in self.rows]})"


class Srt:
    """A standard ribbon tableau; rows stored bottom to top."""

    __slots__ = ("rows", "shape", "n", "spans", "_pos")

    def __init__(self, rows: Iterable[Iterable[int]]):
        self.rows: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in rows)
        self.shape: Composition = check_composition(tuple(len(r) for r in self.rows))
        self.n = sum(self.shape)
        self.spans = rd_row_spans(self.shape)
        self._pos: dict[int, tuple[int, int]] = {}
        for i, (row, (lo, _)) in enumerate(zip(self.rows, self.spans), start=1):
            for off, v in enumerate(row):
                self._pos[v] = (i, lo + off)
        if sorted(self._pos) != list(range(1, self.n + 1)):
            raise ValueError(f"entries must be exactly 1..{self.n}: {self.rows}")

    def pos(self, value: int) -> tuple[int, int]:
        """(row from the bottom, column) of a value."""
        return self._pos[value]

    def row_of(self, value: int) -> int:
        return self._pos[value][0]

    def num_columns(self) -> int:
        return self.spans[-1][1] if self.spans else 0

    def column_rows(self, c: int) -> list[int]:
        """Row indices meeting column c, from top (largest) down."""
        return sorted(
            (i + 1 for i, (lo, hi) in enumerate(self.spans) if lo <= c <= hi),
            reverse=True,
        )

    def entry(self, row: int, col: int) -> int | None:
        if not 1 <= row <= len(self.rows):
            return None
        lo, hi = self.spans[row - 1]
        if lo <= col <= hi:
            return self.rows[row - 1][col - lo]
        return None

    def column_top_down(self, c: int) -> list[int]:
        """Entries of column c from the visual top down (increasing)."""
        return [self.entry(r, c) for r in self.column_rows(c)]

    def entry_from_bottom(self, k: int, c: int) -> int | None:
        """k-th entry counted from the bottom of column c (local indexing)."""
        col = self.column_top_down(c)
        if 1 <= k <= len(col):
            return col[len(col) - k]
        return None

    def swap_values(self, i: int) -> "Srt":
        return Srt(
            tuple(
                tuple(i + 1 if v == i else i if v == i + 1 else v for v in row)
                for row in self.rows
            )
        )

    def to_json(self) -> list[list[int]]:
        """Rows bottom to top, matching the shape composition."""
        return [list(r) for r in self.rows]

    def pretty(self) -> str:
        """Drawn with the first row at the bottom and columns aligned."""
        width = max((len(str(v)) for row in self.rows for v in row), default=1)
        lines = []
        for (lo, _), row in sorted(zip(self.spans, self.rows), reverse=True):
            pad = " " * ((lo - 1) * (width + 1))
            lines.append(pad + " ".join(str(v).rjust(width) for v in row))
        return "\n".join(lines)

    def __eq__(self, other) -> bool:
        return isinstance(other, Srt) and self.rows == other.rows

    def __hash__(self):
        return hash(("srt", self.rows))

    def __repr__(self):
        return f"Srt({[list(r) for r in self.rows]})"


# ---------------------------------------------------------------------------
# validity and enumeration


def is_valid_spct_rows(rows: Sequence[Sequence[int]], sigma: Sequence[int] | None = None) -> bool:
    """Full defining check on a raw filling (rows top to bottom).

    Checks bijectivity onto 1..n, strict row decrease, the triple
    condition, and (when `sigma` is given) the first-column type.
    """
    rows = tuple(tuple(r) for r in rows)
    entries = [v for row in rows for v in row]
    n = len(entries)
    if sorted(entries) != list(range(1, n + 1)):
        return False
    if any(len(row) == 0 for row in rows):
        return False
    for row in rows:
        if any(a <= b for a, b in zip(row, row[1:])):
            return False
    if sigma is not None:
        if standardize(tuple(row[0] for row in rows)) != tuple(sigma):
            return False
    width = max((len(r) for r in rows), default=0)
    for k in range(1, width):
        for i, j in itertools.combinations(range(len(rows)), 2):
            if len(rows[j]) < k + 1 or len(rows[i]) < k:
                continue
            if rows[i][k - 1] > rows[j][k]:
                if len(rows[i]) < k + 1 or rows[i][k] <= rows[j][k]:
                    return False
    return True


def _check_tableau_bound(n: int, bound: int) -> None:
    if n > bound:
        raise BoundExceeded(f"n = {n} exceeds tableau enumeration bound {bound}")


@lru_cache(maxsize=200_000)
def enumerate_spct(
    alpha: Composition, sigma: Permutation, bound: int = DEFAULT_TABLEAU_BOUND
) -> tuple[Spct, ...]:
    """All fillings of shape `alpha` and type `sigma`, deterministically.

    Cells are filled column by column (top to bottom within a column) with
    ascending candidate entries; the row, type and triple conditions are
    enforced as each box is placed, so the recursion never revisits a
    violated prefix.  Returns () exactly when the pair is incompatible,
    which is verified against `is_compatible` rather than assumed.

    >>> [t.rows for t in enumerate_spct((2, 1), (2, 1))]
    [((3, 2), (1,)), ((3, 1), (2,))]
    >>> enumerate_spct((1, 2), (2, 1))
    ()
    """
    alpha = check_composition(alpha)
    sigma = permutations.check_perm(sigma)
    if len(sigma) != len(alpha):
        raise ValueError(
            f"type degree {len(sigma)} != shape length {len(alpha)}"
        )
    n = sum(alpha)
    _check_tableau_bound(n, bound)
    if n == 0:
        return (Spct(()),)

    ell = len(alpha)
    width = max(alpha)
    cells = [
        (r, c)
        for c in range(1, width + 1)
        for r in range(1, ell + 1)
        if alpha[r - 1] >= c
    ]
    grid = [[0] * alpha[r] for r in range(ell)]
    used = [False] * (n + 1)
    out: list[Spct] = []

    def place_ok(r: int, c: int, v: int) -> bool:
        if c == 1:
            for rp in range(1, r):
                if (v > grid[rp - 1][0]) != (sigma[r - 1] > sigma[rp - 1]):
                    return False
            return True
        if grid[r - 1][c - 2] <= v:
            return False
        for i in range(1, r):
            if alpha[i - 1] >= c - 1 and grid[i - 1][c - 2] > v:
                if alpha[i - 1] < c or grid[i - 1][c - 1] <= v:
                    return False
        return True

    def fill(k: int):
        if k == len(cells):
            out.append(Spct(tuple(tuple(row) for row in grid)))
            return
        r, c = cells[k]
        for v in range(1, n + 1):
            if used[v] or not place_ok(r, c, v):
                continue
            used[v] = True
            grid[r - 1][c - 1] = v
            fill(k + 1)
            used[v] = False
        grid[r - 1][c - 1] = 0

    fill(0)
    return tuple(out)


@lru_cache(maxsize=50_000)
def enumerate_srt(alpha: Composition, bound: int = DEFAULT_TABLEAU_BOUND) -> tuple[Srt, ...]:
    """All standard ribbon tableaux of shape `alpha`, deterministically.

    >>> len(enumerate_srt((2, 2)))
    5
    >>> len(enumerate_srt((3,)))
    1
    >>> len(enumerate_srt((1, 1, 1)))
    1
    """
    alpha = check_composition(alpha)
    n = sum(alpha)
    _check_tableau_bound(n, bound)
    if n == 0:
        return (Srt(()),)
    spans = rd_row_spans(alpha)
    width = spans[-1][1]
    cells = []
    for c in range(1, width + 1):
        rows_here = [r + 1 for r, (lo, hi) in enumerate(spans) if lo <= c <= hi]
        cells.extend((r, c) for r in sorted(rows_here, reverse=True))
    grid = {cell: 0 for cell in cells}
    used = [False] * (n + 1)
    out: list[Srt] = []

    def place_ok(r: int, c: int, v: int) -> bool:
        left = grid.get((r, c - 1))
        if left is not None and left >= v:
            return False
        above = grid.get((r + 1, c))
        if above is not None and above >= v:
            return False
        return True

    def fill(k: int):
        if k == len(cells):
            rows = tuple(
                tuple(grid[r + 1, c] for c in range(lo, hi + 1))
                for r, (lo, hi) in enumerate(spans)
            )
            out.append(Srt(rows))
            return
        r, c = cells[k]
        for v in range(1, n + 1):
            if used[v] or not place_ok(r, c, v):
                continue
            used[v] = True
            grid[r, c] = v
            fill(k + 1)
            used[v] = False
        grid[r, c] = 0

    fill(0)
    return tuple(out)


def source_ribbon_tableau(alpha: Sequence[int]) -> Srt:
    """The ribbon filled 1..n column by column, top to bottom in a column.

    This is the cyclic generator of the ribbon modules.
    """
    alpha = check_composition(alpha)
    spans = rd_row_spans(alpha)
    width = spans[-1][1] if spans else 0
    grid: dict[tuple[int, int], int] = {}
    v = 1
    for c in range(1, width + 1):
        rows_here = [r + 1 for r, (lo, hi) in enumerate(spans) if lo <= c <= hi]
        for r in sorted(rows_here, reverse=True):
            grid[r, c] = v
            v += 1
    rows = tuple(
        tuple(grid[r + 1, c] for c in range(lo, hi + 1))
        for r, (lo, hi) in enumerate(spans)
    )
    return Srt(rows)


# ---------------------------------------------------------------------------
# descents, attacking pairs, class labels


def descent_set(t: Spct) -> frozenset[int]:
    """Values i such that i+1 sits weakly right of i (column comparison)."""
    des = set()
    for i in range(1, t.n):
        if t.pos(i + 1)[1] >= t.pos(i)[1]:
            des.add(i)
    return frozenset(des)


def is_attacking(t: Spct, i: int, j: int) -> bool:
    """Whether values i < j attack: same column, or j lower-right of i."""
    if not i < j:
        raise ValueError("attacking is defined for i < j")
    ri, ci = t.pos(i)
    rj, cj = t.pos(j)
    return ci == cj or (cj == ci + 1 and rj > ri)


@dataclass(frozen=True)
class DescentData:
    descents: frozenset[int]
    attacking: dict[int, bool]
    comp: Composition


def descents(t: Spct) -> DescentData:
    """Descent set, per-descent attacking flags, and the descent composition.

    >>> d = descents(Spct([[3, 2], [1]]))
    >>> sorted(d.descents), d.comp
    ([1], (1, 2))
    >>> d = descents(Spct([[3, 1], [2]]))
    >>> sorted(d.descents), d.attacking[2], d.comp
    ([2], True, (2, 1))
    """
    des = descent_set(t)
    return DescentData(des, {i: is_attacking(t, i, i + 1) for i in sorted(des)}, comp_of(des, t.n))


def comp_of_tableau(t: Spct) -> Composition:
    return comp_of(descent_set(t), t.n)


def col_word(t: Spct) -> Permutation:
    """Column reading word (columns left to right, top to bottom) in S_n."""
    word = []
    for c in range(1, t.num_columns() + 1):
        word.extend(t.column(c))
    return permutations.check_perm(tuple(word))


@dataclass(frozen=True)
class ClassLabel:
    """Shape plus the per-column standardized words; equal iff equivalent."""

    shape: Composition
    words: tuple[Permutation, ...]

    def __str__(self):
        return " ".join("".join(str(v) for v in w) for w in self.words)


def class_label(t: Spct) -> ClassLabel:
    """The standardized column word of a tableau.

    >>> str(class_label(Spct([[4, 1], [6, 5, 3], [2]])))
    '231 12 1'
    """
    return ClassLabel(
        t.shape,
        tuple(standardize(tuple(t.column(c))) for c in range(1, t.num_columns() + 1)),
    )


def classify(t: Spct) -> str:
    """One of 'source', 'sink', 'both', 'interior'.

    A source requires every non-descent i < n to have i+1 immediately to
    its left; a sink requires every descent to attack.
    """
    des = descent_set(t)
    src = True
    for i in range(1, t.n):
        if i in des:
            continue
        ri, ci = t.pos(i)
        rj, cj = t.pos(i + 1)
        if not (ri == rj and cj == ci - 1):
            src = False
            break
    snk = all(is_attacking(t, i, i + 1) for i in des)
    if src and snk:
        return "both"
    if src:
        return "source"
    if snk:
        return "sink"
    return "interior"


@dataclass(frozen=True)
class SpctClass:
    label: ClassLabel
    members: tuple[Spct, ...]
    source: Spct
    sink: Spct


def equivalence_classes(
    alpha: Composition, sigma: Permutation, bound: int = DEFAULT_TABLEAU_BOUND
) -> list[SpctClass]:
    """Partition of the tableau set by standardized column word.

    Each class records its unique source and sink (their existence and
    uniqueness is itself exercised by the verification suite).
    """
    groups: dict[ClassLabel, list[Spct]] = {}
    for t in enumerate_spct(check_composition(alpha), permutations.check_perm(sigma), bound):
        groups.setdefault(class_label(t), []).append(t)
    classes = []
    for label, members in groups.items():
        sources = [t for t in members if classify(t) in ("source", "both")]
        sinks = [t for t in members if classify(t) in ("sink", "both")]
        if len(sources) != 1 or len(sinks) != 1:
            raise RuntimeError(
                f"class {label} of ({alpha}, {sigma}) has {len(sources)} sources "
                f"and {len(sinks)} sinks"
            )
        classes.append(SpctClass(label, tuple(members), sources[0], sinks[0]))
    classes.sort(key=lambda cl: cl.members[0].rows)
    return classes


def canonical_class(
    alpha: Composition, sigma: Permutation, bound: int = DEFAULT_TABLEAU_BOUND
) -> SpctClass:
    """The class containing the canonical source tableau."""
    tau_c = canonical_source_tableau(alpha, sigma)
    label = class_label(tau_c)
    for cl in equivalence_classes(alpha, sigma, bound):
        if cl.label == label:
            return cl
    raise RuntimeError(f"canonical class not found for ({alpha}, {sigma})")


# ---------------------------------------------------------------------------
# shape/type predicates


def is_compatible(alpha: Sequence[int], sigma: Sequence[int]) -> bool:
    """Whether parts never increase across a type inversion.

    >>> is_compatible((1, 2, 1, 3), (2, 1, 3, 4))
    False
    >>> is_compatible((1, 1, 2, 3), (2, 1, 3, 4))
    True
    """
    alpha = check_composition(alpha)
    sigma = permutations.check_perm(sigma)
    if len(alpha) != len(sigma):
        raise ValueError("shape length and type degree differ")
    return all(
        alpha[i] >= alpha[j]
        for i, j in itertools.combinations(range(len(alpha)), 2)
        if sigma[i] > sigma[j]
    )


@dataclass(frozen=True)
class PacdPair:
    """An ascending-type, descending-shape pair with its witness lists.

    `c1` holds intermediate indices k (i < k < j) whose type value lies
    between the pair's and whose part is one less than part j; `c2` holds
    later indices k (k > j) with type value in between and part equal to
    part j.  1-based throughout.
    """

    i: int
    j: int
    c1: tuple[int, ...]
    c2: tuple[int, ...]

    @property
    def witnessed(self) -> bool:
        return bool(self.c1 or self.c2)


def pacd_pairs(alpha: Sequence[int], sigma: Sequence[int]) -> list[PacdPair]:
    """All obstruction pairs attached to a compatible shape/type pair."""
    alpha = check_composition(alpha)
    sigma = permutations.check_perm(sigma)
    if not is_compatible(alpha, sigma):
        raise ValueError(f"{alpha} is not compatible with {sigma}")
    ell = len(alpha)
    pairs = []
    for i, j in itertools.combinations(range(1, ell + 1), 2):
        if sigma[i - 1] < sigma[j - 1] and alpha[i - 1] >= alpha[j - 1] >= 2:
            lo, hi = sigma[i - 1], sigma[j - 1]
            c1 = tuple(
                k
                for k in range(i + 1, j)
                if lo < sigma[k - 1] < hi and alpha[k - 1] == alpha[j - 1] - 1
            )
            c2 = tuple(
                k
                for k in range(j + 1, ell + 1)
                if lo < sigma[k - 1] < hi and alpha[k - 1] == alpha[j - 1]
            )
            pairs.append(PacdPair(i, j, c1, c2))
    return pairs


def is_sigma_simple(alpha: Sequence[int], sigma: Sequence[int]) -> bool:
    """Whether every obstruction pair carries a witness.

    >>> is_sigma_simple((3, 3, 1, 2), (2, 1, 3, 4))
    True
    >>> is_sigma_simple((3, 1, 2, 2), (2, 1, 3, 4))
    False
    """
    return all(p.witnessed for p in pacd_pairs(alpha, sigma))


def removable_nodes(alpha: Sequence[int], sigma: Sequence[int]) -> list[Cell]:
    """Terminal boxes (j, part j) that can carry the entry 1.

    A part has a removable node when its type value is 1, or when it has
    at least two boxes, no earlier smaller-type part is exactly one
    shorter, and no later smaller-type part is equally long.

    >>> [(c.row, c.col) for c in removable_nodes((4, 1, 2, 2), (2, 1, 3, 4))]
    [(1, 4), (2, 1)]
    """
    alpha = check_composition(alpha)
    sigma = permutations.check_perm(sigma)
    if not is_compatible(alpha, sigma):
        raise ValueError(f"{alpha} is not compatible with {sigma}")
    out = []
    for j in range(1, len(alpha) + 1):
        if sigma[j - 1] == 1:
            out.append(Cell(j, alpha[j - 1], "cd"))
            continue
        if alpha[j - 1] < 2:
            continue
        r2 = any(
            sigma[k - 1] < sigma[j - 1] and alpha[k - 1] == alpha[j - 1] - 1
            for k in range(1, j)
        )
        r3 = any(
            sigma[k - 1] < sigma[j - 1] and alpha[k - 1] == alpha[j - 1]
            for k in range(j + 1, len(alpha) + 1)
        )
        if not r2 and not r3:
            out.append(Cell(j, alpha[j - 1], "cd"))
    return out


def decrement_part(
    alpha: Sequence[int], sigma: Sequence[int], m: int
) -> tuple[Composition, Permutation]:
    """Shrink part m by one box, dropping it (and value 1 of the type) at 0.

    Returns the new shape together with the type acting on it: the type is
    unchanged while part m stays positive, and loses the value 1 when the
    part disappears.
    """
    alpha = check_composition(alpha)
    sigma = permutations.check_perm(sigma)
    if not 1 <= m <= len(alpha):
        raise ValueError(f"part index {m} out of range")
    if alpha[m - 1] > 1:
        parts = list(alpha)
        parts[m - 1] -= 1
        return tuple(parts), sigma
    if sigma[m - 1] != 1:
        raise ValueError(
            f"part {m} of {alpha} has one box but type value {sigma[m - 1]} != 1"
        )
    parts = alpha[: m - 1] + alpha[m:]
    return parts, permutations.sigma_down(sigma)


def bold_sigma(alpha: Sequence[int], sigma: Sequence[int], m: int) -> Permutation:
    """The type attached to shrinking part m: unchanged, or 1 removed."""
    alpha = check_composition(alpha)
    sigma = permutations.check_perm(sigma)
    if alpha[m - 1] > 1:
        return sigma
    return permutations.sigma_down(sigma)


def _canonical_rows(alpha: Composition, sigma: Permutation) -> tuple[tuple[int, ...], ...]:
    inv = permutations.inverse(sigma)
    rows: list[tuple[int, ...]] = [()] * len(alpha)
    start = 0
    for i in range(1, len(alpha) + 1):
        r = inv[i - 1]
        part = alpha[r - 1]
        rows[r - 1] = tuple(range(start + part, start, -1))
        start += part
    return tuple(rows)


def canonical_source_tableau(alpha: Sequence[int], sigma: Sequence[int]) -> Spct:
    """The explicit source tableau: consecutive blocks placed row by row.

    The row holding the i-th block of entries is the row whose type value
    is i; each block is written decreasing left to right.

    >>> canonical_source_tableau((1, 3, 2, 4), (1, 3, 2, 4)).rows
    ((1,), (6, 5, 4), (3, 2), (10, 9, 8, 7))
    >>> canonical_source_tableau((2, 1), (2, 1)).rows
    ((3, 2), (1,))
    """
    alpha = check_composition(alpha)
    sigma = permutations.check_perm(sigma)
    if len(alpha) != len(sigma):
        raise ValueError("shape length and type degree differ")
    if not is_compatible(alpha, sigma):
        raise ValueError(f"{alpha} is not compatible with {sigma}")
    return Spct(_canonical_rows(alpha, sigma))


@dataclass(frozen=True)
class HattedSource:
    """Result of the hatted source construction; not always a valid SPCT."""

    rows: tuple[tuple[int, ...], ...]
    valid: bool

    @property
    def spct(self) -> Spct | None:
        return Spct(self.rows) if self.valid else None


def hatted_source_tableau(alpha: Sequence[int], sigma: Sequence[int]) -> HattedSource:
    """Shift the canonical filling of the shrunk shape and re-add entry 1.

    The last block's row loses a box, everything is shifted up by one, and
    a box holding 1 is appended to that row.  The result satisfies the
    defining conditions only under extra hypotheses, so it is returned as
    a raw filling with a validity flag.

    >>> h = hatted_source_tableau((1, 3, 2, 4), (1, 3, 2, 4))
    >>> h.rows, h.valid
    (((2,), (7, 6, 5), (4, 3), (10, 9, 8, 1)), False)
    >>> hatted_source_tableau((2, 2), (1, 2)).rows
    ((3, 2), (4, 1))
    """
    alpha = check_composition(alpha)
    sigma = permutations.check_perm(sigma)
    ell = len(alpha)
    r_last = permutations.inverse(sigma)[ell - 1]
    if alpha[r_last - 1] < 2:
        raise ValueError(
            f"row {r_last} of {alpha} has fewer than two boxes; construction undefined"
        )
    beta = list(alpha)
    beta[r_last - 1] -= 1
    base = _canonical_rows(tuple(beta), sigma)
    shifted = [tuple(v + 1 for v in row) for row in base]
    shifted[r_last - 1] = shifted[r_last - 1] + (1,)
    rows = tuple(shifted)
    return HattedSource(rows, is_valid_spct_rows(rows, sigma))


def entry_one_cells(
    alpha: Composition, sigma: Permutation, bound: int = DEFAULT_TABLEAU_BOUND
) -> set[Cell]:
    """Cells carrying the entry 1 across all tableaux of the given pair."""
    out = set()
    for t in enumerate_spct(check_composition(alpha), permutations.check_perm(sigma), bound):
        r, c = t.pos(1)
        out.add(Cell(r, c, "cd"))
    return out
