"""Exact rational linear algebra on dictionary-backed sparse data.

Everything in the algebra layer runs over the rationals with `Fraction`
scalars (plain ints are accepted and mix freely); there is no floating
point anywhere.  Matrices are immutable-by-convention dicts keyed by
``(row, col)``; vectors are dicts keyed by coordinate index.  Sizes in this
package stay in the hundreds, so simple Gauss-style elimination with full
reduction is fast enough and gives canonical echelon bases, which makes
span comparisons exact dictionary comparisons.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Scalar = int | Fraction
Vec = dict[int, Scalar]


def vec_add(u: Mapping[int, Scalar], v: Mapping[int, Scalar]) -> Vec:
    out = dict(u)
    for k, x in v.items():
        s = out.get(k, 0) + x
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vec_scale(c: Scalar, v: Mapping[int, Scalar]) -> Vec:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def vec_axpy(out: Vec, c: Scalar, v: Mapping[int, Scalar]) -> None:
    """In-place ``out += c * v`` (the one sanctioned mutation helper)."""
    if not c:
        return
    for k, x in v.items():
        s = out.get(k, 0) + c * x
        if s:
            out[k] = s
        else:
            out.pop(k, None)


class RatMat:
    """A sparse matrix over the rationals.  Do not mutate after creation."""

    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, nrows: int, ncols: int, data: Mapping[tuple[int, int], Scalar] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.data: dict[tuple[int, int], Scalar] = {}
        if data:
            for (r, c), x in data.items():
                if not (0 <= r < nrows and 0 <= c < ncols):
                    raise ValueError(f"entry {(r, c)} outside {nrows}x{ncols}")
                if x:
                    self.data[r, c] = x

    @classmethod
    def identity(cls, n: int) -> "RatMat":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "RatMat":
        return cls(nrows, ncols)

    @classmethod
    def from_cols(cls, cols: Sequence[Mapping[int, Scalar]], nrows: int) -> "RatMat":
        data = {(r, j): x for j, col in enumerate(cols) for r, x in col.items()}
        return cls(nrows, len(cols), data)

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[Scalar]]) -> "RatMat":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        data = {
            (r, c): x for r, row in enumerate(rows) for c, x in enumerate(row) if x
        }
        return cls(nrows, ncols, data)

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for (r, c), x in self.data.items():
            out[r][c] = Fraction(x)
        return out

    def col(self, j: int) -> Vec:
        return {r: x for (r, c), x in self.data.items() if c == j}

    def cols(self) -> list[Vec]:
        out: list[Vec] = [{} for _ in range(self.ncols)]
        for (r, c), x in self.data.items():
            out[c][r] = x
        return out

    def rows(self) -> list[Vec]:
        out: list[Vec] = [{} for _ in range(self.nrows)]
        for (r, c), x in self.data.items():
            out[r][c] = x
        return out

    def transpose(self) -> "RatMat":
        return RatMat(self.ncols, self.nrows, {(c, r): x for (r, c), x in self.data.items()})

    def apply(self, v: Mapping[int, Scalar]) -> Vec:
        """Matrix times column vector."""
        out: Vec = {}
        cols = None
        for c, x in v.items():
            if cols is None:
                cols = self.cols()
            vec_axpy(out, x, cols[c])
        return out

    def __mul__(self, other):
        if isinstance(other, RatMat):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch in matrix product")
            by_row: dict[int, Vec] = {}
            for (r, c), x in self.data.items():
                by_row.setdefault(r, {})[c] = x
            other_rows = other.rows()
            data: dict[tuple[int, int], Scalar] = {}
            for r, row in by_row.items():
                acc: Vec = {}
                for c, x in row.items():
                    vec_axpy(acc, x, other_rows[c])
                for c, x in acc.items():
                    data[r, c] = x
            return RatMat(self.nrows, other.ncols, data)
        return RatMat(self.nrows, self.ncols, {k: other * x for k, x in self.data.items()})

    __rmul__ = __mul__

    def __add__(self, other: "RatMat") -> "RatMat":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch in matrix sum")
        data = dict(self.data)
        for k, x in other.data.items():
            s = data.get(k, 0) + x
            if s:
                data[k] = s
            else:
                data.pop(k, None)
        return RatMat(self.nrows, self.ncols, data)

    def __sub__(self, other: "RatMat") -> "RatMat":
        return self + (-1) * other

    def __neg__(self) -> "RatMat":
        return (-1) * self

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RatMat)
            and (self.nrows, self.ncols) == (other.nrows, other.ncols)
            and {k: Fraction(x) for k, x in self.data.items()}
            == {k: Fraction(x) for k, x in other.data.items()}
        )

    def __hash__(self):
        return hash(
            (self.nrows, self.ncols, frozenset((k, Fraction(x)) for k, x in self.data.items()))
        )

    def is_zero(self) -> bool:
        return not self.data

    def nnz(self) -> int:
        return len(self.data)

    def trace(self) -> Fraction:
        return Fraction(sum(x for (r, c), x in self.data.items() if r == c))

    def to_quadruples(self) -> list[list[int]]:
        """Serialize as (row, col, numerator, denominator) quadruples."""
        quads = []
        for (r, c), x in sorted(self.data.items()):
            f = Fraction(x)
            quads.append([r, c, f.numerator, f.denominator])
        return quads

    @classmethod
    def from_quadruples(cls, nrows: int, ncols: int, quads: Iterable[Sequence[int]]) -> "RatMat":
        return cls(nrows, ncols, {(r, c): Fraction(num, den) for r, c, num, den in quads})

    def __repr__(self):
        return f"RatMat({self.nrows}x{self.ncols}, nnz={len(self.data)})"


class EchelonSpace:
    """An incrementally built subspace of Q^dim in fully reduced echelon form.

    Each stored row has a pivot coordinate with entry 1, and pivots do not
    appear in other rows, so the basis is canonical for the subspace: two
    spans are equal iff the stored rows are equal.  With ``track=True`` every
    stored row also carries its expression in terms of the raw vectors fed
    to `add`, which is what submodule generators / coordinates need.
    """

    def __init__(self, dim: int, track: bool = False):
        self.dim = dim
        self.track = track
        self.pivots: dict[int, int] = {}  # pivot coordinate -> row index
        self.rows: list[Vec] = []
        self.combos: list[Vec] = []  # row index -> combination of inputs
        self.n_added = 0

    def __len__(self) -> int:
        return len(self.rows)

    def _reduce(self, v: Mapping[int, Scalar]) -> tuple[Vec, Vec]:
        w = dict(v)
        combo: Vec = {self.n_added: 1} if self.track else {}
        for p in sorted(set(w) & set(self.pivots)):
            c = w.get(p, 0)
            if not c:
                continue
            idx = self.pivots[p]
            vec_axpy(w, -c, self.rows[idx])
            if self.track:
                vec_axpy(combo, -c, self.combos[idx])
        # a second pass: reductions can introduce new pivot coordinates
        while True:
            hits = [p for p in w if p in self.pivots]
            if not hits:
                break
            for p in sorted(hits):
                c = w.get(p, 0)
                if not c:
                    continue
                idx = self.pivots[p]
                vec_axpy(w, -c, self.rows[idx])
                if self.track:
                    vec_axpy(combo, -c, self.combos[idx])
        return w, combo

    def residue(self, v: Mapping[int, Scalar]) -> Vec:
        """The reduction of v modulo the current span."""
        w, _ = self._reduce(v)
        return w

    def contains(self, v: Mapping[int, Scalar]) -> bool:
        return not self.residue(v)

    def coords(self, v: Mapping[int, Scalar]) -> Vec | None:
        """Coordinates of v in the stored echelon basis, or None."""
        w = dict(v)
        out: Vec = {}
        while w:
            p = min(w)
            if p not in self.pivots:
                return None
            idx = self.pivots[p]
            c = w[p]
            out[idx] = c
            vec_axpy(w, -c, self.rows[idx])
        return out

    def input_coords(self, v: Mapping[int, Scalar]) -> Vec | None:
        """Express v as a combination of the raw added vectors (track=True)."""
        if not self.track:
            raise ValueError("EchelonSpace built without tracking")
        w = dict(v)
        out: Vec = {}
        while w:
            p = min(w)
            if p not in self.pivots:
                return None
            idx = self.pivots[p]
            c = w[p]
            vec_axpy(out, c, self.combos[idx])
            vec_axpy(w, -c, self.rows[idx])
        return out

    def add(self, v: Mapping[int, Scalar]) -> bool:
        """Add a vector to the span; True iff it enlarged the space."""
        w, combo = self._reduce(v)
        self.n_added += 1
        if not w:
            return False
        p = min(w)
        inv = Fraction(1, 1) / Fraction(w[p])
        w = {k: inv * x for k, x in w.items()}
        if self.track:
            combo = {k: inv * x for k, x in combo.items()}
        # clear the new pivot from existing rows to keep full reduction
        for idx, row in enumerate(self.rows):
            c = row.get(p, 0)
            if c:
                vec_axpy(row, -c, w)
                if self.track:
                    vec_axpy(self.combos[idx], -c, combo)
        self.pivots[p] = len(self.rows)
        self.rows.append(w)
        if self.track:
            self.combos.append(combo)
        return True

    def basis(self) -> list[Vec]:
        """Echelon basis rows sorted by pivot (canonical for the span)."""
        return [self.rows[self.pivots[p]] for p in sorted(self.pivots)]

    def canonical_key(self):
        """A hashable canonical form; equal iff the spans are equal."""
        return tuple(
            tuple(sorted((k, Fraction(x)) for k, x in row.items()))
            for row in self.basis()
        )


def span_equal(vectors_a: Iterable[Mapping[int, Scalar]], vectors_b: Iterable[Mapping[int, Scalar]], dim: int) -> bool:
    ea, eb = EchelonSpace(dim), EchelonSpace(dim)
    for v in vectors_a:
        ea.add(v)
    for v in vectors_b:
        eb.add(v)
    return ea.canonical_key() == eb.canonical_key()


def rank_of(vectors: Iterable[Mapping[int, Scalar]], dim: int) -> int:
    e = EchelonSpace(dim)
    for v in vectors:
        e.add(v)
    return len(e)


def nullspace(equations: Sequence[Mapping[int, Scalar]], nunknowns: int) -> list[Vec]:
    """Basis of the solution space of homogeneous equations over Q.

    Each equation is a sparse functional on Q^nunknowns.  Returns one basis
    vector per free unknown, each normalised with a 1 in its free slot, in
    increasing order of the free coordinate (deterministic).
    """
    e = EchelonSpace(nunknowns)
    for eq in equations:
        e.add(eq)
    pivot_cols = set(e.pivots)
    rows = e.basis()
    basis: list[Vec] = []
    for free in range(nunknowns):
        if free in pivot_cols:
            continue
        v: Vec = {free: 1}
        for row in rows:
            c = row.get(free, 0)
            if c:
                p = min(row)
                v[p] = -c
        basis.append(v)
    return basis


def det_dense(rows: Sequence[Sequence[Scalar]]) -> Fraction:
    """Determinant by fraction-free-ish Gaussian elimination over Q."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    a = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] * inv
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def invert_dense(rows: Sequence[Sequence[Scalar]]) -> list[list[Fraction]]:
    """Exact inverse via Gauss-Jordan; raises on singular input."""
    n = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]
