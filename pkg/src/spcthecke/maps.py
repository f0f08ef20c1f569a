"""Structural bijections and homomorphisms between the tableau families.

* `rho` sorts each column downward, landing on the partition rearrangement
  of the shape with longest-element type; `phi` is its greedy inverse
  (place each column entry, largest first, in the topmost row whose left
  neighbour is filled and larger); `psi` composes the two to change type.
* `tau_of_ribbon` transposes a ribbon tableau column-by-column into a
  candidate composition tableau; `ribbon_to_spct` keeps it only when it
  satisfies all defining conditions for the requested type.
* `omega_set` is the combinatorial kernel of the projected transpose map,
  and `prc_phi_map` builds that map as an exact matrix and verifies it.
* `iota_map` is the diagonal sign isomorphism from the sign-twisted ribbon
  module onto its sign-free version.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .compositions import check_composition, complement_of, is_partition, sorted_parts
from .linalg import RatMat, span_equal, nullspace
from .modules import LinearMap, ribbon_module, spct_module, submodule_on_labels
from . import permutations
from .permutations import Permutation
from . import tableaux
from .tableaux import Spct, Srt


@dataclass
class MapWitness:
    """Input/output record of one map application, with placement trace."""

    name: str
    input_rows: list
    output_rows: list | None
    trace: list = field(default_factory=list)

    def to_json(self):
        return {
            "map": self.name,
            "input": self.input_rows,
            "output": self.output_rows,
            "trace": self.trace,
        }


def rho(t: Spct) -> Spct:
    """Sort each column decreasingly downward onto the partition shape.

    >>> rho(Spct([[5, 2], [7, 6, 4], [3, 1]])).rows
    ((7, 6, 4), (5, 2), (3, 1))
    """
    lam = sorted_parts(t.shape)
    cols = [sorted(t.column(c), reverse=True) for c in range(1, t.num_columns() + 1)]
    rows = [
        tuple(cols[c][r] for c in range(lam[r]))
        for r in range(len(lam))
    ]
    return Spct(rows)


def phi(tbar: Spct, sigma: Sequence[int], witness: MapWitness | None = None) -> Spct:
    """Greedy inverse of `rho` toward the requested first-column type.

    The first column is rearranged so its standardization is `sigma`;
    every later column is distributed largest entry first, each landing in
    the smallest-index row whose previous box is filled and strictly
    larger.

    >>> phi(Spct([[7, 6, 4], [5, 2], [3, 1]]), (1, 2, 3)).rows
    ((3, 2), (5, 1), (7, 6, 4))
    """
    sigma = permutations.check_perm(sigma)
    if not is_partition(tbar.shape):
        raise ValueError(f"shape {tbar.shape} is not a partition")
    ell = len(tbar.shape)
    if len(sigma) != ell:
        raise ValueError("type degree does not match shape length")
    first = sorted(tbar.column(1))
    rows: list[list[int]] = [[first[sigma[r] - 1]] for r in range(ell)]
    if witness is not None:
        witness.trace.append({"column": 1, "placed": [row[0] for row in rows]})
    for c in range(2, tbar.num_columns() + 1):
        placed = []
        for v in sorted(tbar.column(c), reverse=True):
            for r in range(ell):
                if len(rows[r]) == c - 1 and rows[r][-1] > v:
                    rows[r].append(v)
                    placed.append({"value": v, "row": r + 1})
                    break
            else:
                raise ValueError(
                    f"no admissible row for entry {v} in column {c}; "
                    "input is not in the image of the column sort"
                )
        if witness is not None:
            witness.trace.append({"column": c, "placed": placed})
    return Spct(tuple(tuple(r) for r in rows))


def psi(t: Spct, sigma2: Sequence[int], witness: MapWitness | None = None) -> Spct:
    """Change the type through the partition-shape pivot.

    >>> psi(Spct([[5, 2], [7, 6, 4], [3, 1]]), (1, 2, 3)).shape
    (2, 2, 3)
    """
    return phi(rho(t), sigma2, witness)


# ---------------------------------------------------------------------------
# the ribbon -> composition tableau transpose


def tau_of_ribbon(T: Srt, sigma: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Row i of the result is column sigma(i) of the ribbon, decreasing.

    Always returns the raw filling; it need not satisfy the tableau
    conditions.
    """
    sigma = permutations.check_perm(sigma)
    ncols = T.num_columns()
    if len(sigma) != ncols:
        raise ValueError(
            f"type degree {len(sigma)} != number of ribbon columns {ncols}"
        )
    return tuple(
        tuple(sorted(T.column_top_down(sigma[i]), reverse=True)) for i in range(ncols)
    )


def ribbon_to_spct(T: Srt, sigma: Sequence[int]) -> Spct | None:
    """The transpose when it is a valid tableau of type sigma, else None."""
    rows = tau_of_ribbon(T, sigma)
    if tableaux.is_valid_spct_rows(rows, tuple(sigma)):
        return Spct(rows)
    return None


def spct_to_ribbon(t: Spct, sigma: Sequence[int]) -> Srt:
    """Inverse transpose: column i of the ribbon is row sigma^{-1}(i), increasing."""
    sigma = permutations.check_perm(sigma)
    inv = permutations.inverse(sigma)
    alpha = complement_of(
        permutations.compose_right_action(t.shape, inv)
    )
    spans = tableaux.rd_row_spans(alpha)
    grid: dict[tuple[int, int], int] = {}
    for c in range(1, len(inv) + 1):
        vals = sorted(t.rows[inv[c - 1] - 1])
        rows_here = sorted(
            (r + 1 for r, (lo, hi) in enumerate(spans) if lo <= c <= hi), reverse=True
        )
        for r, v in zip(rows_here, vals):
            grid[r, c] = v
    rows = tuple(
        tuple(grid[r + 1, c] for c in range(lo, hi + 1))
        for r, (lo, hi) in enumerate(spans)
    )
    return Srt(rows)


def omega_set(alpha: Sequence[int], sigma: Sequence[int], bound: int = tableaux.DEFAULT_TABLEAU_BOUND) -> list[Srt]:
    """Ribbon tableaux killed by the projected transpose map.

    Local column indexing: entry k of column j counts from the bottom box
    of that column.  A tableau is in the set when some pair of columns
    i < j is out of order at a common local height, or when the type pulls
    i before j and some entry of column i beats the one just above it in
    column j.
    """
    sigma = permutations.check_perm(sigma)
    out = []
    for T in tableaux.enumerate_srt(check_composition(alpha), bound):
        if _omega_member(T, sigma):
            out.append(T)
    return out


def _omega_member(T: Srt, sigma: Permutation) -> bool:
    ncols = T.num_columns()
    cols = [list(reversed(T.column_top_down(c))) for c in range(1, ncols + 1)]
    inv = permutations.inverse(sigma)
    for i in range(1, ncols + 1):
        for j in range(i + 1, ncols + 1):
            ci, cj = cols[i - 1], cols[j - 1]
            for k in range(1, min(len(ci), len(cj)) + 1):
                if ci[k - 1] > cj[k - 1]:
                    return True
            if inv[i - 1] < inv[j - 1]:
                for k in range(1, len(ci) + 1):
                    if k + 1 <= len(cj) and ci[k - 1] > cj[k]:
                        return True
    return False


# ---------------------------------------------------------------------------
# the projected transpose as an exact module map


@dataclass
class PrcPhiResult:
    linmap: LinearMap
    surjective: bool
    kernel_matches_omega: bool
    omega_size: int
    target_dim: int

    @property
    def ok(self) -> bool:
        return bool(self.linmap.intertwines) and self.surjective and self.kernel_matches_omega

    def to_json(self):
        return {
            "intertwines": self.linmap.intertwines,
            "surjective": self.surjective,
            "kernel_matches_omega": self.kernel_matches_omega,
            "omega_size": self.omega_size,
            "target_dim": self.target_dim,
        }


def prc_phi_map(alpha: Sequence[int], sigma: Sequence[int], bound: int = tableaux.DEFAULT_TABLEAU_BOUND) -> PrcPhiResult:
    """Build and verify the map from the sign-free ribbon module onto the
    canonical-class submodule of the transposed tableau module.

    The matrix sends a ribbon tableau to its transpose when that lands in
    the canonical class and to zero otherwise.  Verification covers the
    intertwiner property, surjectivity, and kernel == span of `omega_set`.
    """
    alpha = check_composition(alpha)
    sigma = permutations.check_perm(sigma)
    beta = permutations.compose_right_action(complement_of(alpha), sigma)
    if not tableaux.is_compatible(beta, sigma):
        raise ValueError(
            f"target shape {beta} is incompatible with {sigma}; "
            "the projected transpose map is identically zero there"
        )
    src = ribbon_module(alpha, "star", bound)
    big = spct_module(beta, sigma, bound)
    cls = tableaux.canonical_class(beta, sigma, bound)
    tgt = submodule_on_labels(big, cls.members, name=f"{big.name}|canonical")
    data = {}
    for j, T in enumerate(src.basis):
        t = ribbon_to_spct(T, sigma)
        if t is not None and t in tgt:
            data[tgt.index(t), j] = 1
    mat = RatMat(tgt.dim, src.dim, data)
    linmap = LinearMap(src, tgt, mat, name=f"prc_phi[{alpha},{sigma}]")
    linmap.check_intertwiner()
    from .linalg import rank_of

    surjective = rank_of(mat.rows(), src.dim) == tgt.dim
    kernel = nullspace(mat.rows(), src.dim)
    omega = omega_set(alpha, sigma, bound)
    omega_vecs = [{src.index(T): 1} for T in omega]
    matches = span_equal(kernel, omega_vecs, src.dim)
    return PrcPhiResult(linmap, surjective, matches, len(omega), tgt.dim)


def prc_phi_for_target(beta: Sequence[int], sigma: Sequence[int], bound: int = tableaux.DEFAULT_TABLEAU_BOUND) -> PrcPhiResult:
    """Same map, parametrized by the tableau-module side.

    The ribbon shape is the complement of the type-unsorted target shape,
    so the source corresponds to the projective cover of the canonical
    submodule of the (beta, sigma) tableau module.
    """
    beta = check_composition(beta)
    sigma = permutations.check_perm(sigma)
    alpha = complement_of(permutations.compose_right_action(beta, permutations.inverse(sigma)))
    return prc_phi_map(alpha, sigma, bound)


# ---------------------------------------------------------------------------
# the diagonal sign isomorphism


def star_distances(alpha: Sequence[int], bound: int = tableaux.DEFAULT_TABLEAU_BOUND) -> dict[Srt, int]:
    """BFS distance from the column-major source in the sign-free action graph."""
    alpha = check_composition(alpha)
    ts = tableaux.enumerate_srt(alpha, bound)
    t0 = tableaux.source_ribbon_tableau(alpha)
    dist = {t0: 0}
    queue = deque([t0])
    while queue:
        t = queue.popleft()
        for i in range(1, t.n):
            if t.row_of(i) < t.row_of(i + 1):
                u = t.swap_values(i)
                if u not in dist:
                    dist[u] = dist[t] + 1
                    queue.append(u)
    missing = [t for t in ts if t not in dist]
    if missing:
        raise RuntimeError(
            f"{len(missing)} ribbon tableaux unreachable from the source of {alpha}"
        )
    return dist


def iota_sign(T: Srt, bound: int = tableaux.DEFAULT_TABLEAU_BOUND) -> int:
    """Parity of the distance from the source tableau.

    >>> iota_sign(tableaux.source_ribbon_tableau((2, 1)))
    1
    """
    dist = star_distances(T.shape, bound)
    return ((-1) ** dist[T])


def iota_map(alpha: Sequence[int], bound: int = tableaux.DEFAULT_TABLEAU_BOUND) -> LinearMap:
    """Diagonal signs conjugating the sign-twisted module to the sign-free one."""
    alpha = check_composition(alpha)
    theta_mod = ribbon_module(alpha, "theta", bound)
    star_mod = ribbon_module(alpha, "star", bound)
    dist = star_distances(alpha, bound)
    mat = RatMat(
        star_mod.dim,
        theta_mod.dim,
        {(j, j): (-1) ** dist[T] for j, T in enumerate(theta_mod.basis)},
    )
    lm = LinearMap(theta_mod, star_mod, mat, name=f"iota[{alpha}]")
    lm.check_intertwiner()
    return lm
