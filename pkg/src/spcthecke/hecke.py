"""The degree-n 0-Hecke algebra in its generator basis.

Elements are finitely supported rational combinations of basis elements
indexed by permutations.  The basis multiplication rule on the right is

    (basis sigma) * gen_i  =  basis(sigma s_i)   if that is longer,
                              basis(sigma)       otherwise,

and symmetrically on the left with s_i sigma.  Products of arbitrary
elements reduce to iterated generator multiplications along reduced words,
which is also how the barred generators (gen_i - 1) and the sign-flip
automorphism (gen_i -> 1 - gen_i) are expanded.

The regular representation and its cyclic left ideals generated by
(barred longest element of a parabolic) * (plain longest element of the
complementary parabolic) -- the projective indecomposables -- are built
here as `HModule` values with exact matrices.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .compositions import BoundExceeded
from .linalg import EchelonSpace, RatMat, Scalar, Vec
from .modules import DEFAULT_ALGEBRA_BOUND, HModule
from . import permutations
from .permutations import Permutation


class HeckeElement:
    """A finitely supported coefficient map on the permutation basis."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Permutation, Scalar] | None = None):
        self.n = n
        self.terms: dict[Permutation, Scalar] = {}
        if terms:
            for p, c in terms.items():
                if len(p) != n:
                    raise ValueError(f"basis index {p} not in degree {n}")
                if c:
                    self.terms[permutations.check_perm(p)] = c

    @classmethod
    def unit(cls, n: int) -> "HeckeElement":
        return cls(n, {permutations.identity(n): 1})

    @classmethod
    def pi(cls, sigma: Sequence[int]) -> "HeckeElement":
        sigma = permutations.check_perm(sigma)
        return cls(len(sigma), {sigma: 1})

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        if self.n != other.n:
            raise ValueError("degree mismatch")
        terms = dict(self.terms)
        for p, c in other.terms.items():
            s = terms.get(p, 0) + c
            if s:
                terms[p] = s
            else:
                terms.pop(p, None)
        return HeckeElement(self.n, terms)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "HeckeElement":
        return HeckeElement(self.n, {p: scalar * c for p, c in self.terms.items()})

    def __neg__(self) -> "HeckeElement":
        return (-1) * self

    def times_gen(self, i: int) -> "HeckeElement":
        """Right multiplication by the i-th generator."""
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"generator index {i} out of range")
        terms: dict[Permutation, Scalar] = {}
        for p, c in self.terms.items():
            q = permutations.times_s(p, i)
            tgt = q if permutations.length(q) > permutations.length(p) else p
            s = terms.get(tgt, 0) + c
            if s:
                terms[tgt] = s
            else:
                terms.pop(tgt, None)
        return HeckeElement(self.n, terms)

    def __mul__(self, other):
        if not isinstance(other, HeckeElement):
            return other * self
        if self.n != other.n:
            raise ValueError("degree mismatch")
        out = HeckeElement(self.n)
        for p, c in other.terms.items():
            cur = self
            for i in permutations.reduced_word(p):
                cur = cur.times_gen(i)
            out = out + c * cur
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HeckeElement)
            and self.n == other.n
            and {p: Fraction(c) for p, c in self.terms.items()}
            == {p: Fraction(c) for p, c in other.terms.items()}
        )

    def __hash__(self):
        return hash((self.n, frozenset((p, Fraction(c)) for p, c in self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"HeckeElement({self.n}, 0)"
        bits = [f"{c}*pi{p}" for p, c in sorted(self.terms.items())]
        return f"HeckeElement({self.n}, {' + '.join(bits)})"


def pi_element(sigma: Sequence[int]) -> HeckeElement:
    return HeckeElement.pi(sigma)


def opi_element(sigma: Sequence[int]) -> HeckeElement:
    """Expansion of the barred basis element in the plain basis.

    Multiplies out (gen - 1) factors along a reduced word; the result does
    not depend on the word.

    >>> opi_element((2, 1)) == HeckeElement(2, {(2, 1): 1, (1, 2): -1})
    True
    >>> opi_element((1, 2)) == HeckeElement.unit(2)
    True
    """
    sigma = permutations.check_perm(sigma)
    out = HeckeElement.unit(len(sigma))
    for i in permutations.reduced_word(sigma):
        out = out.times_gen(i) - out
    return out


def theta(h: HeckeElement) -> HeckeElement:
    """The involutive algebra automorphism sending gen_i to 1 - gen_i."""
    out = HeckeElement(h.n)
    for p, c in h.terms.items():
        cur = HeckeElement.unit(h.n)
        for i in permutations.reduced_word(p):
            cur = cur - cur.times_gen(i)
        out = out + c * cur
    return out


# ---------------------------------------------------------------------------
# regular representation and projective indecomposables


def _check_algebra_bound(n: int, bound: int) -> None:
    if n > bound:
        raise BoundExceeded(f"n = {n} exceeds algebra bound {bound}")


@lru_cache(maxsize=None)
def _left_mult_images(n: int, i: int) -> tuple[int, ...]:
    """index -> index map of left multiplication by gen_i on the basis."""
    order = permutations.perms_by_length_lex(n)
    index = {p: k for k, p in enumerate(order)}
    images = []
    for p in order:
        q = permutations.s_times(i, p)
        images.append(index[q] if permutations.length(q) > permutations.length(p) else index[p])
    return tuple(images)


def regular_module(n: int, bound: int = DEFAULT_ALGEBRA_BOUND) -> HModule:
    """Left multiplication on the permutation basis; dimension n factorial.

    Basis order is (length, one-line word), fixed for reproducibility.
    """
    _check_algebra_bound(n, bound)
    order = permutations.perms_by_length_lex(n)
    gens = []
    for i in range(1, n):
        images = _left_mult_images(n, i)
        gens.append(RatMat(len(order), len(order), {(images[j], j): 1 for j in range(len(order))}))
    return HModule(n, order, gens, name=f"H_{n}(0)")


def element_vector(h: HeckeElement) -> Vec:
    """Coordinates of an element in the fixed regular-module basis order."""
    order = permutations.perms_by_length_lex(h.n)
    index = {p: k for k, p in enumerate(order)}
    return {index[p]: c for p, c in h.terms.items()}


def _apply_left_gen(n: int, i: int, v: Vec) -> Vec:
    images = _left_mult_images(n, i)
    out: Vec = {}
    for j, c in v.items():
        k = images[j]
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            del out[k]
    return out


def pim_generator(n: int, subset: Iterable[int]) -> HeckeElement:
    """(barred longest of the parabolic) * (longest of the complement)."""
    subset = frozenset(subset)
    if any(i < 1 or i > n - 1 for i in subset):
        raise ValueError(f"{sorted(subset)} is not a subset of [1, {n - 1}]")
    comp = frozenset(range(1, n)) - subset
    e = opi_element(permutations.longest_element(n, subset))
    for i in permutations.reduced_word(permutations.longest_element(n, comp)):
        e = e.times_gen(i)
    return e


@lru_cache(maxsize=None)
def pim_module(n: int, subset: frozenset[int], bound: int = DEFAULT_ALGEBRA_BOUND) -> HModule:
    """The cyclic left ideal generated by `pim_generator`, as a module.

    The basis is the canonical echelon basis of the generator-closure of
    the cyclic vector inside the regular representation; labels are the
    pivot permutations (echelon pivots over the fixed basis order).
    """
    subset = frozenset(subset)
    _check_algebra_bound(n, bound)
    order = permutations.perms_by_length_lex(n)
    seed = element_vector(pim_generator(n, subset))
    space = EchelonSpace(len(order))
    space.add(seed)
    frontier = [seed]
    while frontier:
        v = frontier.pop()
        for i in range(1, n):
            w = _apply_left_gen(n, i, v)
            if w and space.add(w):
                frontier.append(w)
    basis_rows = [dict(r) for r in space.basis()]
    labels = [order[p] for p in sorted(space.pivots)]
    remap = _pivot_positions(space)
    gens = []
    for i in range(1, n):
        data = {}
        for col, b in enumerate(basis_rows):
            coords = space.coords(_apply_left_gen(n, i, b))
            if coords is None:
                raise RuntimeError("cyclic ideal not closed under the action")
            for row_idx, x in coords.items():
                data[remap[row_idx], col] = x
        gens.append(RatMat(len(basis_rows), len(basis_rows), data))
    return HModule(n, labels, gens, name=f"P_{sorted(subset)}")


def _pivot_positions(space: EchelonSpace) -> dict[int, int]:
    """Map internal row index -> position in the pivot-sorted basis."""
    return {space.pivots[p]: k for k, p in enumerate(sorted(space.pivots))}


def pim_modules(n: int, bound: int = DEFAULT_ALGEBRA_BOUND) -> dict[frozenset[int], HModule]:
    """All projective indecomposables for the given degree, keyed by subset."""
    from itertools import combinations

    out = {}
    universe = list(range(1, n))
    for r in range(len(universe) + 1):
        for sub in combinations(universe, r):
            out[frozenset(sub)] = pim_module(n, frozenset(sub), bound)
    return out


def descent_class_size(n: int, subset: Iterable[int]) -> int:
    """#{p in S_n : descent set of p == subset}; the expected ideal dimension."""
    subset = frozenset(subset)
    return sum(1 for p in permutations.all_perms(n) if permutations.descent_set(p) == subset)
