"""Partitions, standard Young tableaux, and Young's orthogonal form.

This module carries the combinatorial core: irreps of the symmetric group
S_n (n = 3 and 6 in practice) realized as real orthogonal matrices on the
standard-tableau basis, extended linearly to the group algebra.

Conventions, fixed once and relied on by every other module:

* Permutations act on {1, ..., n} and compose right-to-left:
  ``sigma * tau`` means "apply tau first, then sigma".  Representations
  satisfy ``rep(sigma * tau) == rep(sigma) @ rep(tau)``.
* The tableau basis of each irrep is ordered by *descending* row-reading
  word.  For the shapes used here this puts the tableaux that host the
  computational embeddings first and the fully row-filled tableau last.
* A non-adjacent transposition (i j) with i < j expands as the palindrome
  chain (j-1 j)(j-2 j-1)...(i i+1)...(j-2 j-1)(j-1 j).  General
  permutations are factored into adjacent transpositions by bubble-sorting
  their one-line word.

Matrix entries such as sqrt(3)/2 are kept in double precision; all
matrices involved are at most 9 x 9 and conditioning is benign.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from numbers import Number
from typing import Iterator, Mapping

import numpy as np

__all__ = [
    "Partition",
    "StandardTableau",
    "Permutation",
    "GroupAlgebraElement",
    "IrrepMatrix",
    "standard_tableaux",
    "axial_distance",
    "rep_adjacent",
    "rep_transposition",
    "rep_permutation",
    "rep_element",
]


@dataclass(frozen=True, order=True)
class Partition:
    """An integer partition, parts non-increasing and positive."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("partition must have at least one part")
        if any(p < 1 for p in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be non-increasing: {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class StandardTableau:
    """A standard filling of a Young diagram with 1..n.

    Entries increase strictly along rows (left to right) and columns
    (top to bottom).
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        shape = tuple(len(r) for r in self.rows)
        Partition(shape)  # validates the shape
        n = sum(shape)
        entries = [v for row in self.rows for v in row]
        if sorted(entries) != list(range(1, n + 1)):
            raise ValueError(f"entries must be a permutation of 1..{n}: {self.rows}")
        for row in self.rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f"rows must increase: {self.rows}")
        for r in range(1, len(self.rows)):
            for c in range(len(self.rows[r])):
                if self.rows[r - 1][c] >= self.rows[r][c]:
                    raise ValueError(f"columns must increase: {self.rows}")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def position(self, k: int) -> tuple[int, int]:
        """(row, column) of entry k, zero-based."""
        for r, row in enumerate(self.rows):
            if k in row:
                return r, row.index(k)
        raise IndexError(f"entry {k} not in tableau of size {self.size}")

    def row_word(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    def swap_adjacent(self, i: int) -> "StandardTableau | None":
        """Tableau with entries i and i+1 exchanged, or None if not standard.

        The exchange fails to be standard exactly when i and i+1 share a
        row or a column.
        """
        ri, ci = self.position(i)
        rj, cj = self.position(i + 1)
        if ri == rj or ci == cj:
            return None
        rows = [list(r) for r in self.rows]
        rows[ri][ci], rows[rj][cj] = i + 1, i
        return StandardTableau(tuple(tuple(r) for r in rows))

    def __str__(self) -> str:
        return "/".join(" ".join(str(v) for v in row) for row in self.rows)


@lru_cache(maxsize=None)
def standard_tableaux(shape: Partition) -> tuple[StandardTableau, ...]:
    """All standard tableaux of a shape, in descending row-word order.

    The count equals the irrep dimension (hook length formula); the order
    is the documented basis order for every representation matrix.
    """
    n = shape.size
    parts = shape.parts
    results: list[StandardTableau] = []

    def fill(rows: list[list[int]], k: int) -> None:
        if k > n:
            results.append(StandardTableau(tuple(tuple(r) for r in rows)))
            return
        for r in range(len(parts)):
            c = len(rows[r])
            if c >= parts[r]:
                continue
            if r > 0 and len(rows[r - 1]) <= c:
                continue
            rows[r].append(k)
            fill(rows, k + 1)
            rows[r].pop()

    fill([[] for _ in parts], 1)
    results.sort(key=lambda t: t.row_word(), reverse=True)
    return tuple(results)


def axial_distance(tableau: StandardTableau, i: int, j: int) -> int:
    """Content difference (col - row)(j) - (col - row)(i) in a tableau."""
    n = tableau.size
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"indices must lie in 1..{n}: got ({i}, {j})")
    ri, ci = tableau.position(i)
    rj, cj = tableau.position(j)
    return (cj - rj) - (ci - ri)


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}, stored as the tuple of images of 1..n."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        if not (1 <= i <= n and 1 <= j <= n and i != j):
            raise ValueError(f"invalid transposition ({i} {j}) in S_{n}")
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition; ``self * other`` applies ``other`` first."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self(other(i)) for i in range(1, self.degree + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(self(i) == i for i in range(1, self.degree + 1))

    def adjacent_word(self) -> tuple[int, ...]:
        """Indices (a_1, ..., a_k) with self = s_{a_1} * ... * s_{a_k}.

        Obtained by bubble-sorting the one-line word; right-multiplying by
        s_a swaps positions a, a+1, so the collected swaps are emitted in
        reverse.
        """
        word = list(self.images)
        swaps: list[int] = []
        done = False
        while not done:
            done = True
            for a in range(len(word) - 1):
                if word[a] > word[a + 1]:
                    word[a], word[a + 1] = word[a + 1], word[a]
                    swaps.append(a + 1)
                    done = False
        return tuple(reversed(swaps))

    def __str__(self) -> str:
        return "[" + " ".join(str(v) for v in self.images) + "]"


class GroupAlgebraElement:
    """A finite complex linear combination of permutations of fixed degree.

    Zero-coefficient terms are dropped on construction.  Supports addition,
    subtraction, scalar multiplication, and the convolution product that
    expands term by term.
    """

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping[Permutation, complex] | None = None):
        self.degree = int(degree)
        clean: dict[Permutation, complex] = {}
        for perm, coeff in (terms or {}).items():
            if perm.degree != self.degree:
                raise ValueError(
                    f"term degree {perm.degree} does not match element degree {self.degree}"
                )
            c = complex(coeff)
            if c != 0:
                clean[perm] = clean.get(perm, 0) + c
        self._terms = {p: c for p, c in clean.items() if c != 0}

    @classmethod
    def identity(cls, degree: int, coeff: complex = 1.0) -> "GroupAlgebraElement":
        return cls(degree, {Permutation.identity(degree): coeff})

    @classmethod
    def transposition(cls, degree: int, i: int, j: int, coeff: complex = 1.0) -> "GroupAlgebraElement":
        return cls(degree, {Permutation.transposition(degree, i, j): coeff})

    @classmethod
    def from_transpositions(
        cls, degree: int, coeffs: Mapping[tuple[int, int], complex], identity: complex = 0.0
    ) -> "GroupAlgebraElement":
        terms: dict[Permutation, complex] = {}
        for (i, j), c in coeffs.items():
            terms[Permutation.transposition(degree, i, j)] = c
        if identity != 0:
            terms[Permutation.identity(degree)] = identity
        return cls(degree, terms)

    @property
    def terms(self) -> dict[Permutation, complex]:
        return dict(self._terms)

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        merged = dict(self._terms)
        for p, c in other._terms.items():
            merged[p] = merged.get(p, 0) + c
        return GroupAlgebraElement(self.degree, merged)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + (-1.0) * other

    def __neg__(self) -> "GroupAlgebraElement":
        return (-1.0) * self

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            self._check(other)
            product: dict[Permutation, complex] = {}
            for p, a in self._terms.items():
                for q, b in other._terms.items():
                    pq = p * q
                    product[pq] = product.get(pq, 0) + a * b
            return GroupAlgebraElement(self.degree, product)
        if isinstance(other, Number):
            return GroupAlgebraElement(
                self.degree, {p: c * other for p, c in self._terms.items()}
            )
        return NotImplemented

    __rmul__ = __mul__

    def adjoint(self) -> "GroupAlgebraElement":
        """Conjugate coefficients on inverse permutations."""
        return GroupAlgebraElement(
            self.degree, {p.inverse(): np.conj(c) for p, c in self._terms.items()}
        )

    def _check(self, other: "GroupAlgebraElement") -> None:
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} != {other.degree}")

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        inner = " + ".join(f"({c:g})*{p}" for p, c in sorted(
            self._terms.items(), key=lambda kv: kv[0].images))
        return inner or "0"


@dataclass(frozen=True, eq=False)
class IrrepMatrix:
    """A group-algebra element realized as a matrix on the tableau basis."""

    irrep: Partition
    basis: tuple[StandardTableau, ...] = field(repr=False)
    matrix: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        """Row-major dump with complex entries as [re, im] pairs."""
        m = np.asarray(self.matrix, dtype=complex)
        return {
            "irrep": list(self.irrep.parts),
            "basis": [str(t) for t in self.basis],
            "entries": [[[v.real, v.imag] for v in row] for row in m],
        }


@lru_cache(maxsize=None)
def _adjacent_matrix(shape: Partition, i: int) -> np.ndarray:
    basis = standard_tableaux(shape)
    index = {t.rows: k for k, t in enumerate(basis)}
    dim = len(basis)
    m = np.zeros((dim, dim))
    for col, tab in enumerate(basis):
        d = axial_distance(tab, i, i + 1)
        m[col, col] = 1.0 / d
        swapped = tab.swap_adjacent(i)
        if swapped is not None:
            m[index[swapped.rows], col] = np.sqrt(1.0 - 1.0 / d**2)
    m.setflags(write=False)
    return m


def rep_adjacent(shape: Partition, i: int) -> IrrepMatrix:
    """Orthogonal-form matrix of the adjacent transposition (i i+1).

    Basis tableau T maps to (1/d) T + sqrt(1 - 1/d^2) (i i+1)T with d the
    axial distance from i to i+1 in T; the swapped term is dropped when
    the exchange leaves the tableau non-standard (its coefficient
    vanishes, since then d = +-1).
    """
    n = shape.size
    if not (1 <= i <= n - 1):
        raise ValueError(f"adjacent index must lie in 1..{n - 1}: got {i}")
    return IrrepMatrix(shape, standard_tableaux(shape), _adjacent_matrix(shape, i))


@lru_cache(maxsize=None)
def _transposition_matrix(shape: Partition, i: int, j: int) -> np.ndarray:
    if j == i + 1:
        return _adjacent_matrix(shape, i)
    # palindrome chain (i j) = (j-1 j)(j-2 j-1)...(i i+1)...(j-2 j-1)(j-1 j)
    m = _adjacent_matrix(shape, j - 1)
    inner = _transposition_matrix(shape, i, j - 1)
    out = m @ inner @ m
    out.setflags(write=False)
    return out


def rep_transposition(shape: Partition, i: int, j: int) -> IrrepMatrix:
    """Orthogonal-form matrix of an arbitrary transposition (i j)."""
    if i > j:
        i, j = j, i
    n = shape.size
    if not (1 <= i < j <= n):
        raise ValueError(f"invalid transposition ({i} {j}) for n = {n}")
    return IrrepMatrix(shape, standard_tableaux(shape), _transposition_matrix(shape, i, j))


@lru_cache(maxsize=None)
def _permutation_matrix(shape: Partition, images: tuple[int, ...]) -> np.ndarray:
    perm = Permutation(images)
    dim = len(standard_tableaux(shape))
    m = np.eye(dim)
    for a in perm.adjacent_word():
        m = m @ _adjacent_matrix(shape, a)
    m.setflags(write=False)
    return m


def rep_permutation(shape: Partition, perm: Permutation) -> IrrepMatrix:
    if perm.degree != shape.size:
        raise ValueError(f"degree {perm.degree} does not match |shape| = {shape.size}")
    return IrrepMatrix(shape, standard_tableaux(shape), _permutation_matrix(shape, perm.images))


def rep_element(shape: Partition, x: GroupAlgebraElement) -> IrrepMatrix:
    """Linear extension of the orthogonal form to the group algebra."""
    if x.degree != shape.size:
        raise ValueError(f"degree {x.degree} does not match |shape| = {shape.size}")
    dim = len(standard_tableaux(shape))
    m = np.zeros((dim, dim), dtype=complex)
    for perm, coeff in x.terms.items():
        m += coeff * _permutation_matrix(shape, perm.images)
    return IrrepMatrix(shape, standard_tableaux(shape), m)
