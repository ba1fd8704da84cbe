"""Dense exact linear algebra over GF fields: RREF, kernels, subspaces.

Vectors are tuples of field elements and matrices are tuples of row
vectors.  Subspaces are stored with their basis in reduced row-echelon
form, so two subspaces are equal exactly when their basis tuples are
equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

from .field import GF

Vec = tuple[int, ...]
Mat = tuple[Vec, ...]


def zero_vec(n: int) -> Vec:
    return (0,) * n


def unit_vec(n: int, i: int) -> Vec:
    return tuple(1 if j == i else 0 for j in range(n))


def vec_add(f: GF, u: Vec, v: Vec) -> Vec:
    return tuple(f.add(a, b) for a, b in zip(u, v))


def vec_neg(f: GF, u: Vec) -> Vec:
    return tuple(f.neg(a) for a in u)


def vec_scale(f: GF, c: int, u: Vec) -> Vec:
    return tuple(f.mul(c, a) for a in u)


def mat_vec(f: GF, rows: Iterable[Vec], v: Vec) -> Vec:
    out = []
    for row in rows:
        acc = 0
        for a, b in zip(row, v):
            if a and b:
                acc = f.add(acc, f.mul(a, b))
        out.append(acc)
    return tuple(out)


def rref(f: GF, rows: Iterable[Vec]) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row-echelon form over f.

    Args:
        f: the base field.
        rows: matrix rows (all the same length).

    Returns:
        (reduced, pivots): the nonzero rows of the RREF and the pivot
        column indices.  The rank is ``len(pivots)``; the row space is
        preserved.
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return (), ()
    ncols = len(work[0])
    if any(len(r) != ncols for r in work):
        raise ValueError("ragged matrix")
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        sel = next((i for i in range(r, len(work)) if work[i][col]), None)
        if sel is None:
            continue
        work[r], work[sel] = work[sel], work[r]
        pv = work[r][col]
        if pv != 1:
            inv = f.inv(pv)
            work[r] = [f.mul(inv, x) for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col]:
                c = work[i][col]
                work[i] = [f.sub(x, f.mul(c, y)) for x, y in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def rank(f: GF, rows: Iterable[Vec]) -> int:
    return len(rref(f, rows)[1])


def kernel(f: GF, rows: Iterable[Vec], ncols: int) -> "Subspace":
    """Right kernel {v : M v = 0} of the matrix with the given rows.

    The result has dimension ncols - rank(M).
    """
    red, pivots = rref(f, rows)
    pivot_set = set(pivots)
    gens = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [0] * ncols
        v[free] = 1
        for row, pc in zip(red, pivots):
            v[pc] = f.neg(row[free])
        gens.append(tuple(v))
    return Subspace.from_vectors(f, ncols, gens)


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^ambient as a canonical (RREF) row space."""

    field: GF
    ambient: int
    basis: Mat
    pivots: tuple[int, ...]

    @classmethod
    def from_vectors(cls, field: GF, ambient: int, vectors: Iterable[Vec]) -> "Subspace":
        vectors = list(vectors)
        for v in vectors:
            if len(v) != ambient:
                raise ValueError(f"vector length {len(v)} != ambient {ambient}")
        red, pivots = rref(field, vectors)
        return cls(field, ambient, red, pivots)

    @classmethod
    def zero(cls, field: GF, ambient: int) -> "Subspace":
        return cls(field, ambient, (), ())

    @classmethod
    def full(cls, field: GF, ambient: int) -> "Subspace":
        rows = tuple(unit_vec(ambient, i) for i in range(ambient))
        return cls(field, ambient, rows, tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check_ambient(self, other: "Subspace") -> None:
        if self.ambient != other.ambient or self.field != other.field:
            raise ValueError("ambient space mismatch")

    def reduce(self, v: Vec) -> Vec:
        """v minus its projection onto this subspace along the pivot coordinates.

        The result has zeros in every pivot column; it is zero iff v is a
        member.
        """
        if len(v) != self.ambient:
            raise ValueError(f"vector length {len(v)} != ambient {self.ambient}")
        f = self.field
        w = list(v)
        for row, pc in zip(self.basis, self.pivots):
            c = w[pc]
            if c:
                w = [f.sub(x, f.mul(c, y)) for x, y in zip(w, row)]
        return tuple(w)

    def member(self, v: Vec) -> bool:
        return not any(self.reduce(v))

    def __contains__(self, v: Vec) -> bool:
        return self.member(v)

    def contains(self, other: "Subspace") -> bool:
        """Whether other is a subspace of self."""
        self._check_ambient(other)
        return all(self.member(row) for row in other.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace.from_vectors(self.field, self.ambient, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus intersection: rref of [A|A; B|0], rows with zero left half."""
        self._check_ambient(other)
        n = self.ambient
        rows = [r + r for r in self.basis] + [r + zero_vec(n) for r in other.basis]
        red, _ = rref(self.field, rows)
        inter = [r[n:] for r in red if not any(r[:n])]
        return Subspace.from_vectors(self.field, n, inter)

    def complement_pivots(self) -> tuple[int, ...]:
        """The non-pivot coordinate positions: a direct-sum complement."""
        pivot_set = set(self.pivots)
        return tuple(c for c in range(self.ambient) if c not in pivot_set)

    def elements(self) -> Iterator[Vec]:
        """All q^dim vectors of the subspace (the zero vector included)."""
        f = self.field
        if not self.basis:
            yield zero_vec(self.ambient)
            return
        for coefs in product(f.elements(), repeat=self.dim):
            v = [0] * self.ambient
            for c, row in zip(coefs, self.basis):
                if c:
                    for t, x in enumerate(row):
                        if x:
                            v[t] = f.add(v[t], f.mul(c, x))
            yield tuple(v)


def projective_reps(field: GF, dim: int) -> Iterator[Vec]:
    """Canonical representatives of the rays of F^dim.

    One vector per 1-dimensional subspace, normalized so the first nonzero
    coordinate is 1, ordered by position of the leading 1 and then
    lexicographically on the remaining coordinates in the field's canonical
    element order.
    """
    for lead in range(dim):
        for tail in product(field.elements(), repeat=dim - lead - 1):
            yield (0,) * lead + (1,) + tail
