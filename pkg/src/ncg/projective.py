"""Coordinates on the central quotient and its projective space.

The quotient L/Z(L) is coordinatized on the non-pivot columns of the
center's RREF basis, which index a direct-sum complement of the center.
Projective points carry the canonical representative with leading
coordinate 1 and a dense index stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .lie import LieAlgebra
from .linalg import Subspace, Vec, projective_reps


@dataclass(frozen=True)
class ProjPoint:
    """A 1-dimensional subspace of the central quotient.

    rep is the unique representative whose first nonzero coordinate is 1;
    index is the point's position in the canonical enumeration.
    """

    rep: Vec
    index: int


@dataclass(frozen=True)
class CentralQuotient:
    algebra: LieAlgebra
    center: Subspace
    complement_cols: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.algebra.field.q

    @property
    def d(self) -> int:
        return len(self.complement_cols)

    @property
    def s(self) -> int:
        return self.center.dim

    @cached_property
    def points(self) -> tuple[ProjPoint, ...]:
        return tuple(
            ProjPoint(rep, i)
            for i, rep in enumerate(projective_reps(self.algebra.field, self.d))
        )

    @cached_property
    def _index_of_rep(self) -> dict[Vec, int]:
        return {pt.rep: pt.index for pt in self.points}

    def normalize(self, v: Vec) -> ProjPoint | None:
        """Project v to quotient coordinates and scale canonically.

        Returns None when v is central (projects to zero).  Vectors that
        differ by a nonzero scalar or a central summand normalize to the
        same point.
        """
        f = self.algebra.field
        w = self.center.reduce(v)
        coords = tuple(w[c] for c in self.complement_cols)
        lead = next((i for i, c in enumerate(coords) if c), None)
        if lead is None:
            return None
        a = coords[lead]
        if a != 1:
            inv = f.inv(a)
            coords = tuple(f.mul(inv, c) for c in coords)
        return self.points[self._index_of_rep[coords]]

    def lift(self, pt: ProjPoint) -> Vec:
        """The unique preimage supported on the complement columns."""
        v = [0] * self.algebra.dim
        for col, val in zip(self.complement_cols, pt.rep):
            v[col] = val
        return tuple(v)


def quotient_coords(L: LieAlgebra) -> CentralQuotient:
    """Coordinates for L/Z(L); rejects abelian algebras (graph undefined)."""
    if L.is_abelian:
        raise ValueError("graph undefined for abelian algebras")
    Z = L.center
    return CentralQuotient(L, Z, Z.complement_pivots())


def enum_points(cq: CentralQuotient) -> tuple[ProjPoint, ...]:
    """All (q^d - 1)/(q - 1) projective points, canonically ordered."""
    return cq.points
