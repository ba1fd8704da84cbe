"""Non-commuting graphs of Lie algebras over finite fields.

Vertices are the points of the projective space of L/Z(L); two points are
adjacent when representatives have a nonzero Lie bracket.  The package
builds these graphs exactly, computes their invariants, and mechanically
checks the structure theorems that govern them at small scale.
"""

from .config import DEFAULT_GUARDS, Guards
from .field import GF, FieldError, field_for
from .graph import NCGraph, analyze, build_graph, export_dot, export_graphml
from .lie import (
    GuardExceeded,
    InvalidAlgebra,
    LieAlgebra,
    direct_sum,
    maximal_abelian_subalgebras,
    min_abelian_cover,
    validate,
)
from .linalg import Subspace, kernel, rank, rref
from .projective import CentralQuotient, ProjPoint, enum_points, quotient_coords

__all__ = [
    "DEFAULT_GUARDS",
    "Guards",
    "GF",
    "FieldError",
    "field_for",
    "NCGraph",
    "analyze",
    "build_graph",
    "export_dot",
    "export_graphml",
    "GuardExceeded",
    "InvalidAlgebra",
    "LieAlgebra",
    "direct_sum",
    "maximal_abelian_subalgebras",
    "min_abelian_cover",
    "validate",
    "Subspace",
    "kernel",
    "rank",
    "rref",
    "CentralQuotient",
    "ProjPoint",
    "enum_points",
    "quotient_coords",
]
