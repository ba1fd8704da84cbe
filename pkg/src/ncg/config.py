"""Search budgets shared across the invariant and verification code."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Guards:
    """Per-computation budgets.

    Graph guards are vertex counts; ``elements`` and ``cover`` bound q^n for
    exhaustive element scans and the abelian-cover search.  Computations
    over budget either report an inexact bound (flagged) or a not-computed
    status, never a silently wrong value.
    """

    clique: int = 200
    chromatic: int = 200
    independence: int = 200
    domination: int = 100
    hamiltonian: int = 24
    isomorphism: int = 64
    elements: int = 4096
    cover: int = 512


DEFAULT_GUARDS = Guards()
