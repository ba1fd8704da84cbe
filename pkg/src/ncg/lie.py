"""Lie algebras over small finite fields, presented by structure constants.

A LieAlgebra is a dimension n, a base field, and the full n x n tensor of
basis brackets sc[i][j] = [e_i, e_j] (each entry a length-n vector).
Invalid tensors are representable; ``validate`` reports the first axiom
violation so enumeration code can stream raw candidates through it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Mapping

from .field import GF
from .linalg import (
    Mat,
    Subspace,
    Vec,
    kernel,
    projective_reps,
    unit_vec,
    vec_add,
    vec_neg,
    zero_vec,
)

# Cross-check is_ac against the raw commuting-transitivity definition on
# all element triples whenever the algebra is this small.
_TRANSITIVITY_XCHECK_MAX = 64


class GuardExceeded(RuntimeError):
    """An exhaustive scan was skipped because its search space exceeds the guard."""


@dataclass(frozen=True)
class Violation:
    """First structure-constant axiom failure found by validate."""

    kind: str  # "shape" | "alternating" | "antisymmetry" | "jacobi"
    indices: tuple[int, ...]
    detail: str = ""

    def __str__(self) -> str:
        where = ",".join(str(i) for i in self.indices)
        msg = f"{self.kind} violation at ({where})"
        return f"{msg}: {self.detail}" if self.detail else msg


class InvalidAlgebra(ValueError):
    def __init__(self, violation: Violation):
        super().__init__(str(violation))
        self.violation = violation


@dataclass(frozen=True)
class SeriesData:
    lower_central: tuple[Subspace, ...]
    derived: tuple[Subspace, ...]
    nilpotency_class: int | None
    solvable: bool


@dataclass(frozen=True)
class LieAlgebra:
    field: GF
    dim: int
    sc: tuple[tuple[Vec, ...], ...]

    @classmethod
    def from_brackets(
        cls, field: GF, dim: int, entries: Mapping[tuple[int, int], Vec]
    ) -> "LieAlgebra":
        """Build the full antisymmetric tensor from entries {(i, j): [e_i, e_j]} with i < j."""
        sc = [[zero_vec(dim) for _ in range(dim)] for _ in range(dim)]
        for (i, j), v in entries.items():
            if not (0 <= i < j < dim):
                raise ValueError(f"bracket entry requires 0 <= i < j < dim, got ({i}, {j})")
            v = tuple(v)
            if len(v) != dim:
                raise ValueError(f"bracket value for ({i}, {j}) has length {len(v)} != {dim}")
            if any(not (0 <= c < field.q) for c in v):
                raise ValueError(f"bracket value for ({i}, {j}) not in field range: {v}")
            sc[i][j] = v
            sc[j][i] = vec_neg(field, v)
        return cls(field, dim, tuple(tuple(row) for row in sc))

    # -- bracket --------------------------------------------------------

    def bracket(self, u: Vec, v: Vec) -> Vec:
        """Bilinear extension of the structure constants; [u, u] = 0."""
        n = self.dim
        if len(u) != n or len(v) != n:
            raise ValueError("bracket arguments must have the algebra dimension")
        f = self.field
        out = [0] * n
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = self.sc[i]
            for j, vj in enumerate(v):
                if not vj:
                    continue
                w = row[j]
                c = f.mul(ui, vj)
                if c == 1:
                    for t, wt in enumerate(w):
                        if wt:
                            out[t] = f.add(out[t], wt)
                else:
                    for t, wt in enumerate(w):
                        if wt:
                            out[t] = f.add(out[t], f.mul(c, wt))
        return tuple(out)

    # -- distinguished subspaces -----------------------------------------

    @cached_property
    def full_space(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    @cached_property
    def center(self) -> Subspace:
        """{z : [z, e_i] = 0 for every basis vector}, as one stacked kernel."""
        n = self.dim
        rows = []
        for i in range(n):
            for t in range(n):
                rows.append(tuple(self.sc[j][i][t] for j in range(n)))
        return kernel(self.field, rows, n)

    def centralizer(self, x: Vec) -> Subspace:
        """Kernel of y -> [y, x]; always contains the center and x itself."""
        n = self.dim
        if len(x) != n:
            raise ValueError("centralizer argument must have the algebra dimension")
        cols = [self.bracket(unit_vec(n, j), x) for j in range(n)]
        rows = [tuple(cols[j][t] for j in range(n)) for t in range(n)]
        return kernel(self.field, rows, n)

    def centralizer_of_set(self, xs: Iterable[Vec]) -> Subspace:
        n = self.dim
        rows: list[Vec] = []
        for x in xs:
            cols = [self.bracket(unit_vec(n, j), x) for j in range(n)]
            rows.extend(tuple(cols[j][t] for j in range(n)) for t in range(n))
        return kernel(self.field, rows, n)

    # -- series, nilpotency, solvability ----------------------------------

    def _bracket_span(self, A: Subspace, B: Subspace) -> Subspace:
        gens = [self.bracket(a, b) for a in A.basis for b in B.basis]
        return Subspace.from_vectors(self.field, self.dim, gens)

    @cached_property
    def series(self) -> SeriesData:
        full = self.full_space
        lower: list[Subspace] = [full]
        while lower[-1].dim > 0:
            nxt = self._bracket_span(full, lower[-1])
            if nxt.basis == lower[-1].basis:
                break
            lower.append(nxt)
        nil_class = len(lower) - 1 if lower[-1].dim == 0 else None

        derived: list[Subspace] = [full]
        while derived[-1].dim > 0:
            nxt = self._bracket_span(derived[-1], derived[-1])
            if nxt.basis == derived[-1].basis:
                break
            derived.append(nxt)
        solvable = derived[-1].dim == 0
        return SeriesData(tuple(lower), tuple(derived), nil_class, solvable)

    @cached_property
    def derived_subalgebra(self) -> Subspace:
        """[L, L]: the span of all basis brackets."""
        return self._bracket_span(self.full_space, self.full_space)

    @property
    def nilpotency_class(self) -> int | None:
        return self.series.nilpotency_class

    @property
    def is_nilpotent(self) -> bool:
        return self.series.nilpotency_class is not None

    @property
    def is_solvable(self) -> bool:
        return self.series.solvable

    @cached_property
    def is_abelian(self) -> bool:
        return not any(any(v) for row in self.sc for v in row)

    # -- commutativity predicates -----------------------------------------

    def is_abelian_subspace(self, S: Subspace) -> bool:
        """Whether all brackets vanish on S (then S is an abelian subalgebra)."""
        rows = S.basis
        for a in range(len(rows)):
            for b in range(a + 1, len(rows)):
                if any(self.bracket(rows[a], rows[b])):
                    return False
        return True

    def _check_scan_guard(self, guard: int) -> None:
        size = self.field.q**self.dim
        if size > guard:
            raise GuardExceeded(
                f"element scan over {size} elements exceeds the guard {guard}"
            )

    def is_ct(self, guard: int = 4096) -> bool:
        """Commuting is transitive on nonzero elements.

        Equivalent to every nonzero element having an abelian centralizer;
        centralizers are invariant under scaling, so one canonical ray
        representative per line is scanned.
        """
        if self.is_abelian:
            return True
        if self.center.dim > 0:
            # A nonzero central element centralizes everything, and here
            # "everything" is non-abelian.
            return False
        self._check_scan_guard(guard)
        for x in projective_reps(self.field, self.dim):
            if not self.is_abelian_subspace(self.centralizer(x)):
                return False
        return True

    def is_ac(self, guard: int = 4096) -> bool:
        """Commuting is transitive on non-central elements.

        Equivalent to every non-central element having an abelian
        centralizer; centralizers are invariant under scaling and central
        shifts, so canonical rays are scanned and central rays skipped.
        """
        if self.is_abelian:
            return True
        self._check_scan_guard(guard)
        Z = self.center
        result = True
        for x in projective_reps(self.field, self.dim):
            if x in Z:
                continue
            if not self.is_abelian_subspace(self.centralizer(x)):
                result = False
                break
        if self.field.q**self.dim <= _TRANSITIVITY_XCHECK_MAX:
            if result != ac_by_transitivity(self):
                raise AssertionError(
                    "centralizer-based AC predicate disagrees with the "
                    "transitivity scan"
                )
        return result

    # -- misc ----------------------------------------------------------------

    def elements(self) -> Iterator[Vec]:
        """All q^dim vectors (no guard; callers budget the iteration)."""
        return iter(product(self.field.elements(), repeat=self.dim))


def validate(L: LieAlgebra) -> Violation | None:
    """None if the tensor satisfies the alternating, antisymmetry and Jacobi
    axioms on basis vectors; otherwise the first violation in a fixed scan
    order."""
    n = L.dim
    if len(L.sc) != n or any(len(row) != n for row in L.sc):
        return Violation("shape", (), "structure tensor is not n x n")
    for i in range(n):
        for j in range(n):
            v = L.sc[i][j]
            if len(v) != n or any(not (0 <= c < L.field.q) for c in v):
                return Violation("shape", (i, j), "bracket value out of range")
    for i in range(n):
        if any(L.sc[i][i]):
            return Violation("alternating", (i, i), "[e_i, e_i] != 0")
    for i in range(n):
        for j in range(i + 1, n):
            if L.sc[j][i] != vec_neg(L.field, L.sc[i][j]):
                return Violation("antisymmetry", (i, j), "[e_j, e_i] != -[e_i, e_j]")
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                s = jacobi_sum(L, i, j, k)
                if any(s):
                    return Violation("jacobi", (i, j, k), f"jacobiator = {list(s)}")
    return None


def jacobi_sum(L: LieAlgebra, i: int, j: int, k: int) -> Vec:
    """[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]."""
    n = L.dim
    t1 = L.bracket(L.sc[i][j], unit_vec(n, k))
    t2 = L.bracket(L.sc[j][k], unit_vec(n, i))
    t3 = L.bracket(L.sc[k][i], unit_vec(n, j))
    return vec_add(L.field, vec_add(L.field, t1, t2), t3)


def assert_valid(L: LieAlgebra) -> LieAlgebra:
    v = validate(L)
    if v is not None:
        raise InvalidAlgebra(v)
    return L


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    """Block-diagonal structure constants on the concatenated basis."""
    if a.field != b.field:
        raise ValueError("direct sum requires a common base field")
    n = a.dim + b.dim
    entries: dict[tuple[int, int], Vec] = {}
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            v = a.sc[i][j]
            if any(v):
                entries[(i, j)] = v + zero_vec(b.dim)
    for i in range(b.dim):
        for j in range(i + 1, b.dim):
            v = b.sc[i][j]
            if any(v):
                entries[(a.dim + i, a.dim + j)] = zero_vec(a.dim) + v
    return LieAlgebra.from_brackets(a.field, n, entries)


def ac_by_transitivity(L: LieAlgebra) -> bool:
    """Raw AC definition: [x,y] = [y,z] = 0 forces [x,z] = 0 for non-central
    x, y, z.  Exhaustive over element triples; only for tiny algebras."""
    Z = L.center
    elems = [v for v in L.elements() if v not in Z]
    for u in elems:
        for v in elems:
            if any(L.bracket(u, v)):
                continue
            for w in elems:
                if any(L.bracket(v, w)):
                    continue
                if any(L.bracket(u, w)):
                    return False
    return True


def ct_by_transitivity(L: LieAlgebra) -> bool:
    """Raw CT definition over all nonzero element triples."""
    elems = [v for v in L.elements() if any(v)]
    for u in elems:
        for v in elems:
            if any(L.bracket(u, v)):
                continue
            for w in elems:
                if any(L.bracket(v, w)):
                    continue
                if any(L.bracket(u, w)):
                    return False
    return True


def maximal_abelian_subalgebras(L: LieAlgebra, guard: int = 512) -> list[Subspace]:
    """All maximal abelian subalgebras, by centralizer-closure refinement.

    Every maximal abelian subalgebra is self-centralizing, hence equals
    C_L(S) for any commuting set S spanning it; the search starts from
    C_L(empty) = L and refines by intersecting with centralizers of
    elements, which visits every maximal abelian subalgebra.  Memoized on
    the centralizer subspace (distinct commuting sets with the same
    centralizer see the same maximal abelian subalgebras above them).
    """
    if L.field.q**L.dim > guard:
        raise GuardExceeded(
            f"abelian subalgebra search over {L.field.q ** L.dim} elements "
            f"exceeds the guard {guard}"
        )
    seen: set[Mat] = set()
    found: dict[Mat, Subspace] = {}

    def explore(C: Subspace) -> None:
        if C.basis in seen:
            return
        seen.add(C.basis)
        if L.is_abelian_subspace(C):
            found[C.basis] = C
            return
        for y in C.elements():
            if not any(y):
                continue
            refined = C.intersect(L.centralizer(y))
            if refined.dim < C.dim:
                explore(refined)

    explore(L.full_space)
    return sorted(found.values(), key=lambda S: S.basis)


def min_abelian_cover(L: LieAlgebra, guard: int = 512) -> int:
    """Minimum number of abelian subalgebras whose union is L.

    Exact: candidates are all maximal abelian subalgebras (extending the
    members of any optimal cover to maximal ones preserves its size), and a
    branch-and-bound set cover runs over the non-central elements (every
    candidate already contains the center).
    """
    if L.is_abelian:
        return 1
    cands = maximal_abelian_subalgebras(L, guard)
    Z = L.center
    universe = [v for v in L.elements() if v not in Z]
    index = {v: i for i, v in enumerate(universe)}
    masks = []
    for S in cands:
        mask = 0
        for v in S.elements():
            i = index.get(v)
            if i is not None:
                mask |= 1 << i
        if mask:
            masks.append(mask)
    full = (1 << len(universe)) - 1
    union = 0
    for m in masks:
        union |= m
    if union != full:
        raise AssertionError("maximal abelian subalgebras fail to cover the algebra")

    # Greedy upper bound.
    covered, k = 0, 0
    while covered != full:
        best = max(masks, key=lambda m: (m & ~covered).bit_count())
        covered |= best
        k += 1
    best_size = [k]

    by_elem: list[list[int]] = [[] for _ in universe]
    for mi, m in enumerate(masks):
        for e in range(len(universe)):
            if m >> e & 1:
                by_elem[e].append(mi)

    def search(covered: int, count: int) -> None:
        if covered == full:
            if count < best_size[0]:
                best_size[0] = count
            return
        rem = full & ~covered
        max_gain = max((m & rem).bit_count() for m in masks)
        lower = count + -(-rem.bit_count() // max_gain)
        if lower >= best_size[0]:
            return
        # Branch on the uncovered element with the fewest covering candidates.
        elem = min(
            (e for e in range(len(universe)) if rem >> e & 1),
            key=lambda e: len(by_elem[e]),
        )
        for mi in by_elem[elem]:
            search(covered | masks[mi], count + 1)

    search(0, 0)
    return best_size[0]
