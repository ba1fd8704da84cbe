"""Executable checks for the finite-field structure theorems.

Each check evaluates both sides of its statement independently (graph side
from the adjacency matrix, algebra side from centralizer linear algebra)
and reports pass, fail with a concrete re-checkable witness,
not-applicable with the violated hypothesis, or not-computed when a guard
was exceeded.  Implications are checked as implications, biconditionals
both ways.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field as dc_field
from typing import Callable, Iterable

from .catalog import CensusResult, fingerprint
from .config import DEFAULT_GUARDS, Guards
from .graph import (
    HAM_DIRAC,
    HAM_FALSE,
    HAM_TRUE,
    NCGraph,
    build_graph,
    chromatic_number,
    clique_number,
    diameter,
    domination_number,
    expected_degree,
    expected_order,
    girth,
    hamiltonicity,
    is_connected,
    is_eulerian,
    is_planar,
    multipartite_decomposition,
    vertex_connectivity,
)
from .lie import GuardExceeded, LieAlgebra, min_abelian_cover
from .linalg import Subspace, Vec, vec_add, vec_scale
from .projective import quotient_coords

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"
NOT_COMPUTED = "not-computed"

_STATUS_RANK = {PASS: 0, NOT_APPLICABLE: 1, NOT_COMPUTED: 2, FAIL: 3}


@dataclass
class CheckResult:
    check: str
    status: str
    witness: dict | None = None
    detail: str = ""
    elapsed: float = 0.0

    def to_json(self) -> dict:
        # Timing is deliberately excluded so reports are byte-reproducible.
        return {
            "check": self.check,
            "status": self.status,
            "witness": self.witness,
            "detail": self.detail,
        }


def worst_status(results: Iterable[CheckResult]) -> str:
    worst = PASS
    for r in results:
        if _STATUS_RANK[r.status] > _STATUS_RANK[worst]:
            worst = r.status
    return worst


def _timed(fn: Callable[[], CheckResult]) -> CheckResult:
    t0 = time.perf_counter()
    out = fn()
    out.elapsed = time.perf_counter() - t0
    return out


def _graph(L: LieAlgebra, g: NCGraph | None) -> NCGraph:
    return g if g is not None else build_graph(L)


# -- counting and regularity ---------------------------------------------------


def check_order_degree_formulas(
    L: LieAlgebra, g: NCGraph | None = None, guards: Guards = DEFAULT_GUARDS
) -> CheckResult:
    """|V| = (q^(n-s)-1)/(q-1) and deg([x]) = (q^(n-s)-q^(r-s))/(q-1) with
    r the centralizer dimension of any lift."""
    name = "order-degree-formulas"
    g = _graph(L, g)
    cq = quotient_coords(L)
    want_order = expected_order(g.q, g.n, g.s)
    if g.order != want_order:
        return CheckResult(
            name, FAIL, {"expected_order": want_order, "actual_order": g.order}
        )
    for v, pt in enumerate(g.points):
        r = L.centralizer(cq.lift(pt)).dim
        want = expected_degree(g.q, g.n, g.s, r)
        got = g.degree(v)
        if got != want:
            return CheckResult(
                name,
                FAIL,
                {
                    "vertex": v,
                    "point": list(pt.rep),
                    "centralizer_dim": r,
                    "expected_degree": want,
                    "actual_degree": got,
                },
            )
    return CheckResult(name, PASS, detail=f"order {g.order}, degrees match at every vertex")


def check_finiteness_regularity(
    L: LieAlgebra, g: NCGraph | None = None, guards: Guards = DEFAULT_GUARDS
) -> CheckResult:
    """Over a finite field the graph is finite, and it is regular iff all
    non-central centralizer dimensions agree.  The degenerate case
    dim(L/Z) = 1 cannot occur for a non-abelian algebra and is recorded as
    vacuous."""
    name = "finiteness-regularity"
    g = _graph(L, g)
    cq = quotient_coords(L)
    degrees = g.degrees()
    regular = len(set(degrees)) <= 1
    dims = sorted({L.centralizer(cq.lift(pt)).dim for pt in g.points})
    dims_equal = len(dims) <= 1
    if regular != dims_equal:
        return CheckResult(
            name,
            FAIL,
            {"degrees": sorted(set(degrees)), "centralizer_dims": dims},
            detail="regularity and centralizer dimensions disagree",
        )
    return CheckResult(
        name,
        PASS,
        detail=(
            f"finite ({g.order} vertices); regular={regular} iff centralizer "
            f"dims equal (dims {dims}); dim(L/Z)=1 is vacuous for non-abelian L"
        ),
    )


def check_complete_iff_line_centralizers(
    L: LieAlgebra, g: NCGraph | None = None, guards: Guards = DEFAULT_GUARDS
) -> CheckResult:
    """Gamma_L complete iff every non-central x has C_L(x) = span{x} + Z(L)."""
    name = "complete-iff-line-centralizers"
    g = _graph(L, g)
    cq = quotient_coords(L)
    complete = all(g.degree(v) == g.order - 1 for v in range(g.order))
    Z = L.center
    bad_vertex = None
    for v, pt in enumerate(g.points):
        x = cq.lift(pt)
        line = Z.sum(Subspace.from_vectors(L.field, L.dim, [x]))
        if L.centralizer(x).basis != line.basis:
            bad_vertex = v
            break
    all_lines = bad_vertex is None
    if complete != all_lines:
        witness = {"complete": complete, "all_line_centralizers": all_lines}
        if bad_vertex is not None:
            witness["vertex"] = bad_vertex
            witness["point"] = list(g.points[bad_vertex].rep)
        return CheckResult(name, FAIL, witness)
    return CheckResult(name, PASS, detail=f"complete={complete} on both sides")


# -- metric structure -----------------------------------------------------------


def check_connected_diameter_girth(
    L: LieAlgebra, g: NCGraph | None = None, guards: Guards = DEFAULT_GUARDS
) -> CheckResult:
    name = "connected-diameter-girth"
    g = _graph(L, g)
    if g.order < 2:
        return CheckResult(name, NOT_APPLICABLE, detail="fewer than two vertices")
    conn = is_connected(g.adj)
    diam = diameter(g.adj)
    gir = girth(g.adj)
    if not conn or diam not in (1, 2) or gir != 3:
        return CheckResult(
            name, FAIL, {"connected": conn, "diameter": diam, "girth": gir}
        )
    return CheckResult(name, PASS, detail=f"diameter {diam}, girth 3")


def check_hamiltonian(
    L: LieAlgebra, g: NCGraph | None = None, guards: Guards = DEFAULT_GUARDS
) -> CheckResult:
    """The strict Dirac bound min deg > |V|/2 holds and the graph is
    Hamiltonian (by Dirac, or exactly when small enough)."""
    name = "hamiltonian-dirac"
    g = _graph(L, g)
    degs = g.degrees()
    if 2 * min(degs) <= g.order:
        return CheckResult(
            name, FAIL, {"min_degree": min(degs), "order": g.order},
            detail="Dirac bound min deg > |V|/2 violated",
        )
    ham = hamiltonicity(g.adj, guards.hamiltonian)
    if ham == HAM_FALSE:
        return CheckResult(name, FAIL, {"hamiltonian": ham})
    if ham not in (HAM_TRUE, HAM_DIRAC):
        return CheckResult(name, NOT_COMPUTED, detail=f"hamiltonicity status {ham}")
    return CheckResult(name, PASS, detail=f"hamiltonian: {ham}")


def check_eulerian(
    L: LieAlgebra, g: NCGraph | None = None, guards: Guards = DEFAULT_GUARDS
) -> CheckResult:
    """Implication only: q = 2, or every centralizer has even codimension,
    forces an Eulerian graph."""
    name = "eulerian-even-codim"
    g = _graph(L, g)
    cq = quotient_coords(L)
    if g.q != 2:
        codims = [g.n - L.centralizer(cq.lift(pt)).dim for pt in g.points]
        if any(c % 2 for c in codims):
            return CheckResult(
                name,
                NOT_APPLICABLE,
                detail="hypothesis fails: q > 2 and some centralizer has odd codimension",
            )
    if not is_eulerian(g.adj):
        return CheckResult(
            name, FAIL, {"degrees": sorted(set(g.degrees())), "q": g.q}
        )
    return CheckResult(name, PASS, detail="hypothesis holds and graph is Eulerian")


def check_kappa(
    L: LieAlgebra, g: NCGraph | None = None, guards: Guards = DEFAULT_GUARDS
) -> CheckResult:
    name = "kappa-at-least-two"
    g = _graph(L, g)
    kappa = vertex_connectivity(g.adj)
    if kappa <= 1:
        return CheckResult(name, FAIL, {"kappa": kappa})
    return CheckResult(name, PASS, detail=f"kappa = {kappa}")


def check_planarity_classification(
    L: LieAlgebra, g: NCGraph | None = None, guards: Guards = DEFAULT_GUARDS
) -> CheckResult:
    """Planar iff q in {2, 3} and dim(L/Z) = 2, with the subcase decided by
    whether the quotient is abelian (2-step nilpotent) or not."""
    name = "planarity-classification"
    g = _graph(L, g)
    planar = is_planar(g.adj)
    classified = g.q in (2, 3) and g.d == 2
    if planar != classified:
        return CheckResult(
            name, FAIL, {"planar": planar, "q": g.q, "quotient_dim": g.d}
        )
    detail = f"planar={planar}, q={g.q}, dim(L/Z)={g.d}"
    if classified:
        quotient_abelian = L.center.contains(L.derived_subalgebra)
        case = "abelian quotient (2-step nilpotent)" if quotient_abelian else "non-abelian quotient"
        detail += f"; case: {case}"
    return CheckResult(name, PASS, detail=detail)


def check_regular_nilpotent_class(
    L: LieAlgebra, g: NCGraph | None = None, guards: Guards = DEFAULT_GUARDS
) -> CheckResult:
    """For nilpotent L: a regular graph forces nilpotency class at most 3."""
    name = "regular-nilpotent-class"
    if not L.is_nilpotent:
        return CheckResult(name, NOT_APPLICABLE, detail="algebra is not nilpotent")
    g = _graph(L, g)
    regular = len(set(g.degrees())) <= 1
    cls = L.nilpotency_class
    if regular and cls is not None and cls > 3:
        return CheckResult(name, FAIL, {"nilpotency_class": cls})
    return CheckResult(
        name, PASS, detail=f"regular={regular}, nilpotency class {cls}"
    )


# -- independent sets and abelian subalgebras ------------------------------------


def _line_elements(L: LieAlgebra, x: Vec, Z: Subspace) -> set[Vec]:
    """All elements of span{x} + Z(L)."""
    out = set()
    for lam in L.field.elements():
        lx = vec_scale(L.field, lam, x)
        for z in Z.elements():
            out.add(vec_add(L.field, lx, z))
    return out


def check_max_independent_abelian(
    L: LieAlgebra, g: NCGraph | None = None, guards: Guards = DEFAULT_GUARDS
) -> CheckResult:
    """Greedily extended maximal independent sets give maximal abelian
    subalgebras: the union of their lines with Z(L) is closed, commutes,
    and admits no one-element abelian extension."""
    name = "max-independent-abelian"
    if L.field.q**L.dim > guards.elements:
        return CheckResult(name, NOT_COMPUTED, detail="element scan above guard")
    g = _graph(L, g)
    cq = quotient_coords(L)
    Z = L.center
    all_elems = list(L.elements())

    seen_sets: set[frozenset[int]] = set()
    for seed in range(g.order):
        M = [seed]
        taken = 1 << seed
        for u in range(g.order):
            if taken >> u & 1:
                continue
            if not (g.adj[u] & taken):
                M.append(u)
                taken |= 1 << u
        key = frozenset(M)
        if key in seen_sets:
            continue
        seen_sets.add(key)

        A: set[Vec] = set(Z.elements())
        for v in sorted(M):
            A |= _line_elements(L, cq.lift(g.points[v]), Z)
        members = sorted(A)
        for a in members:
            for b in members:
                if vec_add(L.field, a, b) not in A:
                    return CheckResult(
                        name,
                        FAIL,
                        {"independent_set": sorted(M), "a": list(a), "b": list(b)},
                        detail="union of lines is not closed under addition",
                    )
                if any(L.bracket(a, b)):
                    return CheckResult(
                        name,
                        FAIL,
                        {"independent_set": sorted(M), "a": list(a), "b": list(b)},
                        detail="union of lines is not abelian",
                    )
        for y in all_elems:
            if y in A:
                continue
            if all(not any(L.bracket(y, a)) for a in members):
                return CheckResult(
                    name,
                    FAIL,
                    {"independent_set": sorted(M), "extension": list(y)},
                    detail="abelian subalgebra from a maximal independent set is not maximal",
                )
    return CheckResult(
        name, PASS, detail=f"{len(seen_sets)} maximal independent sets checked"
    )


# -- domination -------------------------------------------------------------------


def _dominates(g: NCGraph, subset: Iterable[int]) -> bool:
    covered = 0
    for v in subset:
        covered |= g.adj[v] | (1 << v)
    return covered == (1 << g.order) - 1


def check_domination_singleton(
    L: LieAlgebra, g: NCGraph | None = None, guards: Guards = DEFAULT_GUARDS
) -> CheckResult:
    """{[x]} dominating iff C_L(x) = span{x} + Z(L), exhaustively."""
    name = "domination-singleton"
    g = _graph(L, g)
    cq = quotient_coords(L)
    Z = L.center
    for v, pt in enumerate(g.points):
        x = cq.lift(pt)
        dominates = _dominates(g, [v])
        line = Z.sum(Subspace.from_vectors(L.field, L.dim, [x]))
        criterion = L.centralizer(x).basis == line.basis
        if dominates != criterion:
            return CheckResult(
                name,
                FAIL,
                {"vertex": v, "point": list(pt.rep), "dominates": dominates,
                 "line_centralizer": criterion},
            )
    return CheckResult(name, PASS, detail=f"{g.order} singletons checked both ways")


def check_domination_subset_criterion(
    L: LieAlgebra,
    g: NCGraph | None = None,
    guards: Guards = DEFAULT_GUARDS,
    seed: int = 0,
    trials: int = 64,
) -> CheckResult:
    """Random subsets S: direct closed-neighborhood domination agrees with
    the criterion that every non-central element of C_L(P(S)) lies on the
    line of some member of S."""
    name = "domination-subset-criterion"
    g = _graph(L, g)
    cq = quotient_coords(L)
    Z = L.center
    if L.field.q**L.dim > guards.elements:
        return CheckResult(name, NOT_COMPUTED, detail="element scan above guard")
    rng = random.Random(f"{seed}:{fingerprint(L)}")
    for trial in range(trials):
        k = rng.randint(1, g.order)
        subset = sorted(rng.sample(range(g.order), k))
        direct = _dominates(g, subset)
        lifts = [cq.lift(g.points[v]) for v in subset]
        cent = L.centralizer_of_set(lifts)
        point_set = set(subset)
        criterion = True
        for c in cent.elements():
            if c in Z:
                continue
            pt = cq.normalize(c)
            if pt is None or pt.index not in point_set:
                criterion = False
                break
        if direct != criterion:
            return CheckResult(
                name,
                FAIL,
                {"trial": trial, "subset": subset, "dominates": direct,
                 "criterion": criterion},
            )
    return CheckResult(name, PASS, detail=f"{trials} seeded random subsets agreed")


def check_domination_basis_bound(
    L: LieAlgebra, g: NCGraph | None = None, guards: Guards = DEFAULT_GUARDS
) -> CheckResult:
    """The non-central standard basis vectors give a dominating set, so the
    domination number is at most |X \\ Z(L)|."""
    name = "domination-basis-bound"
    g = _graph(L, g)
    cq = quotient_coords(L)
    Z = L.center
    basis_points = []
    outside = 0
    for i in range(L.dim):
        e = tuple(1 if t == i else 0 for t in range(L.dim))
        if e in Z:
            continue
        outside += 1
        pt = cq.normalize(e)
        basis_points.append(pt.index)
    subset = sorted(set(basis_points))
    if not _dominates(g, subset):
        return CheckResult(
            name, FAIL, {"basis_vertices": subset},
            detail="basis point set fails to dominate",
        )
    gamma = domination_number(g.adj, guards.domination)
    if gamma.exact and gamma.value > outside:
        return CheckResult(
            name, FAIL, {"gamma": gamma.value, "bound": outside},
            detail="domination number exceeds the basis bound",
        )
    detail = f"basis set of {len(subset)} vertices dominates; bound {outside}"
    if gamma.exact:
        detail += f"; gamma = {gamma.value}"
    return CheckResult(name, PASS, detail=detail)


def check_codim2_domination(
    L: LieAlgebra, g: NCGraph | None = None, guards: Guards = DEFAULT_GUARDS
) -> CheckResult:
    """Codimension-2 center with dim(C_L(x)/Z) > 1 for all non-central x
    would force domination number 2; the hypothesis is reported with
    satisfiability statistics (it is vacuous for every such algebra: each
    quotient centralizer is a line)."""
    name = "codim2-domination"
    g = _graph(L, g)
    if g.d != 2:
        return CheckResult(name, NOT_APPLICABLE, detail="center codimension is not two")
    cq = quotient_coords(L)
    fat = 0
    for pt in g.points:
        r = L.centralizer(cq.lift(pt)).dim
        if r - g.s > 1:
            fat += 1
    if fat < g.order:
        return CheckResult(
            name,
            NOT_APPLICABLE,
            detail=(
                f"hypothesis unsatisfied: {fat} of {g.order} vertices have "
                "dim(C_L(x)/Z) > 1"
            ),
        )
    gamma = domination_number(g.adj, guards.domination)
    if not gamma.exact:
        return CheckResult(name, NOT_COMPUTED, detail="domination number above guard")
    if gamma.value != 2:
        return CheckResult(name, FAIL, {"gamma": gamma.value})
    return CheckResult(name, PASS, detail="gamma = 2")


# -- chromatic number and covers ----------------------------------------------------


def check_chromatic_cover(
    L: LieAlgebra, g: NCGraph | None = None, guards: Guards = DEFAULT_GUARDS
) -> CheckResult:
    """chi(Gamma_L) equals the minimum number of abelian subalgebras
    covering L, both computed exactly."""
    name = "chromatic-abelian-cover"
    g = _graph(L, g)
    chi = chromatic_number(g.adj, guards.chromatic)
    if not chi.exact:
        return CheckResult(name, NOT_COMPUTED, detail="chromatic number above guard")
    try:
        cover = min_abelian_cover(L, guards.cover)
    except GuardExceeded:
        return CheckResult(name, NOT_COMPUTED, detail="abelian cover search above guard")
    if chi.value != cover:
        return CheckResult(name, FAIL, {"chromatic": chi.value, "cover": cover})
    return CheckResult(name, PASS, detail=f"chi = cover = {cover}")


# -- CT / AC ---------------------------------------------------------------------------


def _centralizer_class(L: LieAlgebra, g: NCGraph, v: int) -> set[int]:
    """The vertex set of P(C_L(x)/Z(L)) for x a lift of vertex v."""
    cq = quotient_coords(L)
    cent = L.centralizer(cq.lift(g.points[v]))
    out = set()
    for c in cent.elements():
        pt = cq.normalize(c)
        if pt is not None:
            out.add(pt.index)
    return out


def check_ct_multipartite(
    L: LieAlgebra, g: NCGraph | None = None, guards: Guards = DEFAULT_GUARDS
) -> CheckResult:
    """With trivial center: CT iff the graph is complete multipartite."""
    name = "ct-multipartite"
    if L.center.dim > 0:
        return CheckResult(name, NOT_APPLICABLE, detail="center is nontrivial")
    g = _graph(L, g)
    try:
        ct = L.is_ct(guards.elements)
    except GuardExceeded:
        return CheckResult(name, NOT_COMPUTED, detail="CT scan above guard")
    partition = multipartite_decomposition(g.adj)
    if ct != (partition is not None):
        return CheckResult(
            name, FAIL, {"ct": ct, "complete_multipartite": partition is not None}
        )
    detail = f"ct={ct}"
    if partition is not None:
        detail += f", {len(partition)} partite sets"
    return CheckResult(name, PASS, detail=detail)


def check_ac_multipartite(
    L: LieAlgebra, g: NCGraph | None = None, guards: Guards = DEFAULT_GUARDS
) -> CheckResult:
    """AC iff the graph is complete multipartite with partite sets the
    projectivized centralizers P(C_L(x)/Z(L))."""
    name = "ac-multipartite"
    g = _graph(L, g)
    if L.field.q**L.dim > guards.elements:
        return CheckResult(name, NOT_COMPUTED, detail="element scan above guard")
    try:
        ac = L.is_ac(guards.elements)
    except GuardExceeded:
        return CheckResult(name, NOT_COMPUTED, detail="AC scan above guard")
    partition = multipartite_decomposition(g.adj)
    classes_match = partition is not None
    offending = None
    if partition is not None:
        for cls in partition:
            want = set(cls)
            for v in cls:
                got = _centralizer_class(L, g, v)
                if got != want:
                    classes_match = False
                    offending = {"class": list(cls), "vertex": v,
                                 "centralizer_class": sorted(got)}
                    break
            if not classes_match:
                break
    right = (partition is not None) and classes_match
    if ac != right:
        witness = {"ac": ac, "complete_multipartite": partition is not None,
                   "classes_match": classes_match}
        if offending:
            witness.update(offending)
        return CheckResult(name, FAIL, witness)
    return CheckResult(name, PASS, detail=f"ac={ac}")


def check_ac_clique_chromatic(
    L: LieAlgebra, g: NCGraph | None = None, guards: Guards = DEFAULT_GUARDS
) -> CheckResult:
    """For AC algebras the clique and chromatic numbers coincide."""
    name = "ac-clique-chromatic"
    try:
        ac = L.is_ac(guards.elements)
    except GuardExceeded:
        return CheckResult(name, NOT_COMPUTED, detail="AC scan above guard")
    if not ac:
        return CheckResult(name, NOT_APPLICABLE, detail="algebra is not AC")
    g = _graph(L, g)
    omega = clique_number(g.adj, guards.clique)
    chi = chromatic_number(g.adj, guards.chromatic,
                           clique_hint=omega.value if omega.exact else None)
    if not (omega.exact and chi.exact):
        return CheckResult(name, NOT_COMPUTED, detail="clique or chromatic above guard")
    if omega.value != chi.value:
        return CheckResult(name, FAIL, {"omega": omega.value, "chi": chi.value})
    return CheckResult(name, PASS, detail=f"omega = chi = {omega.value}")


# -- pairwise: isomorphic graphs and algebra size -------------------------------------


def check_iso_size(L1: LieAlgebra, L2: LieAlgebra) -> CheckResult:
    """For graph-isomorphic algebras over the same field: equal quotient
    dimensions, and |L1| = |L2| iff |Z(L1)| = |Z(L2)|."""
    name = "iso-same-size"
    if L1.field != L2.field:
        return CheckResult(name, NOT_APPLICABLE, detail="different base fields")
    q = L1.field.q
    d1 = L1.dim - L1.center.dim
    d2 = L2.dim - L2.center.dim
    if d1 != d2:
        return CheckResult(
            name, FAIL,
            {"quotient_dims": [d1, d2]},
            detail="graph-isomorphic algebras with different quotient dimensions",
        )
    sizes_equal = q**L1.dim == q**L2.dim
    centers_equal = q**L1.center.dim == q**L2.center.dim
    if sizes_equal != centers_equal:
        return CheckResult(
            name, FAIL,
            {"algebra_sizes": [q**L1.dim, q**L2.dim],
             "center_sizes": [q**L1.center.dim, q**L2.center.dim]},
        )
    return CheckResult(
        name, PASS,
        detail=f"|L| equal: {sizes_equal}; |Z| equal: {centers_equal}",
    )


# -- orchestration ------------------------------------------------------------------------


ALGEBRA_CHECKS: tuple[Callable, ...] = (
    check_order_degree_formulas,
    check_finiteness_regularity,
    check_complete_iff_line_centralizers,
    check_connected_diameter_girth,
    check_hamiltonian,
    check_eulerian,
    check_kappa,
    check_planarity_classification,
    check_regular_nilpotent_class,
    check_max_independent_abelian,
    check_domination_singleton,
    check_domination_subset_criterion,
    check_domination_basis_bound,
    check_codim2_domination,
    check_chromatic_cover,
    check_ct_multipartite,
    check_ac_multipartite,
    check_ac_clique_chromatic,
)


def verify_algebra(
    L: LieAlgebra,
    g: NCGraph | None = None,
    guards: Guards = DEFAULT_GUARDS,
    seed: int = 0,
    trials: int = 64,
) -> list[CheckResult]:
    """Run every applicable check on one algebra (optionally on a supplied,
    possibly corrupted, graph)."""
    g = _graph(L, g)
    results = []
    for fn in ALGEBRA_CHECKS:
        if fn is check_domination_subset_criterion:
            results.append(
                _timed(lambda f=fn: f(L, g, guards, seed=seed, trials=trials))
            )
        else:
            results.append(_timed(lambda f=fn: f(L, g, guards)))
    return results


@dataclass
class CensusVerification:
    dim: int
    q: int
    algebras: int
    results: list[tuple[str, CheckResult]] = dc_field(default_factory=list)

    @property
    def failures(self) -> list[tuple[str, CheckResult]]:
        return [(ident, r) for ident, r in self.results if r.status == FAIL]

    def to_json_lines(self) -> str:
        lines = []
        for ident, r in self.results:
            doc = {"algebra": ident, **r.to_json()}
            lines.append(json.dumps(doc, sort_keys=True, separators=(",", ":")))
        counts: dict[str, int] = {}
        for _, r in self.results:
            counts[r.status] = counts.get(r.status, 0) + 1
        summary = {
            "summary": {
                "dim": self.dim,
                "q": self.q,
                "algebras": self.algebras,
                "checks": len(self.results),
                "statuses": {k: counts[k] for k in sorted(counts)},
            }
        }
        lines.append(json.dumps(summary, sort_keys=True, separators=(",", ":")))
        return "\n".join(lines) + "\n"


def verify_census(
    census_result: CensusResult,
    guards: Guards = DEFAULT_GUARDS,
    seed: int = 0,
    trials: int = 64,
) -> CensusVerification:
    """Run the per-algebra suite on every census member, plus the size
    biconditional on graph-isomorphic pairs (consecutive members of each
    class; quotient dimensions propagate transitively)."""
    out = CensusVerification(
        dim=census_result.dim,
        q=census_result.field.q,
        algebras=census_result.non_abelian,
    )
    for entry in census_result.entries:
        ident = entry.record["fingerprint"]
        for r in verify_algebra(entry.algebra, entry.graph, guards, seed, trials):
            out.results.append((ident, r))
    by_class: dict[int, list] = {}
    for entry in census_result.entries:
        by_class.setdefault(entry.record["gamma_class"], []).append(entry)
    for cid in sorted(by_class):
        members = by_class[cid]
        for a, b in zip(members, members[1:]):
            ident = f"{a.record['fingerprint']}~{b.record['fingerprint']}"
            out.results.append((ident, _timed(lambda: check_iso_size(a.algebra, b.algebra))))
    return out
