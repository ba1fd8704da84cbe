"""The non-commuting graph and exact computation of its invariants.

Adjacency is one int bitmask per vertex (bit j of adj[i] set iff i ~ j),
which keeps neighborhood intersections cheap in the clique and domination
searches.  Exponential invariants return a (value, exact) pair; above
their vertex guard the value is a best-known bound flagged inexact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

import networkx as nx

from .config import DEFAULT_GUARDS, Guards
from .lie import GuardExceeded, LieAlgebra
from .projective import CentralQuotient, ProjPoint, quotient_coords

HAM_TRUE = "exact-true"
HAM_FALSE = "exact-false"
HAM_DIRAC = "dirac-guaranteed"
HAM_UNKNOWN = "unknown"


class Guarded(NamedTuple):
    value: int
    exact: bool


@dataclass(frozen=True)
class NCGraph:
    """Gamma_L: projective points of L/Z(L), edges where lifts do not commute."""

    q: int
    n: int
    s: int
    d: int
    points: tuple[ProjPoint, ...]
    adj: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.adj)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.adj)

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i, m in enumerate(self.adj):
            rest = m >> (i + 1) << (i + 1)
            while rest:
                j = (rest & -rest).bit_length() - 1
                out.append((i, j))
                rest &= rest - 1
        return out

    def with_flipped_edge(self, i: int, j: int) -> "NCGraph":
        """Copy with the (i, j) adjacency bit toggled; a mutation-testing hook."""
        if i == j:
            raise ValueError("cannot flip a diagonal entry")
        adj = list(self.adj)
        adj[i] ^= 1 << j
        adj[j] ^= 1 << i
        return NCGraph(self.q, self.n, self.s, self.d, self.points, tuple(adj))


def build_graph(L: LieAlgebra, cq: CentralQuotient | None = None) -> NCGraph:
    """Construct Gamma_L; vertices are canonical projective points of L/Z(L)."""
    if cq is None:
        cq = quotient_coords(L)
    points = cq.points
    lifts = [cq.lift(pt) for pt in points]
    n = len(points)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if any(L.bracket(lifts[i], lifts[j])):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    if not any(adj):
        raise ValueError("non-abelian algebra produced an edgeless graph")
    return NCGraph(cq.q, L.dim, cq.s, cq.d, points, tuple(adj))


def masks_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    """Adjacency bitmasks for a plain test graph given as an edge list."""
    adj = [0] * n
    for i, j in edges:
        if i == j:
            raise ValueError("self loops not allowed")
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return tuple(adj)


def complement(adj: tuple[int, ...]) -> tuple[int, ...]:
    n = len(adj)
    full = (1 << n) - 1
    return tuple((full & ~adj[v]) & ~(1 << v) for v in range(n))


def _bits(mask: int):
    while mask:
        v = (mask & -mask).bit_length() - 1
        yield v
        mask &= mask - 1


# -- distances ----------------------------------------------------------


def is_connected(adj: tuple[int, ...]) -> bool:
    n = len(adj)
    if n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def _bfs_dist(adj: tuple[int, ...], src: int) -> list[int]:
    n = len(adj)
    dist = [-1] * n
    dist[src] = 0
    seen = 1 << src
    frontier = 1 << src
    level = 0
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        level += 1
        for v in _bits(frontier):
            dist[v] = level
    return dist


def diameter(adj: tuple[int, ...]) -> int | None:
    """Largest BFS eccentricity; None when disconnected, 0 for a single vertex."""
    n = len(adj)
    if n == 0:
        return None
    best = 0
    for src in range(n):
        dist = _bfs_dist(adj, src)
        if any(d < 0 for d in dist):
            return None
        best = max(best, max(dist))
    return best


def girth(adj: tuple[int, ...]) -> int | None:
    """Length of a shortest cycle, None for forests.

    BFS from every vertex; a non-tree edge (u, w) seen from root r closes a
    cycle of length dist[u] + dist[w] + 1, and a shortest cycle is realized
    exactly from its own vertices.
    """
    n = len(adj)
    best: int | None = None
    for src in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[src] = 0
        queue = [src]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            if best is not None and dist[u] * 2 >= best:
                break
            for w in _bits(adj[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cand = dist[u] + dist[w] + 1
                    if best is None or cand < best:
                        best = cand
    return best


def is_eulerian(adj: tuple[int, ...]) -> bool:
    """Connected with every vertex degree even."""
    return is_connected(adj) and all(m.bit_count() % 2 == 0 for m in adj)


# -- hamiltonicity --------------------------------------------------------


def hamiltonicity(adj: tuple[int, ...], guard: int = DEFAULT_GUARDS.hamiltonian) -> str:
    n = len(adj)
    if n < 3:
        return HAM_FALSE
    degs = [m.bit_count() for m in adj]
    if 2 * min(degs) > n:
        return HAM_DIRAC
    if n > guard:
        return HAM_UNKNOWN
    return HAM_TRUE if _hamiltonian_cycle(adj) else HAM_FALSE


def _hamiltonian_cycle(adj: tuple[int, ...]) -> bool:
    n = len(adj)
    if not is_connected(adj):
        return False
    full = (1 << n) - 1

    def rec(v: int, mask: int, count: int) -> bool:
        if count == n:
            return bool(adj[v] & 1)
        # Every unvisited vertex still needs two cycle neighbors among the
        # unvisited vertices, the current endpoint and the start.
        avail_targets = (full & ~mask) | (1 << v) | 1
        rest = full & ~mask
        for u in _bits(rest):
            if (adj[u] & avail_targets).bit_count() < 2:
                return False
        for w in _bits(adj[v] & ~mask):
            if rec(w, mask | (1 << w), count + 1):
                return True
        return False

    return rec(0, 1, 1)


# -- planarity -------------------------------------------------------------


def is_planar(adj: tuple[int, ...]) -> bool:
    """Exact planarity: Euler edge-count fast path, then the full test."""
    n = len(adj)
    if n <= 4:
        return True
    m = sum(x.bit_count() for x in adj) // 2
    if m > 3 * n - 6:
        return False
    G = nx.Graph()
    G.add_nodes_from(range(n))
    for i in range(n):
        for j in _bits(adj[i] >> (i + 1) << (i + 1)):
            G.add_edge(i, j)
    return nx.check_planarity(G)[0]


# -- connectivity ----------------------------------------------------------


def vertex_connectivity(adj: tuple[int, ...]) -> int:
    """Exact kappa: max-flow on the vertex-split network over non-adjacent
    pairs; order - 1 for complete graphs, 0 when disconnected."""
    n = len(adj)
    if n == 0:
        return 0
    if not is_connected(adj):
        return 0
    best = n - 1
    for s in range(n):
        for t in range(s + 1, n):
            if not adj[s] >> t & 1:
                best = min(best, _local_vertex_connectivity(adj, s, t))
    return best


def _local_vertex_connectivity(adj: tuple[int, ...], s: int, t: int) -> int:
    # Node 2v is v_in, 2v+1 is v_out; v_in -> v_out has capacity 1 except at
    # the terminals.  Edges get effectively infinite capacity.
    n = len(adj)
    inf = n * n + 1
    cap: dict[tuple[int, int], int] = {}
    for v in range(n):
        cap[(2 * v, 2 * v + 1)] = 1 if v not in (s, t) else inf
    for u in range(n):
        for v in _bits(adj[u]):
            cap[(2 * u + 1, 2 * v)] = inf
    graph: dict[int, list[int]] = {}
    for (u, v) in list(cap):
        graph.setdefault(u, []).append(v)
        graph.setdefault(v, []).append(u)
        cap.setdefault((v, u), 0)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        prev = {source: source}
        queue = [source]
        qi = 0
        while qi < len(queue) and sink not in prev:
            u = queue[qi]
            qi += 1
            for v in graph.get(u, ()):
                if v not in prev and cap.get((u, v), 0) > 0:
                    prev[v] = u
                    queue.append(v)
        if sink not in prev:
            return flow
        v = sink
        bottleneck = inf
        while v != source:
            u = prev[v]
            bottleneck = min(bottleneck, cap[(u, v)])
            v = u
        v = sink
        while v != source:
            u = prev[v]
            cap[(u, v)] -= bottleneck
            cap[(v, u)] += bottleneck
            v = u
        flow += bottleneck


# -- clique, coloring, independence, domination -----------------------------


def _greedy_clique(adj: tuple[int, ...]) -> int:
    n = len(adj)
    best = 0
    for v in sorted(range(n), key=lambda u: -adj[u].bit_count()):
        size = 1
        cand = adj[v]
        while cand:
            u = max(_bits(cand), key=lambda w: (adj[w] & cand).bit_count())
            size += 1
            cand &= adj[u]
        best = max(best, size)
    return best


def _color_order(adj: tuple[int, ...], cand: int) -> tuple[list[int], list[int]]:
    # Greedy coloring of the candidate set; returns vertices in increasing
    # color order with their color numbers (a clique upper bound).
    order: list[int] = []
    colors: list[int] = []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~adj[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append(v)
            colors.append(color)
    return order, colors


def clique_number(adj: tuple[int, ...], guard: int = DEFAULT_GUARDS.clique) -> Guarded:
    """Exact max-clique by branch and bound with a greedy-coloring bound;
    greedy lower bound flagged inexact above the guard."""
    n = len(adj)
    if n == 0:
        return Guarded(0, True)
    if n > guard:
        return Guarded(_greedy_clique(adj), False)
    best = [_greedy_clique(adj)]

    def expand(size: int, cand: int) -> None:
        order, colors = _color_order(adj, cand)
        for i in range(len(order) - 1, -1, -1):
            v = order[i]
            if size + colors[i] <= best[0]:
                return
            nxt = cand & adj[v]
            if nxt:
                expand(size + 1, nxt)
            elif size + 1 > best[0]:
                best[0] = size + 1
            cand &= ~(1 << v)

    expand(0, (1 << n) - 1)
    return Guarded(best[0], True)


def _dsatur_upper(adj: tuple[int, ...]) -> int:
    n = len(adj)
    colors = [-1] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (len(neighbor_colors[u]), adj[u].bit_count(), -u),
        )
        c = 0
        while c in neighbor_colors[v]:
            c += 1
        colors[v] = c
        for u in _bits(adj[v]):
            if colors[u] < 0:
                neighbor_colors[u].add(c)
    return max(colors) + 1 if n else 0


def _k_colorable(adj: tuple[int, ...], k: int) -> bool:
    n = len(adj)
    colors = [-1] * n

    def rec(done: int, max_used: int) -> bool:
        if done == n:
            return True
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (
                len({colors[w] for w in _bits(adj[u]) if colors[w] >= 0}),
                adj[u].bit_count(),
                -u,
            ),
        )
        used = {colors[w] for w in _bits(adj[v]) if colors[w] >= 0}
        # New colors introduced in index order only (symmetry break).
        limit = min(k - 1, max_used + 1)
        for c in range(limit + 1):
            if c in used:
                continue
            colors[v] = c
            if rec(done + 1, max(max_used, c)):
                return True
            colors[v] = -1
        return False

    return rec(0, -1)


def chromatic_number(
    adj: tuple[int, ...],
    guard: int = DEFAULT_GUARDS.chromatic,
    clique_hint: int | None = None,
) -> Guarded:
    """Exact chromatic number by iterative deepening on k-colorability,
    bracketed between the clique number and a DSATUR upper bound."""
    n = len(adj)
    if n == 0:
        return Guarded(0, True)
    upper = _dsatur_upper(adj)
    if n > guard:
        return Guarded(upper, False)
    if clique_hint is None:
        clique_hint = clique_number(adj, guard).value
    for k in range(clique_hint, upper):
        if _k_colorable(adj, k):
            return Guarded(k, True)
    return Guarded(upper, True)


def independence_number(
    adj: tuple[int, ...], guard: int = DEFAULT_GUARDS.independence
) -> Guarded:
    """Clique number of the complement graph."""
    return clique_number(complement(adj), guard)


def domination_number(
    adj: tuple[int, ...], guard: int = DEFAULT_GUARDS.domination
) -> Guarded:
    """Exact minimum dominating set size by subset branch and bound.

    Branches on the dominators of an uncovered vertex with the fewest
    choices; above the guard a greedy cover size is returned, inexact.
    """
    n = len(adj)
    if n == 0:
        return Guarded(0, True)
    closed = [adj[v] | (1 << v) for v in range(n)]
    full = (1 << n) - 1

    covered, k = 0, 0
    while covered != full:
        best = max(closed, key=lambda m: (m & ~covered).bit_count())
        covered |= best
        k += 1
    if n > guard:
        return Guarded(k, False)
    best_size = [k]

    def search(covered: int, count: int) -> None:
        if covered == full:
            if count < best_size[0]:
                best_size[0] = count
            return
        rem = full & ~covered
        max_gain = max((m & rem).bit_count() for m in closed)
        if count + -(-rem.bit_count() // max_gain) >= best_size[0]:
            return
        u = min(_bits(rem), key=lambda x: (closed[x] & rem).bit_count())
        for w in _bits(closed[u]):
            search(covered | closed[w], count + 1)

    search(0, 0)
    return Guarded(best_size[0], True)


# -- multipartite structure --------------------------------------------------


def multipartite_decomposition(
    adj: tuple[int, ...],
) -> tuple[tuple[int, ...], ...] | None:
    """The partite classes when the graph is complete multipartite, else None.

    Classes are the connected components of the complement; the graph is
    complete multipartite iff every such component is an independent set
    (cross edges are then automatic).
    """
    n = len(adj)
    comp = complement(adj)
    unseen = (1 << n) - 1
    classes: list[tuple[int, ...]] = []
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        seen = 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= comp[v]
            frontier = nxt & ~seen
            seen |= frontier
        members = tuple(_bits(seen))
        for v in members:
            if adj[v] & seen:
                return None
        classes.append(members)
        unseen &= ~seen
    return tuple(sorted(classes, key=lambda c: c[0]))


# -- isomorphism --------------------------------------------------------------


def _refine_colors(adjs: list[tuple[int, ...]], colorings: list[list[int]]) -> list[list[int]]:
    # Joint iterated degree refinement: signatures are shared across the
    # graphs so the resulting color ids are comparable.
    while True:
        signatures = []
        for adj, colors in zip(adjs, colorings):
            signatures.append(
                [
                    (colors[v], tuple(sorted(colors[u] for u in _bits(adj[v]))))
                    for v in range(len(adj))
                ]
            )
        table = {sig: i for i, sig in enumerate(sorted({s for sigs in signatures for s in sigs}))}
        new = [[table[s] for s in sigs] for sigs in signatures]
        if new == colorings:
            return colorings
        colorings = new


def is_isomorphic(
    adj1: tuple[int, ...],
    adj2: tuple[int, ...],
    guard: int = DEFAULT_GUARDS.isomorphism,
) -> bool:
    """Exact graph isomorphism: invariant pre-filters, joint color
    refinement, then backtracking over color-preserving bijections."""
    n = len(adj1)
    if max(n, len(adj2)) > guard:
        raise GuardExceeded(
            f"isomorphism test on {max(n, len(adj2))} vertices exceeds the guard {guard}"
        )
    if n != len(adj2):
        return False
    if sum(m.bit_count() for m in adj1) != sum(m.bit_count() for m in adj2):
        return False
    if sorted(m.bit_count() for m in adj1) != sorted(m.bit_count() for m in adj2):
        return False
    if girth(adj1) != girth(adj2):
        return False
    c1, c2 = _refine_colors(
        [adj1, adj2], [[m.bit_count() for m in adj1], [m.bit_count() for m in adj2]]
    )
    if sorted(c1) != sorted(c2):
        return False

    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(c2):
        by_color.setdefault(c, []).append(v)
    # Map the most constrained (rarest color) vertices first.
    order = sorted(range(n), key=lambda v: (len(by_color[c1[v]]), v))
    mapping = [-1] * n
    used = [False] * n

    def rec(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in by_color.get(c1[v], ()):
            if used[w]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if bool(adj1[v] >> u & 1) != bool(adj2[w] >> mapping[u] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if rec(i + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return rec(0)


# -- closed forms -------------------------------------------------------------


def expected_order(q: int, n: int, s: int) -> int:
    return (q ** (n - s) - 1) // (q - 1)


def expected_degree(q: int, n: int, s: int, r: int) -> int:
    return (q ** (n - s) - q ** (r - s)) // (q - 1)


def degree_formula_check(L: LieAlgebra, g: NCGraph) -> bool:
    """Every adjacency degree equals the centralizer-dimension closed form."""
    cq = quotient_coords(L)
    for v, pt in enumerate(g.points):
        r = L.centralizer(cq.lift(pt)).dim
        if g.degree(v) != expected_degree(g.q, g.n, g.s, r):
            return False
    return True


# -- report --------------------------------------------------------------------


@dataclass(frozen=True)
class InvariantReport:
    order: int
    size: int
    degree_sequence: tuple[int, ...]
    regular: bool
    connected: bool
    diameter: int | None
    girth: int | None
    eulerian: bool
    hamiltonian: str
    planar: bool
    kappa: int
    clique_number: Guarded
    chromatic_number: Guarded
    independence_number: Guarded
    domination_number: Guarded
    multipartite: tuple[tuple[int, ...], ...] | None

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "size": self.size,
            "degree_sequence": list(self.degree_sequence),
            "regular": self.regular,
            "connected": self.connected,
            "diameter": self.diameter,
            "girth": self.girth,
            "eulerian": self.eulerian,
            "hamiltonian": self.hamiltonian,
            "planar": self.planar,
            "kappa": self.kappa,
            "clique_number": {"value": self.clique_number.value, "exact": self.clique_number.exact},
            "chromatic_number": {
                "value": self.chromatic_number.value,
                "exact": self.chromatic_number.exact,
            },
            "independence_number": {
                "value": self.independence_number.value,
                "exact": self.independence_number.exact,
            },
            "domination_number": {
                "value": self.domination_number.value,
                "exact": self.domination_number.exact,
            },
            "multipartite": [list(c) for c in self.multipartite]
            if self.multipartite is not None
            else None,
        }


def analyze(adj: tuple[int, ...], guards: Guards = DEFAULT_GUARDS) -> InvariantReport:
    degs = tuple(sorted(m.bit_count() for m in adj))
    omega = clique_number(adj, guards.clique)
    chi = chromatic_number(adj, guards.chromatic, clique_hint=omega.value if omega.exact else None)
    return InvariantReport(
        order=len(adj),
        size=sum(degs) // 2,
        degree_sequence=degs,
        regular=len(set(degs)) <= 1,
        connected=is_connected(adj),
        diameter=diameter(adj),
        girth=girth(adj),
        eulerian=is_eulerian(adj),
        hamiltonian=hamiltonicity(adj, guards.hamiltonian),
        planar=is_planar(adj),
        kappa=vertex_connectivity(adj),
        clique_number=omega,
        chromatic_number=chi,
        independence_number=independence_number(adj, guards.independence),
        domination_number=domination_number(adj, guards.domination),
        multipartite=multipartite_decomposition(adj),
    )


# -- exports ---------------------------------------------------------------------


def _point_label(pt: ProjPoint) -> str:
    return "(" + ",".join(str(c) for c in pt.rep) + ")"


def export_dot(g: NCGraph) -> str:
    lines = ["graph noncommuting {"]
    for v, pt in enumerate(g.points):
        lines.append(f'  v{v} [label="{_point_label(pt)}"];')
    for i, j in g.edges():
        lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_graphml(g: NCGraph) -> str:
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">',
        '  <key id="label" for="node" attr.name="label" attr.type="string"/>',
        '  <graph id="G" edgedefault="undirected">',
    ]
    for v, pt in enumerate(g.points):
        lines.append(f'    <node id="v{v}"><data key="label">{_point_label(pt)}</data></node>')
    for i, j in g.edges():
        lines.append(f'    <edge source="v{i}" target="v{j}"/>')
    lines.append("  </graph>")
    lines.append("</graphml>")
    return "\n".join(lines) + "\n"
