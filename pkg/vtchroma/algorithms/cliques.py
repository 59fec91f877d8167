"""Clique enumeration and the structure theory of maximum-clique clusters.

All threshold comparisons are done in integers: "omega >= 2/3 (Delta + 1)" is
`3 * omega >= 2 * (delta + 1)`.
"""

import dataclasses
from typing import Optional

from vtchroma.algorithms.generators import blow_up, cycle, induced_subgraph
from vtchroma.algorithms.graph6 import write_graph6
from vtchroma.algorithms.symmetry import is_vertex_transitive
from vtchroma.core.config import settings
from vtchroma.core.exceptions import (
    BudgetExceededError,
    LemmaFalsifiedError,
    NotMaximumCliqueError,
    NotVertexTransitiveError,
    PreconditionError,
)
from vtchroma.core.logging import logger
from vtchroma.enums import ClusterKind
from vtchroma.models import vertex_set as vs
from vtchroma.models.cliques import CliqueCollection, CliqueGraph, ClusterClassification
from vtchroma.models.graph import Graph
from vtchroma.models.permutation import Permutation
from vtchroma.models.vertex_set import VertexSet


def two_thirds_margin(omega: int, delta: int) -> int:
    """Sign of omega - 2/3 (Delta + 1), scaled to an integer."""
    return 3 * omega - 2 * (delta + 1)


class _CliqueEnumerator:
    """Bron-Kerbosch with the pivot maximizing |P & N(pivot)|, on bitsets."""

    def __init__(self, g: Graph, min_size: int, limit: int):
        self.adj = g.adj
        self.min_size = min_size
        self.limit = limit
        self.found: list[VertexSet] = []

    def run(self, candidates: VertexSet) -> list[VertexSet]:
        self._expand(0, 0, candidates, 0)
        return sorted(self.found)

    def _expand(self, r: VertexSet, size: int, p: VertexSet, x: VertexSet) -> None:
        if not p:
            if not x and size >= self.min_size:
                self.found.append(r)
                if len(self.found) > self.limit:
                    raise BudgetExceededError("clique enumeration", self.limit)
            return
        if size + p.bit_count() < self.min_size:
            return
        pivot = max(vs.members(p | x), key=lambda u: ((p & self.adj[u]).bit_count(), -u))
        for v in vs.members(p & ~self.adj[pivot]):
            bit = 1 << v
            self._expand(r | bit, size + 1, p & self.adj[v], x & self.adj[v])
            p &= ~bit
            x |= bit


def maximal_cliques(g: Graph, limit: Optional[int] = None) -> CliqueCollection:
    """Every maximal clique; the 0-vertex graph has none."""
    if g.n == 0:
        return CliqueCollection(g, ())
    enumerator = _CliqueEnumerator(g, 0, limit or settings.CLIQUE_LIMIT)
    return CliqueCollection(g, tuple(enumerator.run(g.vertices)))


def _greedy_color_bound(p: VertexSet, adj: tuple[VertexSet, ...]) -> tuple[list[int], list[int]]:
    """Greedy color classes of P; a clique inside the first i vertices has at most colors[i]."""
    order: list[int] = []
    colors: list[int] = []
    color = 0
    remaining = p
    while remaining:
        color += 1
        available = remaining
        while available:
            v = vs.lowest(available)
            order.append(v)
            colors.append(color)
            remaining &= ~(1 << v)
            available &= ~(1 << v) & ~adj[v]
    return order, colors


def max_clique(g: Graph, node_limit: Optional[int] = None) -> VertexSet:
    """One maximum clique, by branch and bound with a greedy-coloring size bound."""
    if g.n == 0:
        return 0
    limit = node_limit or settings.search_node_limit
    best = [1 << 0, 1]
    nodes = 0

    def expand(r: VertexSet, size: int, p: VertexSet) -> None:
        nonlocal nodes
        order, colors = _greedy_color_bound(p, g.adj)
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= best[1]:
                return
            v = order[i]
            nodes += 1
            if nodes > limit:
                raise BudgetExceededError("maximum clique search", limit)
            grown = r | 1 << v
            inner = p & g.adj[v]
            if inner:
                expand(grown, size + 1, inner)
            elif size + 1 > best[1]:
                best[0], best[1] = grown, size + 1
            p &= ~(1 << v)

    expand(0, 0, g.vertices)
    return best[0]


def clique_number(g: Graph) -> int:
    return max_clique(g).bit_count()


def maximum_cliques(g: Graph, limit: Optional[int] = None) -> CliqueCollection:
    """All cliques of size omega(g): maximal enumeration cut off below omega."""
    if g.n == 0:
        raise PreconditionError("maximum cliques of the empty graph")
    omega = clique_number(g)
    enumerator = _CliqueEnumerator(g, omega, limit or settings.CLIQUE_LIMIT)
    cliques = tuple(c for c in enumerator.run(g.vertices) if c.bit_count() == omega)
    logger.debug(f"{len(cliques)} maximum cliques of size {omega}")
    return CliqueCollection(g, cliques, is_all_maximum=True)


def build_clique_graph(q: CliqueCollection) -> CliqueGraph:
    if not len(q):
        raise PreconditionError("clique graph of an empty collection")
    cliques = q.cliques
    adj = tuple(
        vs.from_vertices(j for j, other in enumerate(cliques) if j != i and mine & other)
        for i, mine in enumerate(cliques)
    )
    components = []
    remaining = vs.full(len(cliques))
    while remaining:
        seen = frontier = 1 << vs.lowest(remaining)
        while frontier:
            reach = 0
            for i in vs.members(frontier):
                reach |= adj[i]
            frontier = reach & ~seen
            seen |= frontier
        components.append(tuple(vs.members(seen)))
        remaining &= ~seen
    return CliqueGraph(q, adj, tuple(components))


def _require_maximum(g: Graph, q: CliqueCollection, omega: int) -> None:
    for c in q:
        if c.bit_count() != omega or not g.is_clique(c):
            raise NotMaximumCliqueError(
                f"{vs.to_list(c)} is not a maximum clique (omega={omega})"
            )


def _require_connected(q: CliqueCollection) -> CliqueGraph:
    x = build_clique_graph(q)
    if len(x.components) != 1:
        raise PreconditionError("cliques do not form one connected component of X_Q")
    return x


@dataclasses.dataclass(frozen=True, slots=True)
class HajnalResult:
    union_size: int
    intersection_size: int
    omega: int

    @property
    def holds(self) -> bool:
        return self.union_size + self.intersection_size >= 2 * self.omega


def hajnal_check(g: Graph, q: CliqueCollection, omega: Optional[int] = None) -> HajnalResult:
    """|U Q| + |n Q| versus 2 omega for a nonempty set of maximum cliques."""
    if not len(q):
        raise PreconditionError("Hajnal check needs at least one clique")
    omega = omega or clique_number(g)
    _require_maximum(g, q, omega)
    return HajnalResult(q.union.bit_count(), q.intersection.bit_count(), omega)


def kostochka_common_vertex(
    g: Graph, component: CliqueCollection, omega: Optional[int] = None
) -> VertexSet:
    """The common part of a connected cluster when omega > 2/3 (Delta + 1)."""
    omega = omega or clique_number(g)
    if two_thirds_margin(omega, g.max_degree) <= 0:
        raise PreconditionError(
            f"requires 3*omega > 2*(Delta+1); omega={omega}, Delta={g.max_degree}"
        )
    _require_maximum(g, component, omega)
    _require_connected(component)
    common = component.intersection
    if not common:
        raise LemmaFalsifiedError("connected maximum-clique cluster has a common vertex", write_graph6(g))
    return common


def _cycle_order(x: CliqueGraph) -> list[int]:
    order = [0]
    previous, current = -1, 0
    while True:
        step = next(i for i in x.neighbors(current) if i != previous)
        if step == 0:
            return order
        order.append(step)
        previous, current = current, step


def cek_classify(
    g: Graph, component: CliqueCollection, omega: Optional[int] = None
) -> ClusterClassification:
    """Shape of one connected cluster when omega >= 2/3 (Delta + 1).

    Either the cliques share a vertex, or X is a path or cycle whose neighbors
    of any clique are disjoint and meet it in exactly omega/2 vertices.
    """
    omega = omega or clique_number(g)
    if two_thirds_margin(omega, g.max_degree) < 0:
        raise PreconditionError(
            f"requires 3*omega >= 2*(Delta+1); omega={omega}, Delta={g.max_degree}"
        )
    _require_maximum(g, component, omega)
    x = _require_connected(component)

    common = component.intersection
    if common:
        return ClusterClassification(ClusterKind.STAR_COMPONENTS, common_sets=(common,))

    witness = write_graph6(g)
    statement = "cluster without common vertex has max degree 2 with half-clique overlaps"
    if x.max_degree > 2:
        raise LemmaFalsifiedError(statement, witness, details=[{"max_degree": x.max_degree}])
    cliques = component.cliques
    for a in range(x.order):
        nbrs = x.neighbors(a)
        if len(nbrs) != 2:
            continue
        b, c = nbrs
        overlaps = [(cliques[a] & cliques[b]).bit_count(), (cliques[a] & cliques[c]).bit_count()]
        if cliques[b] & cliques[c] or any(2 * size != omega for size in overlaps):
            raise LemmaFalsifiedError(statement, witness, details=[{"clique": a, "overlaps": overlaps}])

    if x.order < 3 or any(row.bit_count() != 2 for row in x.adj):
        overlaps = [
            (cliques[i] & cliques[j]).bit_count()
            for i in range(x.order)
            for j in x.neighbors(i)
            if i < j
        ]
        return ClusterClassification(
            ClusterKind.OTHER,
            reason="path",
            details={"length": x.order, "overlaps": overlaps},
        )

    order = _cycle_order(x)
    m = len(order)
    parts = tuple(cliques[order[i]] & cliques[order[(i + 1) % m]] for i in range(m))
    tiled = sum(p.bit_count() for p in parts) == component.union.bit_count() and (
        _union(parts) == component.union
    )
    if not tiled or any(2 * p.bit_count() != omega for p in parts):
        return ClusterClassification(
            ClusterKind.OTHER,
            reason="untiled_cycle",
            details={"length": m, "part_sizes": [p.bit_count() for p in parts]},
        )
    return ClusterClassification(
        ClusterKind.CYCLE_BLOWUP, cycle_length=m, part_size=omega // 2, parts=parts
    )


def _union(parts) -> VertexSet:
    out = 0
    for p in parts:
        out |= p
    return out


def vt_classify(g: Graph, verified_transitive: bool = False) -> ClusterClassification:
    """Clustering dichotomy for a connected vertex-transitive graph with 3 omega >= 2 (Delta + 1).

    Returns EDGELESS (maximum cliques tile V) or CYCLE_BLOWUP together with an
    explicit isomorphism onto blow_up(C_m, omega/2).
    """
    if g.n < 1 or not g.is_connected():
        raise PreconditionError("requires a nonempty connected graph")
    if not verified_transitive and not is_vertex_transitive(g):
        raise NotVertexTransitiveError()
    q = maximum_cliques(g)
    omega = q.cliques[0].bit_count()
    if two_thirds_margin(omega, g.max_degree) < 0:
        raise PreconditionError(
            f"requires 3*omega >= 2*(Delta+1); omega={omega}, Delta={g.max_degree}"
        )

    witness = write_graph6(g)
    x = build_clique_graph(q)
    if x.is_edgeless():
        if not q.covers():
            raise LemmaFalsifiedError("disjoint maximum cliques cover V", witness)
        return ClusterClassification(ClusterKind.EDGELESS, parts=q.cliques)

    statement = "X_Q is edgeless or a cycle blown up by half-cliques"
    if len(x.components) != 1:
        raise LemmaFalsifiedError(statement, witness)
    shape = cek_classify(g, q, omega)
    if shape.kind is not ClusterKind.CYCLE_BLOWUP or _union(shape.parts) != g.vertices:
        raise LemmaFalsifiedError(statement, witness, details=[{"shape": shape.label}])

    half = omega // 2
    image = [0] * g.n
    for i, part in enumerate(shape.parts):
        for j, v in enumerate(vs.members(part)):
            image[v] = i * half + j
    perm = Permutation(tuple(image))
    if not perm.is_isomorphism(g, blow_up(cycle(shape.cycle_length), half)):
        raise LemmaFalsifiedError(statement, witness, details=[{"shape": shape.label}])
    return dataclasses.replace(shape, isomorphism=perm)


def classify_graph(
    g: Graph, vertex_transitive: bool, omega: Optional[int] = None
) -> ClusterClassification:
    """Profile-level classification; NOT_APPLICABLE outside the dichotomy's hypotheses."""
    if g.n == 0 or not vertex_transitive:
        return ClusterClassification(ClusterKind.NOT_APPLICABLE, reason="not vertex-transitive")
    omega = omega or clique_number(g)
    if two_thirds_margin(omega, g.max_degree) < 0:
        return ClusterClassification(ClusterKind.NOT_APPLICABLE, reason="omega below 2/3(Delta+1)")
    if g.is_connected():
        return vt_classify(g, verified_transitive=True)
    # components of a vertex-transitive graph are isomorphic and vertex-transitive
    component, _ = induced_subgraph(g, g.component_of(0))
    return vt_classify(component, verified_transitive=True)
