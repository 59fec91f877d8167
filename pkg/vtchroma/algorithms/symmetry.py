"""Exact automorphism and isomorphism search.

Backtracking over candidate images, pruned by a joint color refinement of the
two graphs (degree, then multiset of neighbor colors, iterated until stable)
and by full adjacency consistency with the partial map. Every answer is exact;
hitting the node budget raises BudgetExceededError instead of guessing.
"""

from dataclasses import dataclass, field
from typing import Optional

from vtchroma.core.config import settings
from vtchroma.core.exceptions import BudgetExceededError
from vtchroma.core.logging import logger
from vtchroma.models import vertex_set as vs
from vtchroma.models.graph import Graph
from vtchroma.models.permutation import OrbitPartition, Permutation


def refine_colors(
    graphs: list[Graph], fixed: Optional[list[dict[int, int]]] = None
) -> list[list[int]]:
    """Jointly refined vertex colors; equal colors across graphs are comparable.

    fixed[i] individualizes vertices of graphs[i] (vertex -> tag); an isomorphism
    respecting the tags preserves the refined colors.
    """
    fixed = fixed or [{} for _ in graphs]
    signatures = [
        [(g.degree(v), tags.get(v, -1)) for v in range(g.n)] for g, tags in zip(graphs, fixed)
    ]
    colors = _renumber(signatures)
    count = len({c for row in colors for c in row})
    while True:
        signatures = [
            [(row[v], tuple(sorted(row[u] for u in vs.members(g.adj[v])))) for v in range(g.n)]
            for g, row in zip(graphs, colors)
        ]
        refined = _renumber(signatures)
        refined_count = len({c for row in refined for c in row})
        if refined_count == count:
            return refined
        colors, count = refined, refined_count


def _renumber(signatures: list[list]) -> list[list[int]]:
    palette = {sig: i for i, sig in enumerate(sorted({s for row in signatures for s in row}))}
    return [[palette[s] for s in row] for row in signatures]


class _IsomorphismSearch:
    def __init__(self, g: Graph, h: Graph, fixed: dict[int, int], node_limit: int):
        self.g = g
        self.h = h
        self.node_limit = node_limit
        self.nodes = 0
        color_g, color_h = refine_colors(
            [g, h], [{v: i for i, v in enumerate(fixed)}, {w: i for i, w in enumerate(fixed.values())}]
        )
        self.color_g = color_g
        self.feasible = sorted(color_g) == sorted(color_h)
        self.class_h: dict[int, int] = {}
        for w, c in enumerate(color_h):
            self.class_h[c] = self.class_h.get(c, 0) | 1 << w
        self.order = self._order(fixed)
        self.image = [-1] * g.n
        self.fixed = fixed

    def _order(self, fixed: dict[int, int]) -> list[int]:
        """Fixed vertices first, then always the vertex with most placed neighbors."""
        class_size: dict[int, int] = {}
        for c in self.color_g:
            class_size[c] = class_size.get(c, 0) + 1
        order = list(fixed)
        placed = vs.from_vertices(order)
        while len(order) < self.g.n:
            best = min(
                (v for v in range(self.g.n) if not placed >> v & 1),
                key=lambda v: (
                    -(self.g.adj[v] & placed).bit_count(),
                    class_size[self.color_g[v]],
                    v,
                ),
            )
            order.append(best)
            placed |= 1 << best
        return order

    def run(self) -> Optional[Permutation]:
        if not self.feasible:
            return None
        if self._extend(0, 0):
            return Permutation(tuple(self.image))
        return None

    def _extend(self, depth: int, used: int) -> bool:
        if depth == self.g.n:
            return True
        u = self.order[depth]
        candidates = self.class_h.get(self.color_g[u], 0) & ~used
        if u in self.fixed:
            candidates &= 1 << self.fixed[u]
        row = self.g.adj[u]
        for placed in self.order[:depth]:
            target = self.h.adj[self.image[placed]]
            if row >> placed & 1:
                candidates &= target
            else:
                candidates &= ~target
            if not candidates:
                return False
        for w in vs.members(candidates):
            self.nodes += 1
            if self.nodes > self.node_limit:
                raise BudgetExceededError("isomorphism search", self.node_limit)
            self.image[u] = w
            if self._extend(depth + 1, used | 1 << w):
                return True
        self.image[u] = -1
        return False


def find_isomorphism(
    g: Graph,
    h: Graph,
    fixed: Optional[dict[int, int]] = None,
    node_limit: Optional[int] = None,
) -> Optional[Permutation]:
    """An edge-preserving bijection g -> h (honoring `fixed`), or None if none exists."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    if g.n == 0:
        return Permutation(())
    search = _IsomorphismSearch(g, h, fixed or {}, node_limit or settings.search_node_limit)
    return search.run()


def are_isomorphic(g: Graph, h: Graph, node_limit: Optional[int] = None) -> bool:
    return find_isomorphism(g, h, node_limit=node_limit) is not None


def automorphism_orbits(g: Graph, node_limit: Optional[int] = None) -> OrbitPartition:
    """Exact orbit partition of Aut(g)."""
    parent = list(range(g.n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    colors = refine_colors([g])[0]
    settled = [False] * g.n
    for v in range(g.n):
        if settled[find(v)]:
            continue
        for w in range(v + 1, g.n):
            if colors[w] != colors[v] or find(w) == find(v):
                continue
            perm = find_isomorphism(g, g, {v: w}, node_limit)
            if perm is not None:
                for x in range(g.n):
                    union(x, perm(x))
        settled[find(v)] = True

    roots: dict[int, int] = {}
    orbit_of = tuple(roots.setdefault(find(v), len(roots)) for v in range(g.n))
    return OrbitPartition(orbit_of)


@dataclass(frozen=True)
class TransitivityResult:
    """Outcome of a vertex-transitivity test; witnesses[v] maps 0 to v."""

    vertex_transitive: bool
    witnesses: dict[int, Permutation] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.vertex_transitive


def is_vertex_transitive(g: Graph, node_limit: Optional[int] = None) -> TransitivityResult:
    if g.n == 0:
        return TransitivityResult(False)
    if not g.is_regular():
        return TransitivityResult(False)
    witnesses: dict[int, Permutation] = {0: Permutation.identity(g.n)}
    for v in range(1, g.n):
        if v in witnesses:
            continue
        perm = find_isomorphism(g, g, {0: v}, node_limit)
        if perm is None:
            logger.debug(f"no automorphism maps 0 to {v}")
            return TransitivityResult(False)
        # compose with known witnesses to cover further targets for free
        for known in list(witnesses.values()):
            composed = perm.compose(known)
            witnesses.setdefault(composed(0), composed)
        witnesses.setdefault(v, perm)
    return TransitivityResult(True, witnesses)
