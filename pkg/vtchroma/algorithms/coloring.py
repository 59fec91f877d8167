"""Exact independence and chromatic numbers.

The chromatic search is DSATUR branch and bound: the next vertex has the most
distinct neighbor colors, then the most uncolored neighbors, then the lowest
index. A maximum clique is precolored 0..omega-1 before the search starts.
"""

from dataclasses import dataclass
from typing import Optional

from vtchroma.algorithms.cliques import max_clique
from vtchroma.algorithms.generators import complement
from vtchroma.core.config import settings
from vtchroma.core.exceptions import BudgetExceededError, PreconditionError
from vtchroma.core.logging import logger
from vtchroma.models import vertex_set as vs
from vtchroma.models.coloring import Coloring
from vtchroma.models.graph import Graph
from vtchroma.models.vertex_set import VertexSet


def maximum_independent_set(g: Graph, node_limit: Optional[int] = None) -> VertexSet:
    return max_clique(complement(g), node_limit)


def independence_number(g: Graph, node_limit: Optional[int] = None) -> int:
    return maximum_independent_set(g, node_limit).bit_count()


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


class _DsaturSearch:
    """Finds a proper coloring with fewer than `upper` colors, stopping once `target` is reached."""

    def __init__(self, g: Graph, seed: VertexSet, upper: int, target: int, node_limit: int):
        self.g = g
        self.best = upper
        self.target = target
        self.node_limit = node_limit
        self.nodes = 0
        self.colors = [-1] * g.n
        self.best_colors: Optional[list[int]] = None
        self.counts = [[0] * g.n for _ in range(g.n)]
        self.saturation = [0] * g.n
        self.uncolored = g.vertices
        for c, v in enumerate(vs.members(seed)):
            self._assign(v, c)

    def _assign(self, v: int, c: int) -> None:
        self.colors[v] = c
        self.uncolored &= ~(1 << v)
        for u in vs.members(self.g.adj[v]):
            if self.counts[u][c] == 0:
                self.saturation[u] += 1
            self.counts[u][c] += 1

    def _unassign(self, v: int) -> None:
        c = self.colors[v]
        self.colors[v] = -1
        self.uncolored |= 1 << v
        for u in vs.members(self.g.adj[v]):
            self.counts[u][c] -= 1
            if self.counts[u][c] == 0:
                self.saturation[u] -= 1

    def _select(self) -> int:
        return max(
            vs.members(self.uncolored),
            key=lambda v: (self.saturation[v], (self.g.adj[v] & self.uncolored).bit_count(), -v),
        )

    def run(self) -> Optional[list[int]]:
        used = max(self.colors, default=-1) + 1
        self._expand(used)
        return self.best_colors

    def _expand(self, used: int) -> None:
        if not self.uncolored:
            if used < self.best:
                self.best = used
                self.best_colors = list(self.colors)
                logger.debug(f"coloring with {used} colors after {self.nodes} nodes")
            return
        v = self._select()
        row = self.counts[v]
        for c in range(used + 1):
            # best shrinks during the loop
            if max(used, c + 1) >= self.best:
                break
            if row[c]:
                continue
            self.nodes += 1
            if self.nodes > self.node_limit:
                raise BudgetExceededError("coloring search", self.node_limit)
            self._assign(v, c)
            self._expand(max(used, c + 1))
            self._unassign(v)
            if self.best <= self.target:
                return


def greedy_dsatur(g: Graph, seed: VertexSet = 0) -> list[int]:
    """Single DSATUR pass, smallest free color each time."""
    search = _DsaturSearch(g, seed, g.n + 1, 0, 1)
    while search.uncolored:
        v = search._select()
        search._assign(v, search.counts[v].index(0))
    return search.colors


def find_k_coloring(
    g: Graph, k: int, seed: VertexSet = 0, node_limit: Optional[int] = None
) -> Optional[Coloring]:
    """A proper coloring with at most k colors, or None after an exhaustive refusal.

    `seed` must be a clique; its members get colors 0, 1, ... in increasing vertex order.
    """
    if seed.bit_count() > k:
        return None
    if g.n == 0:
        return Coloring(())
    search = _DsaturSearch(g, seed, k + 1, k, node_limit or settings.search_node_limit)
    colors = search.run()
    return Coloring(tuple(colors)) if colors is not None else None


@dataclass(frozen=True, slots=True)
class ChromaticResult:
    chi: int
    coloring: Coloring
    lower_bound: int
    lower_bound_source: str
    nodes: int


def chromatic_number(
    g: Graph,
    node_limit: Optional[int] = None,
    clique: Optional[VertexSet] = None,
    alpha: Optional[int] = None,
) -> ChromaticResult:
    """Exact chi(g) with a witness; lower bound max{omega, ceil(n / alpha)}."""
    if g.n == 0:
        raise PreconditionError("chromatic number of the empty graph")
    limit = node_limit or settings.search_node_limit
    clique = clique if clique is not None else max_clique(g, limit)
    alpha = alpha or independence_number(g, limit)
    omega = clique.bit_count()
    ratio = ceil_div(g.n, alpha)
    lower, source = (omega, "clique") if omega >= ratio else (ratio, "independence")

    greedy = greedy_dsatur(g, clique)
    upper = max(greedy) + 1
    if upper == lower:
        return ChromaticResult(upper, Coloring.from_assignment(greedy), lower, source, 0)

    search = _DsaturSearch(g, clique, upper, lower, limit)
    colors = search.run()
    if colors is None:
        colors = greedy
    coloring = Coloring.from_assignment(colors)
    logger.debug(f"chi={coloring.num_colors} (lower {lower}, greedy {upper}) in {search.nodes} nodes")
    return ChromaticResult(coloring.num_colors, coloring, lower, source, search.nodes)
