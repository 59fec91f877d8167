from dataclasses import dataclass
from typing import Iterator

from vtchroma.core.config import settings
from vtchroma.core.exceptions import CapacityExceededError, GraphValidationError
from vtchroma.models import vertex_set as vs
from vtchroma.models.vertex_set import VertexSet


def check_capacity(n: int, capacity: int | None = None) -> None:
    limit = capacity or settings.GRAPH_CAPACITY
    if n < 0:
        raise GraphValidationError(f"vertex count must be non-negative, got {n}")
    if n > limit:
        raise CapacityExceededError(n, limit)


@dataclass(frozen=True, slots=True)
class Graph:
    """Undirected simple graph; adj[v] is the neighborhood bitmask of v.

    Instances are immutable. Constructors in `vtchroma.algorithms.generators`
    build them and run `validate()`.
    """

    n: int
    adj: tuple[VertexSet, ...]

    def validate(self) -> "Graph":
        if len(self.adj) != self.n:
            raise GraphValidationError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        universe = vs.full(self.n)
        for v, row in enumerate(self.adj):
            if row & ~universe:
                raise GraphValidationError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphValidationError(f"loop at vertex {v}")
            for u in vs.members(row):
                if not self.adj[u] >> v & 1:
                    raise GraphValidationError(f"edge {v}-{u} is not symmetric")
        return self

    @property
    def vertices(self) -> VertexSet:
        return vs.full(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return vs.to_list(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def is_regular(self) -> bool:
        return self.max_degree == self.min_degree

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.adj):
            for v in vs.members(row >> (u + 1)):
                yield u, u + 1 + v

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def is_clique(self, mask: VertexSet) -> bool:
        return all(mask & ~(1 << v) & ~self.adj[v] == 0 for v in vs.members(mask))

    def is_independent(self, mask: VertexSet) -> bool:
        return all(self.adj[v] & mask == 0 for v in vs.members(mask))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return self.component_of(0) == self.vertices

    def component_of(self, v: int) -> VertexSet:
        seen = 1 << v
        frontier = seen
        while frontier:
            reach = 0
            for u in vs.members(frontier):
                reach |= self.adj[u]
            frontier = reach & ~seen
            seen |= frontier
        return seen


@dataclass(frozen=True, slots=True)
class Multigraph:
    """Loopless multigraph as an edge list; parallel edges repeat a pair."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def validate(self) -> "Multigraph":
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphValidationError(f"edge ({u},{v}) out of range for n={self.n}")
            if u == v:
                raise GraphValidationError(f"loop at vertex {u}")
        return self
