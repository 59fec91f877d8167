from dataclasses import dataclass

from vtchroma.core.exceptions import GraphValidationError
from vtchroma.models import vertex_set as vs
from vtchroma.models.graph import Graph
from vtchroma.models.vertex_set import VertexSet


@dataclass(frozen=True, slots=True)
class Permutation:
    """Bijection on 0..n-1; image[v] is where v goes."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise GraphValidationError("permutation image is not a bijection")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, v: int) -> int:
        return self.image[v]

    def map_set(self, mask: VertexSet) -> VertexSet:
        out = 0
        for v in vs.members(mask):
            out |= 1 << self.image[v]
        return out

    def apply(self, g: Graph) -> Graph:
        """Relabel g so that vertex v becomes image[v]."""
        adj = [0] * g.n
        for v in range(g.n):
            adj[self.image[v]] = self.map_set(g.adj[v])
        return Graph(g.n, tuple(adj))

    def is_automorphism_of(self, g: Graph) -> bool:
        return self.n == g.n and all(
            self.map_set(g.adj[v]) == g.adj[self.image[v]] for v in range(g.n)
        )

    def is_isomorphism(self, g: Graph, h: Graph) -> bool:
        return self.n == g.n == h.n and all(
            self.map_set(g.adj[v]) == h.adj[self.image[v]] for v in range(g.n)
        )

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other."""
        return Permutation(tuple(self.image[other.image[v]] for v in range(self.n)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for v, w in enumerate(self.image):
            inv[w] = v
        return Permutation(tuple(inv))


@dataclass(frozen=True, slots=True)
class OrbitPartition:
    """Orbits of the full automorphism group; orbit ids are numbered by first vertex."""

    orbit_of: tuple[int, ...]

    @property
    def orbit_count(self) -> int:
        return len(set(self.orbit_of))

    def orbits(self) -> list[VertexSet]:
        out: dict[int, VertexSet] = {}
        for v, o in enumerate(self.orbit_of):
            out[o] = out.get(o, 0) | 1 << v
        return [out[o] for o in sorted(out)]

    def same_orbit(self, u: int, v: int) -> bool:
        return self.orbit_of[u] == self.orbit_of[v]
