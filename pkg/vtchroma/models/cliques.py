from dataclasses import dataclass, field
from functools import reduce
from typing import Optional

from vtchroma.enums import ClusterKind
from vtchroma.models import vertex_set as vs
from vtchroma.models.graph import Graph
from vtchroma.models.permutation import Permutation
from vtchroma.models.vertex_set import VertexSet


@dataclass(frozen=True, slots=True)
class CliqueCollection:
    """Cliques of `host`, stored sorted by bitmask.

    `is_all_maximum` marks the complete, duplicate-free list of all maximum cliques.
    """

    host: Graph
    cliques: tuple[VertexSet, ...]
    is_all_maximum: bool = False

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    @property
    def union(self) -> VertexSet:
        return reduce(lambda a, b: a | b, self.cliques, 0)

    @property
    def intersection(self) -> VertexSet:
        if not self.cliques:
            return 0
        return reduce(lambda a, b: a & b, self.cliques)

    @property
    def sizes(self) -> list[int]:
        return [c.bit_count() for c in self.cliques]

    def subset(self, indices) -> "CliqueCollection":
        return CliqueCollection(self.host, tuple(self.cliques[i] for i in indices))

    def pairwise_disjoint(self) -> bool:
        seen = 0
        for c in self.cliques:
            if seen & c:
                return False
            seen |= c
        return True

    def covers(self) -> bool:
        return self.union == self.host.vertices


@dataclass(frozen=True, slots=True)
class CliqueGraph:
    """Intersection graph X_Q: vertices are clique indices of `collection`."""

    collection: CliqueCollection
    adj: tuple[VertexSet, ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.adj)

    @property
    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def is_edgeless(self) -> bool:
        return not any(self.adj)

    def neighbors(self, i: int) -> list[int]:
        return vs.to_list(self.adj[i])

    def component_collections(self) -> list[CliqueCollection]:
        return [self.collection.subset(comp) for comp in self.components]


@dataclass(frozen=True)
class ClusterClassification:
    """Shape of the maximum-clique clustering.

    `parts` holds the tiles: the disjoint cliques (EDGELESS) or the blow-up blocks
    in cycle order (CYCLE_BLOWUP). `isomorphism` maps the graph onto
    blow_up(C_m, omega/2) when one was verified.
    """

    kind: ClusterKind
    cycle_length: Optional[int] = None
    part_size: Optional[int] = None
    parts: tuple[VertexSet, ...] = ()
    common_sets: tuple[VertexSet, ...] = ()
    reason: Optional[str] = None
    details: dict = field(default_factory=dict)
    isomorphism: Optional[Permutation] = None

    @property
    def label(self) -> str:
        if self.kind is ClusterKind.CYCLE_BLOWUP:
            return f"{self.kind.value}({self.cycle_length},{self.part_size})"
        if self.kind is ClusterKind.OTHER and self.reason:
            return f"{self.kind.value}({self.reason})"
        return self.kind.value
