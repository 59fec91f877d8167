from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from vtchroma.core.exceptions import PartitionError
from vtchroma.models import vertex_set as vs
from vtchroma.models.graph import Graph
from vtchroma.models.vertex_set import VertexSet


@dataclass(frozen=True, slots=True)
class Coloring:
    """colors[v] is the color of v; colors are 0..num_colors-1, all used."""

    colors: tuple[int, ...]

    @classmethod
    def from_assignment(cls, colors: Sequence[int]) -> "Coloring":
        """Renumber colors by first appearance so that they form 0..k-1."""
        relabel: dict[int, int] = {}
        for c in colors:
            relabel.setdefault(c, len(relabel))
        return cls(tuple(relabel[c] for c in colors))

    @property
    def num_colors(self) -> int:
        return max(self.colors, default=-1) + 1

    def is_proper(self, g: Graph) -> bool:
        return len(self.colors) == g.n and all(
            self.colors[u] != self.colors[v] for u, v in g.edges()
        )

    def classes(self) -> list[VertexSet]:
        out = [0] * self.num_colors
        for v, c in enumerate(self.colors):
            out[c] |= 1 << v
        return out

    def is_rainbow(self, mask: VertexSet) -> bool:
        seen = [self.colors[v] for v in vs.members(mask)]
        return len(seen) == len(set(seen))

    def restrict(self, n: int) -> "Coloring":
        return Coloring.from_assignment(self.colors[:n])


@dataclass(frozen=True, slots=True)
class FractionalCertificate:
    """Primal weights on independent sets plus the dual fractional clique.

    `value` equals both the total primal weight and the total dual weight.
    """

    weights: tuple[tuple[VertexSet, Fraction], ...]
    dual: tuple[Fraction, ...]
    value: Fraction

    def primal_value(self) -> Fraction:
        return sum((w for _, w in self.weights), Fraction(0))

    def dual_value(self) -> Fraction:
        return sum(self.dual, Fraction(0))

    def verify(self, g: Graph) -> bool:
        cover = [Fraction(0)] * g.n
        for mask, w in self.weights:
            if w < 0 or not g.is_independent(mask):
                return False
            for v in vs.members(mask):
                cover[v] += w
        if any(c < 1 for c in cover):
            return False
        if any(y < 0 for y in self.dual):
            return False
        for mask, _ in self.weights:
            if sum((self.dual[v] for v in vs.members(mask)), Fraction(0)) > 1:
                return False
        return self.primal_value() == self.value == self.dual_value()


@dataclass(frozen=True, slots=True)
class VertexPartition:
    """Disjoint, covering parts of 0..n-1."""

    n: int
    parts: tuple[VertexSet, ...]

    def __post_init__(self):
        seen = 0
        for part in self.parts:
            if part == 0:
                raise PartitionError("partition contains an empty part")
            if seen & part:
                raise PartitionError("partition parts overlap")
            seen |= part
        if seen != vs.full(self.n):
            raise PartitionError("partition does not cover every vertex")

    @classmethod
    def from_lists(cls, n: int, parts: Iterable[Iterable[int]]) -> "VertexPartition":
        return cls(n, tuple(vs.from_vertices(p) for p in parts))

    @property
    def sizes(self) -> list[int]:
        return [p.bit_count() for p in self.parts]

    def __len__(self) -> int:
        return len(self.parts)

    def part_of(self) -> list[int]:
        owner = [0] * self.n
        for i, part in enumerate(self.parts):
            for v in vs.members(part):
                owner[v] = i
        return owner


@dataclass(frozen=True, slots=True)
class StrongColoring:
    """A proper r-coloring of `graph` (already padded) using every color once per part."""

    graph: Graph
    partition: VertexPartition
    coloring: Coloring
    r: int
    original_n: int

    def verify(self) -> bool:
        if not self.coloring.is_proper(self.graph):
            return False
        return all(
            sorted(self.coloring.colors[v] for v in vs.members(part)) == list(range(self.r))
            for part in self.partition.parts
        )

    def restrict(self) -> Coloring:
        """The coloring of the unpadded vertices, renumbered."""
        return self.coloring.restrict(self.original_n)
