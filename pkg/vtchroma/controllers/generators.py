from dataclasses import dataclass, field

from vtchroma.algorithms.generators import (
    blow_up,
    catlin,
    catlin_multigraph,
    circulant,
    connected_circulant_generators,
    cycle,
    hajos_graph,
    kneser,
    line_graph,
)
from vtchroma.algorithms.graph6 import read_graph6_file
from vtchroma.algorithms.symmetry import are_isomorphic
from vtchroma.core.logging import logger
from vtchroma.enums import FamilyKind
from vtchroma.models.graph import Graph
from vtchroma.schemas.runs import FamilySpec


@dataclass(frozen=True)
class FamilyMember:
    graph: Graph
    label: str
    params: dict = field(default_factory=dict)


class GeneratorController:
    """Deterministic enumeration of the graph families."""

    def members(self, spec: FamilySpec) -> list[FamilyMember]:
        builders = {
            FamilyKind.CIRCULANT: self._circulants,
            FamilyKind.CATLIN: self._catlin,
            FamilyKind.KNESER: self._kneser,
            FamilyKind.BLOWUP: self._blowups,
            FamilyKind.HAJOS: self._hajos,
            FamilyKind.FILE: self._file,
        }
        out = builders[spec.kind](spec)
        logger.info(f"family {spec.label}: {len(out)} graphs")
        return out

    def _circulants(self, spec: FamilySpec) -> list[FamilyMember]:
        if spec.gens:
            return [self.circulant(spec.n_max, spec.gens)]
        out: list[FamilyMember] = []
        for n in range(max(spec.n_min, 1), spec.n_max + 1):
            found = [self.circulant(n, gens) for gens in self._generator_sets(n)]
            out.extend(self._distinct(found) if spec.distinct else found)
        return out

    @staticmethod
    def _generator_sets(n: int) -> list[tuple[int, ...]]:
        if n == 1:
            return [()]
        return connected_circulant_generators(n)

    @staticmethod
    def circulant(n: int, gens) -> FamilyMember:
        gens = tuple(sorted(gens))
        return FamilyMember(circulant(n, gens), f"circulant({n},{list(gens)})", {"n": n, "gens": list(gens)})

    @staticmethod
    def _distinct(members: list[FamilyMember]) -> list[FamilyMember]:
        """Drop members isomorphic to an earlier one; multiplier classes can still repeat."""
        kept: list[FamilyMember] = []
        for member in members:
            g = member.graph
            if not any(
                k.graph.edge_count == g.edge_count and are_isomorphic(k.graph, g) for k in kept
            ):
                kept.append(member)
        return kept

    def _catlin(self, spec: FamilySpec) -> list[FamilyMember]:
        return [
            FamilyMember(catlin(t, k), f"catlin({t},{k})", {"t": t, "k": k})
            for t in spec.t_values
            for k in spec.k_values
        ]

    @staticmethod
    def line(t: int, k: int) -> FamilyMember:
        return FamilyMember(line_graph(catlin_multigraph(t, k)), f"line({k}C_{2 * t + 1})", {"t": t, "k": k})

    def _kneser(self, spec: FamilySpec) -> list[FamilyMember]:
        return [FamilyMember(kneser(n, k), f"kneser({n},{k})", {"n": n, "k": k}) for n, k in spec.kneser_pairs]

    def _blowups(self, spec: FamilySpec) -> list[FamilyMember]:
        return [
            FamilyMember(blow_up(cycle(c), m), f"blowup(C_{c},{m})", {"cycle": c, "size": m})
            for c in spec.cycles
            for m in spec.sizes
        ]

    def _hajos(self, spec: FamilySpec) -> list[FamilyMember]:
        return [FamilyMember(hajos_graph(t), f"hajos({t})", {"t": t}) for t in spec.t_values]

    def _file(self, spec: FamilySpec) -> list[FamilyMember]:
        return [
            FamilyMember(g, f"{spec.path.name}:{number}", {"line": number})
            for number, g in read_graph6_file(spec.path)
        ]
