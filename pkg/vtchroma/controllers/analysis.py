from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from vtchroma.algorithms.cliques import classify_graph, max_clique
from vtchroma.algorithms.coloring import ChromaticResult, chromatic_number, maximum_independent_set
from vtchroma.algorithms.fractional import fractional_chromatic
from vtchroma.algorithms.graph6 import write_graph6
from vtchroma.algorithms.symmetry import TransitivityResult, is_vertex_transitive
from vtchroma.core.exceptions import BudgetExceededError, LemmaFalsifiedError
from vtchroma.core.logging import logger
from vtchroma.models.cliques import ClusterClassification
from vtchroma.models.coloring import FractionalCertificate
from vtchroma.models.graph import Graph
from vtchroma.models.vertex_set import VertexSet
from vtchroma.schemas.reports import GraphProfile
from vtchroma.schemas.runs import Budget


@dataclass
class GraphFacts:
    """Everything computed about one graph; None means undecided within the budget."""

    graph: Graph
    graph6: str
    clique: Optional[VertexSet] = None
    independent: Optional[VertexSet] = None
    transitivity: Optional[TransitivityResult] = None
    chromatic: Optional[ChromaticResult] = None
    chi_f: Optional[Fraction] = None
    chi_f_lp: Optional[Fraction] = None
    certificate: Optional[FractionalCertificate] = None
    classification: Optional[ClusterClassification] = None
    classification_error: Optional[LemmaFalsifiedError] = None
    undecided: list[str] = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def delta(self) -> int:
        return self.graph.max_degree

    @property
    def omega(self) -> Optional[int]:
        return None if self.clique is None else self.clique.bit_count()

    @property
    def alpha(self) -> Optional[int]:
        return None if self.independent is None else self.independent.bit_count()

    @property
    def chi(self) -> Optional[int]:
        return None if self.chromatic is None else self.chromatic.chi

    @property
    def vertex_transitive(self) -> Optional[bool]:
        return None if self.transitivity is None else self.transitivity.vertex_transitive

    def to_profile(self) -> GraphProfile:
        return GraphProfile(
            graph6=self.graph6,
            n=self.n,
            delta=self.delta,
            omega=self.omega,
            alpha=self.alpha,
            chi=self.chi,
            chi_f=self.chi_f,
            vertex_transitive=self.vertex_transitive,
            cluster_class=self._cluster_label(),
        )

    def _cluster_label(self) -> Optional[str]:
        if self.classification_error is not None:
            return "falsified"
        return None if self.classification is None else self.classification.label


class AnalysisController:
    """Computes GraphFacts step by step; a budget overrun leaves that step undecided."""

    def __init__(self, budget: Optional[Budget] = None):
        self.budget = budget or Budget()

    def analyze(self, g: Graph) -> GraphFacts:
        facts = GraphFacts(graph=g, graph6=write_graph6(g))
        if g.n == 0:
            return facts
        limit = self.budget.node_limit

        facts.clique = self._attempt(facts, "omega", lambda: max_clique(g, limit))
        facts.independent = self._attempt(facts, "alpha", lambda: maximum_independent_set(g, limit))
        facts.transitivity = self._attempt(facts, "vertex_transitive", lambda: is_vertex_transitive(g, limit))
        if facts.clique is not None and facts.independent is not None:
            facts.chromatic = self._attempt(
                facts,
                "chi",
                lambda: chromatic_number(g, limit, clique=facts.clique, alpha=facts.alpha),
            )
        self._fractional(facts)
        if facts.vertex_transitive is not None and facts.omega is not None:
            try:
                facts.classification = self._attempt(
                    facts,
                    "cluster_class",
                    lambda: classify_graph(g, facts.vertex_transitive, facts.omega),
                )
            except LemmaFalsifiedError as exc:
                logger.error(f"cluster classification falsified: {exc.message}")
                facts.classification_error = exc
        return facts

    def profile(self, g: Graph) -> GraphProfile:
        return self.analyze(g).to_profile()

    def _fractional(self, facts: GraphFacts) -> None:
        """n/alpha for vertex-transitive graphs, cross-checked by the LP on small ones."""
        g = facts.graph
        vt = facts.vertex_transitive
        if vt and facts.alpha is not None:
            facts.chi_f = Fraction(g.n, facts.alpha)
            if g.n > self.budget.lp_max_vertices:
                return
        elif vt is None:
            return
        solved = self._attempt(facts, "chi_f", lambda: fractional_chromatic(g, self.budget.clique_limit))
        if solved is None:
            return
        facts.chi_f_lp, facts.certificate = solved
        if facts.chi_f is None:
            facts.chi_f = facts.chi_f_lp

    @staticmethod
    def _attempt(facts: GraphFacts, name: str, compute):
        try:
            return compute()
        except BudgetExceededError as exc:
            logger.warning(f"{facts.graph6}: {name} undecided ({exc.message})")
            facts.undecided.append(name)
            return None
