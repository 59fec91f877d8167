import itertools
import random
from pathlib import Path
from typing import Callable, Iterable, Optional

from vtchroma.algorithms.cliques import (
    build_clique_graph,
    cek_classify,
    clique_number,
    hajnal_check,
    kostochka_common_vertex,
    maximum_cliques,
    two_thirds_margin,
    vt_classify,
)
from vtchroma.algorithms.coloring import independence_number
from vtchroma.algorithms.generators import circulant, connected_circulant_generators, from_edges, random_graph
from vtchroma.algorithms.graph6 import read_graph6_file, write_graph6
from vtchroma.algorithms.symmetry import is_vertex_transitive
from vtchroma.algorithms.transversals import independent_transversal
from vtchroma.core.exceptions import BudgetExceededError, LemmaFalsifiedError
from vtchroma.core.logging import logger
from vtchroma.enums import ClusterKind, LemmaSuite
from vtchroma.models.coloring import VertexPartition
from vtchroma.models.graph import Graph
from vtchroma.schemas.reports import LemmaSuiteResult
from vtchroma.schemas.runs import Budget

# outcome of one case: True passes, False fails, None is outside the hypothesis
Outcome = Optional[bool]


class LemmaController:
    """Property suites for the proved structural statements over a graph corpus."""

    def __init__(self, budget: Optional[Budget] = None, seed: int = 0):
        self.budget = budget or Budget()
        self.seed = seed

    # ─── CORPORA ────────────────────────────────────────────
    def random_corpus(self, count: int, max_n: int) -> list[Graph]:
        rng = random.Random(self.seed)
        corpus = []
        for _ in range(count):
            n = rng.randint(1, max_n)
            corpus.append(random_graph(n, rng.choice((0.3, 0.5, 0.7, 0.85)), rng))
        return corpus

    @staticmethod
    def circulant_corpus(max_n: int) -> list[Graph]:
        """Connected circulants up to max_n; the vertex-transitive part of every corpus."""
        return [circulant(n, gens) for n in range(3, max_n + 1) for gens in connected_circulant_generators(n)]

    @staticmethod
    def file_corpus(path: Path) -> list[Graph]:
        return [g for _, g in read_graph6_file(path)]

    # ─── SUITES ─────────────────────────────────────────────
    def hajnal(self, g: Graph) -> Outcome:
        q = maximum_cliques(g, self.budget.clique_limit)
        omega = q.cliques[0].bit_count()
        subsets = itertools.chain.from_iterable(
            itertools.combinations(range(len(q)), size) for size in range(1, len(q) + 1)
        )
        return all(
            hajnal_check(g, q.subset(s), omega).holds
            for s in itertools.islice(subsets, self.budget.hajnal_subset_cap)
        )

    def kostochka(self, g: Graph) -> Outcome:
        omega = clique_number(g)
        if two_thirds_margin(omega, g.max_degree) <= 0:
            return None
        for component in build_clique_graph(maximum_cliques(g)).component_collections():
            try:
                kostochka_common_vertex(g, component, omega)
            except LemmaFalsifiedError:
                return False
        return True

    def cek(self, g: Graph) -> Outcome:
        omega = clique_number(g)
        margin = two_thirds_margin(omega, g.max_degree)
        if margin < 0:
            return None
        for component in build_clique_graph(maximum_cliques(g)).component_collections():
            try:
                shape = cek_classify(g, component, omega)
            except LemmaFalsifiedError:
                return False
            if margin > 0 and shape.kind is not ClusterKind.STAR_COMPONENTS:
                return False
        return True

    def cluster_dichotomy(self, g: Graph) -> Outcome:
        if not self._in_vt_regime(g):
            return None
        try:
            shape = vt_classify(g, verified_transitive=True)
        except LemmaFalsifiedError:
            return False
        return shape.kind in (ClusterKind.EDGELESS, ClusterKind.CYCLE_BLOWUP)

    def lemma7(self, g: Graph) -> Outcome:
        if g.n == 0 or not is_vertex_transitive(g, self.budget.node_limit):
            return None
        omega = clique_number(g)
        margin = two_thirds_margin(omega, g.max_degree)
        if margin < 0:
            return None
        alpha = independence_number(g)
        return alpha == g.n // omega and (margin == 0 or g.n % omega == 0)

    def fajtlowicz(self, g: Graph) -> Outcome:
        if g.n == 0:
            return None
        alpha = independence_number(g)
        return alpha * (clique_number(g) + g.max_degree + 1) >= 2 * g.n

    def _in_vt_regime(self, g: Graph) -> bool:
        return (
            g.n > 0
            and g.is_connected()
            and bool(is_vertex_transitive(g, self.budget.node_limit))
            and two_thirds_margin(clique_number(g), g.max_degree) >= 0
        )

    def run_suite(self, suite: LemmaSuite, corpus: Iterable[Graph], check: Callable[[Graph], Outcome]) -> LemmaSuiteResult:
        result = LemmaSuiteResult(suite=suite)
        witnesses = set()
        for g in corpus:
            try:
                outcome = check(g)
            except BudgetExceededError as exc:
                logger.warning(f"{suite.value}: {exc.message}")
                result.undecided += 1
                continue
            if outcome is None:
                result.skipped += 1
                continue
            result.cases += 1
            if not outcome:
                result.failures += 1
                witnesses.add(write_graph6(g))
                logger.error(f"{suite.value} failed on {write_graph6(g)}")
        result.witnesses = sorted(witnesses)
        return result

    # ─── TRANSVERSALS ───────────────────────────────────────
    def haxell_instance(self, rng: random.Random, max_n: int = 20) -> tuple[Graph, VertexPartition]:
        """Random graph with parts of size >= 2 * Delta."""
        part_size = rng.randint(2, 6)
        parts = rng.randint(1, max_n // part_size)
        n = part_size * parts
        cap = part_size // 2
        degree = [0] * n
        edges = []
        pairs = list(itertools.combinations(range(n), 2))
        rng.shuffle(pairs)
        for u, v in pairs:
            if degree[u] < cap and degree[v] < cap and rng.random() < 0.6:
                edges.append((u, v))
                degree[u] += 1
                degree[v] += 1
        order = list(range(n))
        rng.shuffle(order)
        blocks = [order[i * part_size:(i + 1) * part_size] for i in range(parts)]
        return from_edges(n, edges), VertexPartition.from_lists(n, blocks)

    def haxell(self, instances: int) -> LemmaSuiteResult:
        rng = random.Random(self.seed)
        result = LemmaSuiteResult(suite=LemmaSuite.HAXELL)
        for _ in range(instances):
            h, p = self.haxell_instance(rng)
            assert min(p.sizes) >= 2 * h.max_degree
            result.cases += 1
            if independent_transversal(h, p, self.budget.node_limit) is None:
                result.failures += 1
                result.witnesses.append(write_graph6(h))
        return result

    def run(
        self,
        suites: Iterable[LemmaSuite],
        corpus: list[Graph],
        haxell_instances: int = 500,
    ) -> list[LemmaSuiteResult]:
        checks: dict[LemmaSuite, Callable[[Graph], Outcome]] = {
            LemmaSuite.HAJNAL: self.hajnal,
            LemmaSuite.KOSTOCHKA: self.kostochka,
            LemmaSuite.CEK: self.cek,
            LemmaSuite.CLUSTER_DICHOTOMY: self.cluster_dichotomy,
            LemmaSuite.LEMMA7: self.lemma7,
            LemmaSuite.FAJTLOWICZ: self.fajtlowicz,
        }
        results = []
        for suite in suites:
            if suite is LemmaSuite.HAXELL:
                results.append(self.haxell(haxell_instances))
            else:
                results.append(self.run_suite(suite, [g for g in corpus if g.n], checks[suite]))
            logger.info(f"{suite.value}: {results[-1].cases} cases, {results[-1].failures} failures")
        return results
