import itertools
from fractions import Fraction
from typing import Callable, Optional

from vtchroma.algorithms.cliques import (
    build_clique_graph,
    clique_number,
    hajnal_check,
    kostochka_common_vertex,
    maximum_cliques,
    two_thirds_margin,
)
from vtchroma.algorithms.coloring import ceil_div, chromatic_number
from vtchroma.algorithms.generators import catlin, induced_subgraph, line_graph
from vtchroma.algorithms.reductions import main_conjecture_bound, main_conjecture_reduction
from vtchroma.algorithms.transversals import padded_order, strong_chromatic_number_exhaustive
from vtchroma.controllers.analysis import AnalysisController, GraphFacts
from vtchroma.core.exceptions import (
    BudgetExceededError,
    LemmaFalsifiedError,
    NotVertexTransitiveError,
    PreconditionError,
    StrongColoringInfeasibleError,
)
from vtchroma.core.logging import logger
from vtchroma.enums import CheckName, ClusterKind, Verdict
from vtchroma.models import vertex_set as vs
from vtchroma.models.graph import Multigraph
from vtchroma.schemas.reports import AnalysisRecord, CheckResult
from vtchroma.schemas.runs import Budget


def verdict_for(holds: Optional[bool], in_hypothesis: bool) -> Verdict:
    if holds is None:
        return Verdict.UNDECIDED
    if not in_hypothesis:
        return Verdict.OUT_OF_HYPOTHESIS
    return Verdict.HOLDS if holds else Verdict.VIOLATED


def compare(
    name: CheckName,
    value: Optional[Fraction | int],
    bound: Optional[Fraction | int],
    in_hypothesis: bool,
    proved: bool,
    at_least: bool = False,
    notes: Optional[list[str]] = None,
) -> CheckResult:
    """value <= bound (or value >= bound when at_least), compared exactly."""
    holds = tight = None
    if value is not None and bound is not None:
        holds = value >= bound if at_least else value <= bound
        tight = value == bound
    return CheckResult(
        name=name,
        value=None if value is None else Fraction(value),
        bound=None if bound is None else Fraction(bound),
        holds=holds,
        tight=tight,
        in_hypothesis=in_hypothesis,
        proved=proved,
        verdict=verdict_for(holds, in_hypothesis),
        notes=notes or [],
    )


def undecided(name: CheckName, proved: bool, reason: str) -> CheckResult:
    return CheckResult(name=name, proved=proved, verdict=Verdict.UNDECIDED, notes=[reason])


class ConjectureController:
    """Every bound and structural statement as a per-graph CheckResult."""

    def __init__(self, budget: Optional[Budget] = None):
        self.budget = budget or Budget()
        self.analysis = AnalysisController(self.budget)

    # ─── COLORING BOUNDS ────────────────────────────────────
    def check_main_conjecture(self, f: GraphFacts) -> CheckResult:
        bound = None if f.omega is None else main_conjecture_bound(f.omega, f.delta)
        notes = [] if f.vertex_transitive else ["not vertex-transitive"]
        return compare(CheckName.MAIN_CONJECTURE, f.chi, bound, bool(f.vertex_transitive), False, notes=notes)

    def check_borodin_kostochka(self, f: GraphFacts) -> CheckResult:
        """chi <= Delta - 1 for vertex-transitive graphs with Delta >= 13 and no K_Delta."""
        no_big_clique = f.omega is not None and f.omega < f.delta
        notes = [
            f"delta>=13: {f.delta >= 13}",
            f"K_delta-free: {no_big_clique}",
            f"vertex_transitive: {f.vertex_transitive}",
        ]
        in_hypothesis = bool(f.vertex_transitive) and f.delta >= 13 and no_big_clique
        return compare(CheckName.BORODIN_KOSTOCHKA, f.chi, f.delta - 1, in_hypothesis, True, notes=notes)

    def check_borodin_kostochka_conjecture(self, f: GraphFacts) -> CheckResult:
        bound = None if f.omega is None else max(f.omega, f.delta - 1)
        return compare(CheckName.BORODIN_KOSTOCHKA_CONJECTURE, f.chi, bound, f.delta >= 9, False)

    def check_big_cliques(self, f: GraphFacts) -> CheckResult:
        """Delta >= 13 and no K_{Delta-3} gives chi <= Delta - 1, for every graph."""
        in_hypothesis = f.delta >= 13 and f.omega is not None and f.omega < f.delta - 3
        return compare(CheckName.BIG_CLIQUES, f.chi, f.delta - 1, in_hypothesis, True)

    def check_dense_neighborhoods(self, f: GraphFacts) -> CheckResult:
        """Delta >= 9, no K_Delta, every vertex in a clique of size >= 2/3 Delta + 2 gives chi <= Delta - 1."""
        g = f.graph
        if f.omega is None:
            return undecided(CheckName.DENSE_NEIGHBORHOODS, True, "omega undecided")
        in_hypothesis = f.delta >= 9 and f.omega < f.delta
        if in_hypothesis:
            if f.vertex_transitive:
                in_hypothesis = 3 * f.omega >= 2 * f.delta + 6
            else:
                in_hypothesis = all(
                    3 * (self._local_clique(f, v)) >= 2 * f.delta + 6 for v in range(g.n)
                )
        return compare(CheckName.DENSE_NEIGHBORHOODS, f.chi, f.delta - 1, in_hypothesis, True)

    @staticmethod
    def _local_clique(f: GraphFacts, v: int) -> int:
        if not f.graph.adj[v]:
            return 1
        neighborhood, _ = induced_subgraph(f.graph, f.graph.adj[v])
        return clique_number(neighborhood) + 1

    def check_reed(self, f: GraphFacts) -> CheckResult:
        bound = None if f.omega is None else ceil_div(f.omega + f.delta + 1, 2)
        return compare(CheckName.REED, f.chi, bound, True, False)

    # ─── FRACTIONAL AND INDEPENDENCE ────────────────────────
    def check_fractional_theorem(self, f: GraphFacts) -> CheckResult:
        """chi_f <= max{omega, 5/6 (Delta + 1)}; vertex-transitive graphs only."""
        if f.vertex_transitive is None:
            return undecided(CheckName.FRACTIONAL_THEOREM, True, "vertex-transitivity undecided")
        if not f.vertex_transitive:
            raise NotVertexTransitiveError()
        bound = None if f.omega is None else max(Fraction(f.omega), Fraction(5 * (f.delta + 1), 6))
        return compare(CheckName.FRACTIONAL_THEOREM, f.chi_f, bound, True, True)

    def check_fractional_consistency(self, f: GraphFacts) -> CheckResult:
        """The LP optimum equals n / alpha on vertex-transitive graphs."""
        name = CheckName.FRACTIONAL_CONSISTENCY
        if not f.vertex_transitive:
            return self._out_of_hypothesis(name, True, "not vertex-transitive")
        if f.alpha is None:
            return undecided(name, True, "alpha undecided")
        if f.chi_f_lp is None:
            return self._out_of_hypothesis(name, True, f"LP skipped above {self.budget.lp_max_vertices} vertices")
        # chi_f >= n / alpha for every graph, so "<=" here means equality
        return compare(name, f.chi_f_lp, Fraction(f.n, f.alpha), True, True)

    def check_fajtlowicz(self, f: GraphFacts) -> CheckResult:
        bound = None if f.omega is None else Fraction(2 * f.n, f.omega + f.delta + 1)
        return compare(CheckName.FAJTLOWICZ, f.alpha, bound, True, True, at_least=True)

    def check_lemma7(self, f: GraphFacts) -> CheckResult:
        """alpha = floor(n / omega) above the 2/3 threshold; omega | n when strictly above."""
        if f.omega is None or f.alpha is None:
            return undecided(CheckName.LEMMA7, True, "omega or alpha undecided")
        margin = two_thirds_margin(f.omega, f.delta)
        in_hypothesis = bool(f.vertex_transitive) and margin >= 0
        expected = f.n // f.omega
        holds = f.alpha == expected and (margin <= 0 or f.n % f.omega == 0)
        notes = [f"omega divides n: {f.n % f.omega == 0}"]
        return CheckResult(
            name=CheckName.LEMMA7,
            value=Fraction(f.alpha),
            bound=Fraction(expected),
            holds=holds,
            tight=f.alpha == expected,
            in_hypothesis=in_hypothesis,
            proved=True,
            verdict=verdict_for(holds, in_hypothesis),
            notes=notes,
        )

    # ─── CLIQUE STRUCTURE ───────────────────────────────────
    def check_hajnal(self, f: GraphFacts) -> CheckResult:
        """min over capped subsets of maximum cliques of |U Q| + |n Q|, against 2 omega."""
        try:
            q = maximum_cliques(f.graph, self.budget.clique_limit)
        except BudgetExceededError as exc:
            return undecided(CheckName.HAJNAL, True, exc.message)
        omega = q.cliques[0].bit_count()
        worst = None
        for subset in itertools.islice(_nonempty_subsets(len(q)), self.budget.hajnal_subset_cap):
            result = hajnal_check(f.graph, q.subset(subset), omega)
            total = result.union_size + result.intersection_size
            worst = total if worst is None else min(worst, total)
        return compare(CheckName.HAJNAL, worst, 2 * omega, True, True, at_least=True)

    def check_kostochka(self, f: GraphFacts) -> CheckResult:
        """Every X_Q component above the strict 2/3 threshold has a common vertex."""
        if f.omega is None:
            return undecided(CheckName.KOSTOCHKA, True, "omega undecided")
        if two_thirds_margin(f.omega, f.delta) <= 0:
            return self._out_of_hypothesis(CheckName.KOSTOCHKA, True, "requires 3*omega > 2*(Delta+1)")
        try:
            q = maximum_cliques(f.graph, self.budget.clique_limit)
        except BudgetExceededError as exc:
            return undecided(CheckName.KOSTOCHKA, True, exc.message)
        smallest = None
        notes = []
        for component in build_clique_graph(q).component_collections():
            try:
                size = kostochka_common_vertex(f.graph, component, f.omega).bit_count()
            except LemmaFalsifiedError as exc:
                logger.error(exc.message)
                notes.append(exc.message)
                size = 0
            smallest = size if smallest is None else min(smallest, size)
        return compare(CheckName.KOSTOCHKA, smallest, 1, True, True, at_least=True, notes=notes)

    def check_cluster_dichotomy(self, f: GraphFacts) -> CheckResult:
        """Vertex-transitive graphs above the 2/3 threshold cluster as edgeless or a blown-up cycle."""
        name = CheckName.CLUSTER_DICHOTOMY
        in_hypothesis = (
            bool(f.vertex_transitive) and f.omega is not None and two_thirds_margin(f.omega, f.delta) >= 0
        )
        if not in_hypothesis:
            return self._out_of_hypothesis(name, True, "requires vertex-transitivity and 3*omega >= 2*(Delta+1)")
        if f.classification_error is not None:
            holds, notes = False, [f.classification_error.message]
        elif f.classification is None:
            return undecided(name, True, "classification undecided")
        else:
            holds = f.classification.kind in (ClusterKind.EDGELESS, ClusterKind.CYCLE_BLOWUP)
            notes = [f.classification.label]
        return CheckResult(name=name, holds=holds, proved=True, verdict=verdict_for(holds, True), notes=notes)

    # ─── STRONG COLORING ────────────────────────────────────
    def check_strong_conjecture(self, f: GraphFacts) -> CheckResult:
        """Strongly floor(5 Delta / 2)-colorable, decided exhaustively on tiny graphs only."""
        r = 5 * f.delta // 2
        name = CheckName.STRONG_CONJECTURE
        if not f.vertex_transitive or r < 1:
            return self._out_of_hypothesis(name, False, "requires a vertex-transitive graph with Delta >= 1")
        if padded_order(f.n, r) > self.budget.strong_exhaustive_max:
            return self._out_of_hypothesis(name, False, f"padded order above {self.budget.strong_exhaustive_max}")
        try:
            result = strong_chromatic_number_exhaustive(
                f.graph, r, self.budget.node_limit, self.budget.strong_exhaustive_max
            )
        except BudgetExceededError as exc:
            return undecided(name, False, exc.message)
        notes = [f"r={r}", f"partitions={result.partitions_checked}"]
        if result.witness is not None:
            notes.append(f"witness={[vs.to_list(p) for p in result.witness.parts]}")
        return CheckResult(
            name=name,
            value=Fraction(r),
            holds=result.strongly_colorable,
            proved=False,
            verdict=verdict_for(result.strongly_colorable, True),
            notes=notes,
        )

    def check_reduction_pipeline(self, f: GraphFacts) -> CheckResult:
        """Clique padding with r = max{omega, ceil((5 Delta + 3) / 6)} when maximum cliques tile V."""
        name = CheckName.REDUCTION_PIPELINE
        tiled = (
            f.vertex_transitive
            and f.graph.is_connected()
            and f.classification is not None
            and f.classification.kind is ClusterKind.EDGELESS
        )
        if not tiled:
            return self._out_of_hypothesis(name, False, "maximum cliques do not partition V")
        bound = main_conjecture_bound(f.omega, f.delta)
        try:
            coloring = main_conjecture_reduction(f.graph, self.budget.node_limit)
        except StrongColoringInfeasibleError as exc:
            return CheckResult(
                name=name, bound=Fraction(bound), holds=False, proved=False,
                verdict=Verdict.VIOLATED, notes=[exc.message],
            )
        except BudgetExceededError as exc:
            return undecided(name, False, exc.message)
        return compare(name, coloring.num_colors, bound, True, False)

    # ─── FAMILY FORMULAS ────────────────────────────────────
    def check_catlin_formula(self, t: int, k: int, f: Optional[GraphFacts] = None) -> CheckResult:
        """chi(G_{t,k}) = 2k + ceil(k/t), together with Delta = 3k - 1 and omega = 2k."""
        g = catlin(t, k) if f is None else f.graph
        expected = 2 * k + ceil_div(k, t)
        if f is not None and f.chi is None:
            return undecided(CheckName.CATLIN_FORMULA, True, "chi undecided")
        chi = chromatic_number(g, self.budget.node_limit).chi if f is None else f.chi
        omega = clique_number(g) if f is None else f.omega
        holds = chi == expected and g.max_degree == 3 * k - 1 and omega == 2 * k
        return CheckResult(
            name=CheckName.CATLIN_FORMULA,
            value=Fraction(chi),
            bound=Fraction(expected),
            holds=holds,
            tight=chi == expected,
            proved=True,
            verdict=verdict_for(holds, True),
            notes=[f"t={t}", f"k={k}", f"delta={g.max_degree}", f"omega={omega}"],
        )

    def check_line_graph_bound(self, m: Multigraph, f: Optional[GraphFacts] = None) -> CheckResult:
        """chi(L(m)) <= max{omega, ceil((7 Delta + 10) / 8)} for line graphs of multigraphs."""
        f = f or self.analysis.analyze(line_graph(m))
        bound = None if f.omega is None else max(f.omega, ceil_div(7 * f.delta + 10, 8))
        return compare(CheckName.LINE_GRAPH_BOUND, f.chi, bound, True, True)

    # ─── AGGREGATION ────────────────────────────────────────
    def run_all_checks(self, f: GraphFacts) -> dict[str, CheckResult]:
        checks: list[tuple[CheckName, Callable[[GraphFacts], CheckResult]]] = [
            (CheckName.MAIN_CONJECTURE, self.check_main_conjecture),
            (CheckName.BORODIN_KOSTOCHKA, self.check_borodin_kostochka),
            (CheckName.BORODIN_KOSTOCHKA_CONJECTURE, self.check_borodin_kostochka_conjecture),
            (CheckName.BIG_CLIQUES, self.check_big_cliques),
            (CheckName.DENSE_NEIGHBORHOODS, self.check_dense_neighborhoods),
            (CheckName.REED, self.check_reed),
            (CheckName.FRACTIONAL_THEOREM, self.check_fractional_theorem),
            (CheckName.FRACTIONAL_CONSISTENCY, self.check_fractional_consistency),
            (CheckName.FAJTLOWICZ, self.check_fajtlowicz),
            (CheckName.LEMMA7, self.check_lemma7),
            (CheckName.HAJNAL, self.check_hajnal),
            (CheckName.KOSTOCHKA, self.check_kostochka),
            (CheckName.CLUSTER_DICHOTOMY, self.check_cluster_dichotomy),
            (CheckName.STRONG_CONJECTURE, self.check_strong_conjecture),
            (CheckName.REDUCTION_PIPELINE, self.check_reduction_pipeline),
        ]
        out: dict[str, CheckResult] = {}
        for name, check in checks:
            try:
                result = check(f)
            except PreconditionError as exc:
                result = self._out_of_hypothesis(name, name in PROVED, exc.message)
            except BudgetExceededError as exc:
                result = undecided(name, name in PROVED, exc.message)
            if result.verdict is Verdict.VIOLATED:
                level = "proved statement" if result.proved else "conjecture"
                logger.error(f"{level} {name.value} violated by {f.graph6}")
            out[name.value] = result
        return out

    def record(self, f: GraphFacts, extra: Optional[list[CheckResult]] = None) -> AnalysisRecord:
        checks = self.run_all_checks(f) if f.n else {}
        for result in extra or []:
            checks[result.name.value] = result
        return AnalysisRecord(**f.to_profile().model_dump(), checks=checks)

    @staticmethod
    def _out_of_hypothesis(name: CheckName, proved: bool, reason: str) -> CheckResult:
        return CheckResult(
            name=name,
            in_hypothesis=False,
            proved=proved,
            verdict=Verdict.OUT_OF_HYPOTHESIS,
            notes=[reason],
        )


PROVED = {
    CheckName.BORODIN_KOSTOCHKA,
    CheckName.BIG_CLIQUES,
    CheckName.DENSE_NEIGHBORHOODS,
    CheckName.FRACTIONAL_THEOREM,
    CheckName.FRACTIONAL_CONSISTENCY,
    CheckName.FAJTLOWICZ,
    CheckName.LEMMA7,
    CheckName.HAJNAL,
    CheckName.KOSTOCHKA,
    CheckName.CLUSTER_DICHOTOMY,
    CheckName.CATLIN_FORMULA,
    CheckName.LINE_GRAPH_BOUND,
}


def _nonempty_subsets(count: int):
    """Index subsets by increasing size, lexicographic within a size."""
    for size in range(1, count + 1):
        yield from itertools.combinations(range(count), size)
