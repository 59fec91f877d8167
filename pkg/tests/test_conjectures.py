from fractions import Fraction

import pytest

from vtchroma.algorithms.generators import (
    blow_up,
    cartesian_product,
    catlin,
    catlin_multigraph,
    complete,
    cycle,
    kneser,
)
from vtchroma.controllers.conjectures import ConjectureController, compare, verdict_for
from vtchroma.enums import CheckName, Verdict
from vtchroma.schemas.runs import Budget


@pytest.fixture(scope="module")
def controller() -> ConjectureController:
    return ConjectureController()


def checks_for(controller, g):
    return controller.record(controller.analysis.analyze(g))


class TestVerdicts:
    def test_verdict_for(self):
        assert verdict_for(None, True) is Verdict.UNDECIDED
        assert verdict_for(False, False) is Verdict.OUT_OF_HYPOTHESIS
        assert verdict_for(True, True) is Verdict.HOLDS
        assert verdict_for(False, True) is Verdict.VIOLATED

    def test_compare_is_exact(self):
        result = compare(CheckName.REED, 3, Fraction(3), True, False)
        assert result.holds and result.tight
        below = compare(CheckName.FAJTLOWICZ, 1, Fraction(7, 6), True, True, at_least=True)
        assert below.verdict is Verdict.VIOLATED and not below.tight


class TestProfiles:
    def test_petersen(self, controller, petersen):
        record = checks_for(controller, petersen)
        assert (record.n, record.delta, record.omega, record.alpha, record.chi) == (10, 3, 2, 4, 3)
        assert record.chi_f == Fraction(5, 2)
        assert record.vertex_transitive is True
        assert record.cluster_class == "not_applicable"
        main = record.checks[CheckName.MAIN_CONJECTURE.value]
        assert main.verdict is Verdict.HOLDS and main.tight
        assert record.checks[CheckName.FRACTIONAL_CONSISTENCY.value].verdict is Verdict.HOLDS
        assert record.checks[CheckName.KOSTOCHKA.value].verdict is Verdict.OUT_OF_HYPOTHESIS

    def test_k1(self, controller):
        record = checks_for(controller, complete(1))
        assert (record.n, record.chi, record.chi_f) == (1, 1, Fraction(1))
        assert record.model_dump(mode="json")["chi_f"] == "1/1"

    def test_hajos_graph(self, controller, h11):
        record = checks_for(controller, h11)
        assert (record.n, record.delta, record.omega, record.chi) == (16, 15, 13, 14)
        assert record.vertex_transitive is False
        main = record.checks[CheckName.MAIN_CONJECTURE.value]
        assert main.holds is False
        assert main.bound == 13
        assert main.verdict is Verdict.OUT_OF_HYPOTHESIS
        assert record.checks[CheckName.FRACTIONAL_THEOREM.value].verdict is Verdict.OUT_OF_HYPOTHESIS
        assert record.checks[CheckName.DENSE_NEIGHBORHOODS.value].verdict is Verdict.HOLDS
        assert not any(c.is_failure for c in record.checks.values())

    def test_prism_pipeline(self, controller, prism):
        record = checks_for(controller, prism)
        assert record.cluster_class == "edgeless"
        assert record.checks[CheckName.CLUSTER_DICHOTOMY.value].verdict is Verdict.HOLDS
        assert record.checks[CheckName.LEMMA7.value].verdict is Verdict.HOLDS
        pipeline = record.checks[CheckName.REDUCTION_PIPELINE.value]
        assert pipeline.verdict is Verdict.HOLDS and pipeline.value == 3

    def test_cycle_blowup(self, controller):
        record = checks_for(controller, blow_up(cycle(7), 3))
        assert record.cluster_class == "cycle_blowup(7,3)"
        assert record.checks[CheckName.CLUSTER_DICHOTOMY.value].verdict is Verdict.HOLDS
        assert record.checks[CheckName.REDUCTION_PIPELINE.value].verdict is Verdict.OUT_OF_HYPOTHESIS

    def test_no_proved_statement_fails(self, controller):
        for g in (cycle(5), kneser(6, 2), cartesian_product(complete(4), complete(2)), catlin(2, 2)):
            record = checks_for(controller, g)
            assert not [c.name for c in record.checks.values() if c.proved and c.is_failure]

    def test_budget_leaves_values_undecided(self, petersen):
        tight = ConjectureController(Budget(node_limit=1))
        record = tight.record(tight.analysis.analyze(petersen))
        assert record.chi is None
        assert record.undecided()


class TestFamilyFormulas:
    @pytest.mark.parametrize("t,k", [(2, 1), (2, 2), (3, 2), (3, 3)])
    def test_catlin(self, controller, t, k):
        result = controller.check_catlin_formula(t, k)
        assert result.verdict is Verdict.HOLDS
        assert result.value == 2 * k + -(-k // t)

    def test_line_graph_bound(self, controller):
        result = controller.check_line_graph_bound(catlin_multigraph(2, 2))
        assert result.verdict is Verdict.HOLDS
        assert (result.value, result.bound) == (5, 6)
