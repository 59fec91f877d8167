from fractions import Fraction

import pytest

from vtchroma.controllers.generators import GeneratorController
from vtchroma.controllers.scans import ScanController, analyze_member, c_ratio
from vtchroma.enums import CheckName, FamilyKind, Verdict
from vtchroma.schemas.reports import AnalysisRecord
from vtchroma.schemas.runs import Budget, FamilySpec


@pytest.fixture
def scanner() -> ScanController:
    return ScanController(workers=1, progress=False)


class TestFamilies:
    def test_circulants_are_distinct(self):
        members = GeneratorController().members(FamilySpec(kind=FamilyKind.CIRCULANT, n_min=3, n_max=8))
        assert [m.graph.n for m in members] == sorted(m.graph.n for m in members)
        assert len(members) == len({(m.graph.n, m.label) for m in members})

    def test_spec_requires_parameters(self):
        with pytest.raises(ValueError):
            FamilySpec(kind=FamilyKind.CATLIN, t_values=[2])
        with pytest.raises(ValueError):
            FamilySpec(kind=FamilyKind.CIRCULANT)


class TestScan:
    def test_catlin_family(self, scanner):
        spec = FamilySpec(kind=FamilyKind.CATLIN, t_values=[2, 3], k_values=[1, 2, 3])
        records, summary = scanner.scan_family(spec)
        assert summary.records == len(records) == 6
        assert [r.graph6 for r in records] == sorted(r.graph6 for r in records)
        for record in records:
            assert record.checks[CheckName.MAIN_CONJECTURE.value].verdict is Verdict.HOLDS
            assert record.checks[CheckName.CATLIN_FORMULA.value].verdict is Verdict.HOLDS
            assert record.checks[CheckName.LINE_GRAPH_BOUND.value].verdict is Verdict.HOLDS
        assert summary.violations_of_proved == 0
        assert summary.vertex_transitive == 6

    def test_worker_round_trip(self, petersen):
        from vtchroma.algorithms.graph6 import write_graph6

        row = analyze_member((write_graph6(petersen), {}, Budget().model_dump()))
        record = AnalysisRecord.model_validate(row)
        assert record.chi_f == Fraction(5, 2)

    def test_c_ratio(self):
        record = AnalysisRecord(graph6="D~{", n=5, delta=4, omega=5, chi=5)
        assert c_ratio(record) == 0
        record = AnalysisRecord(graph6="Dhc", n=5, delta=2, omega=2, chi=3)
        assert c_ratio(record) == Fraction(1, 3)

    def test_parallel_matches_serial(self):
        spec = FamilySpec(kind=FamilyKind.KNESER, kneser_pairs=[(5, 2), (6, 2)])
        serial, _ = ScanController(workers=1, progress=False).scan_family(spec)
        parallel, _ = ScanController(workers=2, progress=False).scan_family(spec)
        assert [r.model_dump(mode="json") for r in serial] == [r.model_dump(mode="json") for r in parallel]

    @pytest.mark.slow
    def test_circulants_up_to_ten(self, scanner):
        records, summary = scanner.scan_family(FamilySpec(kind=FamilyKind.CIRCULANT, n_max=10))
        assert summary.violations_of_proved == 0
        for record in records:
            if record.vertex_transitive:
                assert record.cluster_class != "falsified"
