from fractions import Fraction
from multiprocessing import Pool
from typing import Optional

from tqdm import tqdm

from vtchroma.algorithms.generators import catlin_multigraph
from vtchroma.algorithms.graph6 import parse_graph6, write_graph6
from vtchroma.controllers.conjectures import ConjectureController
from vtchroma.controllers.generators import FamilyMember, GeneratorController
from vtchroma.core.logging import logger
from vtchroma.enums import Verdict
from vtchroma.schemas.reports import AnalysisRecord, ScanSummary
from vtchroma.schemas.runs import Budget, FamilySpec


def analyze_member(job: tuple[str, dict, dict]) -> dict:
    """Worker entry point: graph6, family params and budget in, a JSON-ready record out."""
    graph6, params, budget = job
    controller = ConjectureController(Budget(**budget))
    facts = controller.analysis.analyze(parse_graph6(graph6))
    extra = []
    if "t" in params and "k" in params:
        t, k = params["t"], params["k"]
        extra.append(controller.check_catlin_formula(t, k, facts))
        extra.append(controller.check_line_graph_bound(catlin_multigraph(t, k), facts))
    return controller.record(facts, extra).model_dump(mode="json")


def c_ratio(record: AnalysisRecord) -> Optional[Fraction]:
    """(chi - omega)+ / (Delta + 1)."""
    if record.chi is None or record.omega is None:
        return None
    return Fraction(max(record.chi - record.omega, 0), record.delta + 1)


class ScanController:
    def __init__(self, budget: Optional[Budget] = None, workers: int = 1, progress: bool = True):
        self.budget = budget or Budget()
        self.workers = workers
        self.progress = progress
        self.generators = GeneratorController()

    def scan_family(self, spec: FamilySpec) -> tuple[list[AnalysisRecord], ScanSummary]:
        members = self.generators.members(spec)
        records = self.scan_members(members, spec.label)
        return records, self.summarize(spec.label, records)

    def scan_members(self, members: list[FamilyMember], label: str = "scan") -> list[AnalysisRecord]:
        budget = self.budget.model_dump()
        jobs = [(write_graph6(m.graph), m.params, budget) for m in members]
        bar = tqdm(total=len(jobs), desc=label, unit="graph", disable=not self.progress)
        rows: list[dict] = []
        try:
            if self.workers > 1 and len(jobs) > 1:
                with Pool(self.workers) as pool:
                    for row in pool.imap(analyze_member, jobs):
                        rows.append(row)
                        bar.update()
            else:
                for job in jobs:
                    rows.append(analyze_member(job))
                    bar.update()
        finally:
            bar.close()
        records = [AnalysisRecord.model_validate(row) for row in rows]
        # imap keeps input order, so equal graph6 strings stay in generation order
        return sorted(records, key=lambda r: r.graph6)

    @staticmethod
    def summarize(label: str, records: list[AnalysisRecord]) -> ScanSummary:
        summary = ScanSummary(family=label, records=len(records))
        witnesses = set()
        ratios = []
        for record in records:
            if record.vertex_transitive:
                summary.vertex_transitive += 1
                ratio = c_ratio(record)
                if ratio is not None:
                    ratios.append(ratio)
            if record.undecided():
                summary.undecided += 1
            for check in record.checks.values():
                key = check.verdict.value
                summary.verdicts[key] = summary.verdicts.get(key, 0) + 1
                if check.tight and check.verdict is Verdict.HOLDS:
                    summary.tight += 1
                if check.verdict is Verdict.VIOLATED:
                    witnesses.add(record.graph6)
                    if check.proved:
                        summary.violations_of_proved += 1
                    else:
                        summary.conjecture_violations += 1
        summary.witnesses = sorted(witnesses)
        summary.max_c_ratio = max(ratios, default=None)
        if summary.undecided:
            logger.warning(f"{label}: {summary.undecided} graphs left undecided by the budget")
        logger.info(
            f"{label}: {summary.records} graphs, {summary.violations_of_proved} proved violations, "
            f"{summary.conjecture_violations} conjecture violations"
        )
        return summary

