from typing import Dict, List, Optional

from pydantic import Field

from vtchroma.enums import CheckName, LemmaSuite, Verdict
from vtchroma.schemas.base import BaseSchema, Rational


# ─── PER GRAPH ──────────────────────────────────────────────
class GraphProfile(BaseSchema):
    """Invariants of one graph; None marks a value left undecided by a budget."""

    graph6: str
    n: int
    delta: int
    omega: Optional[int] = None
    alpha: Optional[int] = None
    chi: Optional[int] = None
    chi_f: Optional[Rational] = None
    vertex_transitive: Optional[bool] = None
    cluster_class: Optional[str] = None


class CheckResult(BaseSchema):
    """One bound or statement evaluated on one graph.

    `holds` compares `value` against `bound` in the check's own direction;
    `proved` marks theorems, whose in-hypothesis violations are failures.
    """

    name: CheckName
    value: Optional[Rational] = None
    bound: Optional[Rational] = None
    holds: Optional[bool] = None
    tight: Optional[bool] = None
    in_hypothesis: bool = True
    proved: bool = False
    verdict: Verdict
    notes: List[str] = Field(default_factory=list)

    @property
    def is_failure(self) -> bool:
        return self.verdict is Verdict.VIOLATED


class AnalysisRecord(GraphProfile):
    """The stable JSON record of `analyze` and `scan`."""

    checks: Dict[str, CheckResult] = Field(default_factory=dict)

    def undecided(self) -> bool:
        return self.chi is None or any(c.verdict is Verdict.UNDECIDED for c in self.checks.values())


# ─── AGGREGATES ─────────────────────────────────────────────
class ScanSummary(BaseSchema):
    family: str
    records: int
    vertex_transitive: int = 0
    verdicts: Dict[str, int] = Field(default_factory=dict)
    tight: int = 0
    violations_of_proved: int = 0
    conjecture_violations: int = 0
    undecided: int = 0
    witnesses: List[str] = Field(default_factory=list)
    # max over vertex-transitive graphs of (chi - omega)+ / (Delta + 1)
    max_c_ratio: Optional[Rational] = None


class LemmaSuiteResult(BaseSchema):
    suite: LemmaSuite
    cases: int = 0
    skipped: int = 0
    failures: int = 0
    undecided: int = 0
    witnesses: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0
