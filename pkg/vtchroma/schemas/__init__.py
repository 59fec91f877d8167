from vtchroma.schemas.base import BaseSchema, Rational, format_rational, parse_rational
from vtchroma.schemas.reports import (
    AnalysisRecord,
    CheckResult,
    GraphProfile,
    LemmaSuiteResult,
    ScanSummary,
)
from vtchroma.schemas.runs import Budget, FamilySpec, RunConfig

__all__ = [
    "BaseSchema",
    "Rational",
    "format_rational",
    "parse_rational",
    "AnalysisRecord",
    "CheckResult",
    "GraphProfile",
    "LemmaSuiteResult",
    "ScanSummary",
    "Budget",
    "FamilySpec",
    "RunConfig",
]
