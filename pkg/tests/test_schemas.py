import io
import json
import pickle
from fractions import Fraction

import pytest
from pydantic import ValidationError

from vtchroma.core.exceptions import (
    BudgetExceededError,
    CapacityExceededError,
    CertificateError,
    ExitCode,
    Graph6ParseError,
    LemmaFalsifiedError,
    handle_exception,
)
from vtchroma.enums import CheckName, Verdict
from vtchroma.schemas.base import format_rational, parse_rational
from vtchroma.schemas.reports import CheckResult
from vtchroma.schemas.runs import Budget, FamilySpec, RunConfig


class TestRationals:
    @pytest.mark.parametrize("text,value", [("5/2", Fraction(5, 2)), ("3", Fraction(3)), (" 7/14 ", Fraction(1, 2))])
    def test_parse(self, text, value):
        assert parse_rational(text) == value

    def test_always_has_a_denominator(self):
        assert format_rational(Fraction(5)) == "5/1"
        result = CheckResult(name=CheckName.REED, value=Fraction(10, 4), bound=3, verdict=Verdict.HOLDS)
        dumped = result.model_dump(mode="json")
        assert (dumped["value"], dumped["bound"]) == ("5/2", "3/1")
        assert CheckResult.model_validate(dumped) == result


class TestRunConfig:
    def test_budgets_must_be_positive(self):
        with pytest.raises(ValidationError):
            Budget(node_limit=0)

    def test_single_input_source(self):
        with pytest.raises(ValidationError):
            RunConfig(command="scan", graph6=["Dhc"], family=FamilySpec(kind="catlin", t_values=[2], k_values=[1]))
        with pytest.raises(ValidationError):
            RunConfig(command="analyze", graph6=["Dhc", "  "])
        assert RunConfig(command="analyze", graph6=["Dhc"]).output_format.value == "json"
        assert RunConfig(command="analyze", graph6=[]).graph6 is None


class TestErrors:
    def test_exit_codes(self):
        assert handle_exception(Graph6ParseError("bad", line_number=4), io.StringIO()) == ExitCode.INPUT_ERROR
        assert handle_exception(BudgetExceededError("coloring search", 10), io.StringIO()) == ExitCode.BUDGET_EXHAUSTED
        assert handle_exception(LemmaFalsifiedError("hajnal", "Dhc"), io.StringIO()) == ExitCode.VIOLATION
        assert handle_exception(CertificateError(), io.StringIO()) == ExitCode.INTERNAL_ERROR

    def test_crash_is_not_a_violation(self):
        stream = io.StringIO()
        try:
            raise RuntimeError("boom")
        except RuntimeError as exc:
            assert handle_exception(exc, stream) == ExitCode.INTERNAL_ERROR
        report = json.loads(stream.getvalue())
        assert report["error_code"] == "UNHANDLED_EXCEPTION"
        assert report["exit_code"] == 4
        assert report["message"] == "RuntimeError: boom"

    def test_report(self):
        stream = io.StringIO()
        handle_exception(Graph6ParseError("truncated", line_number=4), stream)
        report = json.loads(stream.getvalue())
        assert report["message"] == "line 4: truncated"
        assert report["details"] == [{"line": 4}]
        assert report["error_source"] == "validation"

    def test_pydantic_errors_are_input_errors(self):
        stream = io.StringIO()
        try:
            Budget(node_limit=-1)
        except ValidationError as exc:
            assert handle_exception(exc, stream) == ExitCode.INPUT_ERROR
        assert json.loads(stream.getvalue())["details"][0]["loc"] == ["node_limit"]

    def test_pickle(self):
        exc = pickle.loads(pickle.dumps(CapacityExceededError(70, 64)))
        assert (exc.n, exc.capacity, exc.message) == (70, 64, "70 vertices exceed capacity 64")
        exc = pickle.loads(pickle.dumps(BudgetExceededError("clique enumeration", 5)))
        assert exc.resource == "clique enumeration" and exc.exit_code == ExitCode.BUDGET_EXHAUSTED
