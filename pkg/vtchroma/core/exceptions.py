import json
import sys
import traceback
from enum import Enum as PyEnum
from typing import Any, Dict, List, Optional, TextIO, Union

from pydantic import BaseModel
from pydantic import ValidationError as PydanticValidationError

from vtchroma.core.logging import logger


class ErrorSource(str, PyEnum):
    """Which stage of a run raised: input checks, search limits, or a failed statement."""

    VALIDATION = "validation"
    PRECONDITION = "precondition"
    RESOURCE_LIMIT = "resource_limit"
    FALSIFICATION = "falsification"
    VIOLATION = "violation"
    SYSTEM = "system"


class ExitCode:
    OK = 0
    VIOLATION = 1
    INPUT_ERROR = 2
    BUDGET_EXHAUSTED = 3
    # a crash, never a counterexample
    INTERNAL_ERROR = 4


class ErrorDetail(BaseModel):
    """One located problem, e.g. a pydantic field error or a corpus line."""

    loc: Optional[List[str]] = None
    msg: str
    type: Optional[str] = None


class ErrorResponse(BaseModel):
    """The JSON line written to stderr before a nonzero exit."""

    exit_code: int
    error_code: str
    error_source: ErrorSource
    message: str
    details: Optional[List[Union[ErrorDetail, Dict[str, Any]]]] = None


class VtchromaError(Exception):
    """Root of every error the CLI maps to an exit code."""

    exit_code: int = ExitCode.INTERNAL_ERROR
    error_code: str = "INTERNAL_ERROR"
    error_source: ErrorSource = ErrorSource.SYSTEM
    default_message: str = "An unexpected error occurred"

    def __init__(
        self,
        message: Optional[str] = None,
        details: Optional[List[Union[ErrorDetail, Dict[str, Any]]]] = None,
    ):
        self.message = message or self.default_message
        self.details = details
        super().__init__(self.message)

    def __reduce__(self):
        # subclass constructors differ, so unpickle from state
        return _rebuild_error, (type(self), self.__dict__)

    def to_response(self) -> ErrorResponse:
        return ErrorResponse(
            exit_code=self.exit_code,
            error_code=self.error_code,
            error_source=self.error_source,
            message=self.message,
            details=self.details,
        )


def _rebuild_error(cls, state: Dict[str, Any]) -> VtchromaError:
    exc = cls.__new__(cls)
    Exception.__init__(exc, state.get("message"))
    exc.__dict__.update(state)
    return exc


class GraphValidationError(VtchromaError):
    """Invalid graph input (range, loops, broken symmetry)."""

    exit_code = ExitCode.INPUT_ERROR
    error_code = "GRAPH_VALIDATION_ERROR"
    error_source = ErrorSource.VALIDATION
    default_message = "Invalid graph"


class CapacityExceededError(GraphValidationError):
    """Vertex count above the configured bitset capacity."""

    error_code = "CAPACITY_EXCEEDED"
    default_message = "Graph exceeds vertex capacity"

    def __init__(self, n: int, capacity: int, **kwargs):
        message = kwargs.pop("message", None) or f"{n} vertices exceed capacity {capacity}"
        super().__init__(message=message, **kwargs)
        self.n = n
        self.capacity = capacity


class Graph6ParseError(GraphValidationError):
    """Malformed graph6 input."""

    error_code = "GRAPH6_PARSE_ERROR"
    default_message = "Malformed graph6 string"

    def __init__(self, message: Optional[str] = None, line_number: Optional[int] = None, **kwargs):
        if line_number is not None:
            message = f"line {line_number}: {message or self.default_message}"
            kwargs.setdefault("details", [{"line": line_number}])
        super().__init__(message=message, **kwargs)
        self.line_number = line_number


class PartitionError(GraphValidationError):
    """Vertex partition is not disjoint/covering or has an oversized part."""

    error_code = "PARTITION_ERROR"
    default_message = "Invalid vertex partition"


class PreconditionError(VtchromaError):
    """A documented precondition of an operation is not met."""

    exit_code = ExitCode.INPUT_ERROR
    error_code = "PRECONDITION_FAILED"
    error_source = ErrorSource.PRECONDITION
    default_message = "Operation precondition not met"


class NotVertexTransitiveError(PreconditionError):
    error_code = "NOT_VERTEX_TRANSITIVE"
    default_message = "Graph is not vertex-transitive"


class NotMaximumCliqueError(PreconditionError):
    error_code = "NOT_MAXIMUM_CLIQUE"
    default_message = "Collection contains a set that is not a maximum clique"


class NotCliquePartitionError(PreconditionError):
    error_code = "NOT_CLIQUE_PARTITION"
    default_message = "Cliques are not pairwise disjoint and covering"


class BudgetExceededError(VtchromaError):
    """Search aborted at its budget; the answer is undecided, never guessed."""

    exit_code = ExitCode.BUDGET_EXHAUSTED
    error_code = "BUDGET_EXCEEDED"
    error_source = ErrorSource.RESOURCE_LIMIT
    default_message = "Search budget exceeded"

    def __init__(self, resource: str, limit: int, **kwargs):
        message = kwargs.pop("message", None) or f"{resource}: budget of {limit} exceeded"
        super().__init__(message=message, **kwargs)
        self.resource = resource
        self.limit = limit


class LemmaFalsifiedError(VtchromaError):
    """A proved statement failed on a concrete graph: a bug or a counterexample."""

    exit_code = ExitCode.VIOLATION
    error_code = "LEMMA_FALSIFIED"
    error_source = ErrorSource.FALSIFICATION
    default_message = "Proved statement failed"

    def __init__(self, statement: str, witness: Optional[str] = None, **kwargs):
        message = kwargs.pop("message", None) or f"{statement} failed"
        if witness:
            message = f"{message} (witness {witness})"
        super().__init__(message=message, **kwargs)
        self.statement = statement
        self.witness = witness


class StrongColoringInfeasibleError(VtchromaError):
    exit_code = ExitCode.VIOLATION
    error_code = "STRONG_COLORING_INFEASIBLE"
    error_source = ErrorSource.VIOLATION
    default_message = "No strong coloring exists for this partition"


class ConjectureViolationError(VtchromaError):
    exit_code = ExitCode.VIOLATION
    error_code = "CONJECTURE_VIOLATION"
    error_source = ErrorSource.VIOLATION
    default_message = "Conjecture violated"


class CertificateError(VtchromaError):
    """An exact certificate failed its own verification."""

    error_code = "CERTIFICATE_ERROR"
    default_message = "Certificate verification failed"


def handle_exception(exc: BaseException, stream: Optional[TextIO] = None) -> int:
    """Log an exception by severity, print its error report and return the exit code."""
    stream = stream or sys.stderr

    if isinstance(exc, VtchromaError):
        if exc.error_source in (ErrorSource.FALSIFICATION, ErrorSource.VIOLATION, ErrorSource.SYSTEM):
            logger.error(f"{exc.error_code}: {exc.message}")
        else:
            logger.warning(f"{exc.error_code}: {exc.message}")
        print(json.dumps(exc.to_response().model_dump(mode="json")), file=stream)
        return exc.exit_code

    if isinstance(exc, PydanticValidationError):
        logger.warning(f"Validation error: {exc.errors()}")
        details = [
            ErrorDetail(
                loc=[str(part) for part in error.get("loc", [])],
                msg=error.get("msg", ""),
                type=error.get("type", ""),
            )
            for error in exc.errors()
        ]
        return handle_exception(GraphValidationError(message="Run configuration error", details=details), stream)

    error_traceback = "".join(traceback.format_exception(exc))
    logger.error(f"Unhandled exception: {exc}\n{error_traceback}")
    crash = VtchromaError(message=f"{type(exc).__name__}: {exc}")
    crash.error_code = "UNHANDLED_EXCEPTION"
    print(json.dumps(crash.to_response().model_dump(mode="json")), file=stream)
    return crash.exit_code
