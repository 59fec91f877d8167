from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import Field, PositiveInt, field_validator, model_validator

from vtchroma.core.config import settings
from vtchroma.enums import FamilyKind, OutputFormat
from vtchroma.schemas.base import BaseSchema


class Budget(BaseSchema):
    """Search limits handed explicitly to every worker."""

    node_limit: PositiveInt = Field(default_factory=lambda: settings.search_node_limit)
    clique_limit: PositiveInt = Field(default_factory=lambda: settings.CLIQUE_LIMIT)
    lp_max_vertices: PositiveInt = Field(default_factory=lambda: settings.LP_MAX_VERTICES)
    strong_exhaustive_max: PositiveInt = Field(default_factory=lambda: settings.STRONG_EXHAUSTIVE_MAX)
    hajnal_subset_cap: PositiveInt = Field(default_factory=lambda: settings.HAJNAL_SUBSET_CAP)


class FamilySpec(BaseSchema):
    """A deterministic graph family; only the fields of `kind` are read."""

    kind: FamilyKind
    # circulant
    n_min: int = 3
    n_max: Optional[int] = None
    gens: Optional[List[int]] = None
    distinct: bool = True
    # catlin / hajos
    t_values: List[int] = Field(default_factory=list)
    k_values: List[int] = Field(default_factory=list)
    # kneser
    kneser_pairs: List[Tuple[int, int]] = Field(default_factory=list)
    # blowup
    cycles: List[int] = Field(default_factory=list)
    sizes: List[int] = Field(default_factory=list)
    # file
    path: Optional[Path] = None

    @model_validator(mode="after")
    def validate_parameters(self) -> "FamilySpec":
        if self.kind is FamilyKind.CIRCULANT and self.n_max is None:
            raise ValueError("circulant family needs n_max")
        if self.kind is FamilyKind.CATLIN and not (self.t_values and self.k_values):
            raise ValueError("catlin family needs t and k values")
        if self.kind is FamilyKind.HAJOS and not self.t_values:
            raise ValueError("hajos family needs t values")
        if self.kind is FamilyKind.KNESER and not self.kneser_pairs:
            raise ValueError("kneser family needs (n, k) pairs")
        if self.kind is FamilyKind.BLOWUP and not (self.cycles and self.sizes):
            raise ValueError("blowup family needs cycle lengths and sizes")
        if self.kind is FamilyKind.FILE and self.path is None:
            raise ValueError("file family needs a path")
        return self

    @property
    def label(self) -> str:
        return self.kind.value if self.path is None else f"file:{self.path.name}"


class RunConfig(BaseSchema):
    """One command invocation; graphs come from a family, a file, inline graph6 or stdin."""

    command: str
    family: Optional[FamilySpec] = None
    input_path: Optional[Path] = None
    graph6: Optional[List[str]] = None
    budget: Budget = Field(default_factory=Budget)
    output_format: OutputFormat = OutputFormat.JSON
    output_path: Optional[Path] = None
    workers: PositiveInt = Field(default_factory=lambda: settings.WORKERS)
    seed: int = Field(default_factory=lambda: settings.RANDOM_SEED)

    @field_validator("graph6")
    @classmethod
    def validate_graph6_not_empty(cls, v: Optional[List[str]]) -> Optional[List[str]]:
        if v is not None and not all(text.strip() for text in v):
            raise ValueError("graph6 input cannot be empty")
        return v or None

    @model_validator(mode="after")
    def validate_single_source(self) -> "RunConfig":
        sources = [s for s in (self.family, self.input_path, self.graph6) if s is not None]
        if len(sources) > 1:
            raise ValueError("exactly one input source is allowed")
        return self
