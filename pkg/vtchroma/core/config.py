import os
import pathlib
from typing import Optional

from dotenv import load_dotenv
from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()

MAX_CAPACITY = 128


class Settings(BaseSettings):
    PROJECT_NAME: str = "vtchroma"
    PROJECT_DESCRIPTION: str = (
        "Exact coloring toolkit for vertex-transitive graphs"
    )
    VERSION: str = "0.1.0"
    ENVIRONMENT: str = "development"

    # Graph representation
    GRAPH_CAPACITY: int = 64

    @field_validator("GRAPH_CAPACITY")
    @classmethod
    def validate_capacity(cls, v: int) -> int:
        if not 1 <= v <= MAX_CAPACITY:
            raise ValueError(f"GRAPH_CAPACITY must be between 1 and {MAX_CAPACITY}")
        return v

    # Search budgets
    SEARCH_NODE_LIMIT: int = 5_000_000
    CLIQUE_LIMIT: int = 200_000
    LP_MAX_VERTICES: int = 14
    STRONG_EXHAUSTIVE_MAX: int = 12
    HAJNAL_SUBSET_CAP: int = 4096

    # Overrides SEARCH_NODE_LIMIT when exported
    VTCHROMA_BUDGET: Optional[int] = None

    @field_validator(
        "SEARCH_NODE_LIMIT",
        "CLIQUE_LIMIT",
        "LP_MAX_VERTICES",
        "STRONG_EXHAUSTIVE_MAX",
        "HAJNAL_SUBSET_CAP",
        "VTCHROMA_BUDGET",
    )
    @classmethod
    def validate_positive(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v <= 0:
            raise ValueError("budgets must be positive")
        return v

    # Runs
    WORKERS: int = os.cpu_count() or 1
    RANDOM_SEED: int = 20120401

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    LOG_DIR: pathlib.Path = pathlib.Path("/tmp/logs")
    LOG_TO_FILE: bool = True

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", case_sensitive=True, extra="ignore"
    )

    @property
    def search_node_limit(self) -> int:
        return self.VTCHROMA_BUDGET or self.SEARCH_NODE_LIMIT


settings = Settings()
