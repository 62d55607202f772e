"""Configuration management for ProofKit."""

from pydantic import Field, ValidationError
from pydantic_settings import BaseSettings
from typing import Optional
from pathlib import Path

from .exceptions import ConfigError


class ProofKitSettings(BaseSettings):
    """ProofKit configuration loaded from environment variables."""

    # Search bounds
    time_limit: float = Field(default=100.0, alias="PROOFKIT_TIME_LIMIT")
    max_len: int = Field(default=8, alias="PROOFKIT_MAX_LEN")
    num_abducts: int = Field(default=0, alias="PROOFKIT_NUM_ABDUCTS")

    # Abduct enumeration and consistency filtering
    abduct_enumeration_cap: int = Field(default=200, alias="PROOFKIT_ABDUCT_CAP")
    consistency_bound: int = Field(default=20000, alias="PROOFKIT_CONSISTENCY_BOUND")
    branch_limit: int = Field(default=4096, alias="PROOFKIT_BRANCH_LIMIT")
    search_share: float = Field(default=0.8, alias="PROOFKIT_SEARCH_SHARE")

    # Solver backend
    solver: str = Field(default="auto", alias="PROOFKIT_SOLVER")
    pysat_engine: str = Field(default="glucose4", alias="PROOFKIT_PYSAT_ENGINE")
    external_solver: Optional[Path] = Field(default=None, alias="PROOFKIT_EXTERNAL_SOLVER")
    seed: int = Field(default=0, alias="PROOFKIT_SEED")

    # Logging
    log_level: str = Field(default="WARNING", alias="PROOFKIT_LOG_LEVEL")
    log_file: Optional[Path] = Field(default=None, alias="PROOFKIT_LOG_FILE")

    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "extra": "ignore",
        "populate_by_name": True,
    }


# Singleton config instance
_config: Optional[ProofKitSettings] = None


def get_config() -> ProofKitSettings:
    """Get the singleton configuration instance."""
    global _config
    if _config is None:
        try:
            _config = ProofKitSettings()
        except ValidationError as e:
            raise ConfigError(f"Invalid PROOFKIT_* setting: {e}") from e
    return _config


def reset_config() -> None:
    """Reset the singleton configuration (useful for testing)."""
    global _config
    _config = None
