"""Run configuration and result models."""

from datetime import datetime
from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field

from .prover import Outcome, ProverOptions, ProverResult, RenderOptions


class RunStatus(str, Enum):
    """Run execution status."""
    PENDING = "pending"
    PARSING = "parsing"
    SEARCHING = "searching"
    CHECKING = "checking"
    RENDERING = "rendering"
    COMPLETE = "complete"
    FAILED = "failed"


class RunConfig(BaseModel):
    """Configuration for one prover run."""
    problem: Path
    options: ProverOptions = Field(default_factory=ProverOptions)
    render: RenderOptions = Field(default_factory=RenderOptions)
    check_file: Optional[Path] = Field(None, description="Structured proof to check instead of searching")


class RunResult(BaseModel):
    """Result of a prover run."""
    run_id: str
    config: RunConfig
    status: RunStatus
    started_at: datetime
    completed_at: Optional[datetime] = None
    outcome: Optional[Outcome] = None
    result: Optional[ProverResult] = None
    rendered: str = ""
    accepted: Optional[bool] = Field(None, description="Checker verdict in check mode")
    violation: Optional[str] = None
    error: Optional[str] = None
