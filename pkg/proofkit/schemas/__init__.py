"""Pydantic schemas for ProofKit."""

from .proof import (
    CLOSING_KINDS,
    STEP_KINDS,
    Fact,
    PremiseRef,
    PremiseSource,
    Proof,
    ProofGoal,
    ProofStep,
    StepKind,
)
from .prover import (
    AbductFinding,
    AbductVerdict,
    DeductFinding,
    LengthAttempt,
    Outcome,
    ProverOptions,
    ProverResult,
    RenderOptions,
    RenderStyle,
    RunStatistics,
    SolverChoice,
)
from .run import RunConfig, RunResult, RunStatus

__all__ = [
    "CLOSING_KINDS",
    "STEP_KINDS",
    "Fact",
    "PremiseRef",
    "PremiseSource",
    "Proof",
    "ProofGoal",
    "ProofStep",
    "StepKind",
    "AbductFinding",
    "AbductVerdict",
    "DeductFinding",
    "LengthAttempt",
    "Outcome",
    "ProverOptions",
    "ProverResult",
    "RenderOptions",
    "RenderStyle",
    "RunStatistics",
    "SolverChoice",
    "RunConfig",
    "RunResult",
    "RunStatus",
]
