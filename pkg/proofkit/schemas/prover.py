"""Prover options, results and rendering options."""

from enum import Enum
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, Field

from .proof import Fact, Proof, ProofGoal


class SolverChoice(str, Enum):
    """SAT backend selection."""
    AUTO = "auto"
    BUILTIN = "builtin"
    PYSAT = "pysat"
    EXTERNAL = "external"


class ProverOptions(BaseModel):
    """Options of one prover run (CLI flags over settings)."""
    time_limit: float = Field(100.0, gt=0, description="Wall-clock limit in seconds (-l)")
    max_len: int = Field(8, ge=1, description="Maximum proof body length (-m)")
    num_abducts: int = Field(0, ge=0, description="Abduct slots (-b)")
    abduct_enumeration_cap: int = Field(200, ge=1)
    consistency_bound: int = Field(20000, ge=1, description="Saturation facts per branch")
    branch_limit: int = Field(4096, ge=1, description="Saturation branches explored")
    search_share: float = Field(0.8, gt=0, le=1, description="Budget share for search when enumerating abducts")
    solver: SolverChoice = SolverChoice.AUTO
    pysat_engine: str = "glucose4"
    external_solver: Optional[Path] = None
    seed: int = Field(0, ge=0)
    deepen: bool = Field(True, description="Iterative deepening from the shortest length")
    deduct_all: bool = False
    dump_cnf: Optional[Path] = None
    dump_constraints: Optional[Path] = None

    @classmethod
    def from_settings(cls, settings, **overrides) -> "ProverOptions":
        """Build options from `ProofKitSettings`, with non-None overrides applied."""
        values = {
            "time_limit": settings.time_limit,
            "max_len": settings.max_len,
            "num_abducts": settings.num_abducts,
            "abduct_enumeration_cap": settings.abduct_enumeration_cap,
            "consistency_bound": settings.consistency_bound,
            "branch_limit": settings.branch_limit,
            "search_share": settings.search_share,
            "solver": settings.solver,
            "pysat_engine": settings.pysat_engine,
            "external_solver": settings.external_solver,
            "seed": settings.seed,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


class Outcome(str, Enum):
    PROVED = "proved"
    PROVED_WITH_ABDUCTS = "proved_with_abducts"
    NO_CONSISTENT_ABDUCTS = "no_consistent_abducts"
    UNPROVABLE_AT_BOUND = "unprovable_at_bound"
    TIMEOUT = "timeout"


class AbductVerdict(str, Enum):
    CONSISTENT = "consistent"
    INCONSISTENT = "inconsistent"
    UNKNOWN = "unknown"


class AbductFinding(BaseModel):
    """Abduct tuple with the proof it enables and its consistency verdict."""
    abducts: List[Fact]
    proof: Proof
    verdict: AbductVerdict = AbductVerdict.UNKNOWN


class DeductFinding(BaseModel):
    """Concrete goal filling a wildcard conjecture, with its proof."""
    goal: ProofGoal
    proof: Proof


class LengthAttempt(BaseModel):
    """One encoding/solve round."""
    length: int
    status: str = Field(..., description="sat, unsat or timeout")
    variables: int = 0
    clauses: int = 0
    encode_seconds: float = 0.0
    solve_seconds: float = 0.0


class RunStatistics(BaseModel):
    attempts: List[LengthAttempt] = Field(default_factory=list)
    total_seconds: float = 0.0
    hints_used: int = 0
    models_enumerated: int = 0
    solver: str = ""

    @property
    def lengths_tried(self) -> List[int]:
        seen: List[int] = []
        for attempt in self.attempts:
            if attempt.length not in seen:
                seen.append(attempt.length)
        return seen


class ProverResult(BaseModel):
    """Outcome of `prove`."""
    outcome: Outcome
    proof: Optional[Proof] = None
    abducts: List[AbductFinding] = Field(default_factory=list)
    filled_goal: Optional[ProofGoal] = None
    deducts: List[DeductFinding] = Field(default_factory=list)
    statistics: RunStatistics = Field(default_factory=RunStatistics)

    @property
    def consistent_abducts(self) -> List[AbductFinding]:
        return [f for f in self.abducts if f.verdict == AbductVerdict.CONSISTENT]

    @property
    def proved(self) -> bool:
        return self.outcome in (Outcome.PROVED, Outcome.PROVED_WITH_ABDUCTS)


class RenderStyle(str, Enum):
    TEXT = "text"
    STRUCTURED = "structured"


class RenderOptions(BaseModel):
    style: RenderStyle = RenderStyle.TEXT
    show_instantiations: bool = True
    show_abducts: bool = True
