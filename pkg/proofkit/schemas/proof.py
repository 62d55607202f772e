"""Linear proof objects."""

from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator


class StepKind(str, Enum):
    """Proof step kinds; the declaration order fixes their numeric codes."""
    ASSUMPTION = "ASSUMPTION"
    MP = "MP"
    FIRSTCASE = "FIRSTCASE"
    SECONDCASE = "SECONDCASE"
    QEDBYCASES = "QEDBYCASES"
    QEDBYASSUMPTION = "QEDBYASSUMPTION"
    QEDBYEFQ = "QEDBYEFQ"

    @property
    def code(self) -> int:
        return STEP_KINDS.index(self)

    @classmethod
    def from_code(cls, code: int) -> "StepKind":
        return STEP_KINDS[code]

    @property
    def is_closing(self) -> bool:
        return self in CLOSING_KINDS


STEP_KINDS: Tuple[StepKind, ...] = tuple(StepKind)
CLOSING_KINDS = frozenset(
    {StepKind.QEDBYCASES, StepKind.QEDBYASSUMPTION, StepKind.QEDBYEFQ}
)


class Fact(BaseModel):
    """Ground atom: predicate name plus constant names."""
    predicate: str
    args: Tuple[str, ...] = ()

    model_config = {"frozen": True}

    def __str__(self) -> str:
        if not self.args:
            return self.predicate
        return f"{self.predicate}({', '.join(self.args)})"


class PremiseSource(str, Enum):
    """Where an MP premise comes from."""
    ASSUMPTION = "assumption"
    ABDUCT = "abduct"
    STEP = "step"


class PremiseRef(BaseModel):
    """Reference to an assumption, an abduct or an earlier step (0-based)."""
    source: PremiseSource
    index: int = Field(..., ge=0)

    model_config = {"frozen": True}


class ProofStep(BaseModel):
    """
    One step of a linear proof.

    `contents` holds one conjunction, or two single-atom conjunctions when
    `cases` is set (the step opens a case split).
    """
    kind: StepKind
    nesting: int = Field(..., ge=1)
    cases: bool = False
    contents: List[List[Fact]] = Field(default_factory=list)
    axiom: Optional[str] = Field(None, description="Axiom applied (MP only)")
    from_: List[PremiseRef] = Field(default_factory=list, alias="from")
    instantiation: Dict[str, str] = Field(
        default_factory=dict, description="Axiom variable -> constant (MP only)"
    )
    is_goal: bool = False

    model_config = {"populate_by_name": True}

    @model_validator(mode="after")
    def _mp_fields(self) -> "ProofStep":
        if self.kind != StepKind.MP and (self.axiom or self.from_ or self.instantiation):
            raise ValueError(f"{self.kind.value} step carries MP fields")
        if self.kind == StepKind.MP and not self.axiom:
            raise ValueError("MP step without an axiom")
        if self.cases and self.kind != StepKind.MP:
            raise ValueError("only MP steps open case splits")
        return self

    def facts(self) -> List[Fact]:
        """Atoms of the first conjunction (the visible contents of a non-cases step)."""
        return list(self.contents[0]) if self.contents else []


class ProofGoal(BaseModel):
    """Goal disjunction; arguments named in `exist_vars` are existential."""
    exist_vars: List[str] = Field(default_factory=list)
    disjuncts: List[List[Fact]] = Field(default_factory=list)

    def __str__(self) -> str:
        body = " ∨ ".join(" ∧ ".join(str(f) for f in conj) for conj in self.disjuncts) or "⊥"
        if self.exist_vars:
            return f"∃ {', '.join(self.exist_vars)}. {body}"
        return body


class Proof(BaseModel):
    """A complete proof: context, goal and the step sequence."""
    constants: List[str] = Field(default_factory=list)
    assumptions: List[Fact] = Field(default_factory=list)
    abducts: List[Fact] = Field(default_factory=list)
    goal: ProofGoal
    steps: List[ProofStep]

    @model_validator(mode="after")
    def _last_step(self) -> "Proof":
        if not self.steps:
            raise ValueError("proof has no steps")
        last = self.steps[-1]
        if last.nesting != 1:
            raise ValueError("last step must have nesting 1")
        if not last.kind.is_closing:
            raise ValueError(f"last step is {last.kind.value}, not a QED step")
        return self

    def derived_facts(self) -> List[Fact]:
        """Atoms introduced by MP steps, in order."""
        facts: List[Fact] = []
        for step in self.steps:
            if step.kind == StepKind.MP:
                for conjunct in step.contents:
                    facts.extend(conjunct)
        return facts
