"""Hint models: partial descriptions of the proof being sought."""

from typing import List, Optional, Union

from pydantic import BaseModel, Field, model_validator


HintArgument = Union[int, str, None]


class AtomPattern(BaseModel):
    """
    Atom some proof step must contain.

    Arguments are constant names, 0-based indices into the conjecture's
    universally quantified variables, or None for a wildcard position.
    """

    predicate: str = Field(..., description="Predicate symbol")
    args: List[HintArgument] = Field(default_factory=list, description="Argument patterns")

    model_config = {"frozen": True}


class AxiomPattern(BaseModel):
    """Axiom some MP step must apply, optionally with a pinned instantiation."""

    axiom: str = Field(..., description="Axiom name")
    args: Optional[List[HintArgument]] = Field(
        None, description="One pattern per universal variable of the axiom"
    )

    model_config = {"frozen": True}


class Hint(BaseModel):
    """A `fof(name, hint, atom, step, axiom)` clause."""

    name: str
    atom_pattern: Optional[AtomPattern] = None
    step_index: Optional[int] = Field(None, ge=1, description="1-based body step")
    axiom_pattern: Optional[AxiomPattern] = None

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _not_vacuous(self) -> "Hint":
        if self.atom_pattern is None and self.axiom_pattern is None:
            raise ValueError("vacuous hint")
        return self
