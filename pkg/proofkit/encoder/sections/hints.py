"""User hints as extra constraints on the proof sought."""

from typing import List, Optional, Sequence

from proofkit.logic.theory import ResolvedHint
from proofkit.schemas.proof import StepKind
from proofkit.utils.exceptions import EncodingError

from ..constraints import Constraint, all_of, any_of, eq
from ..layout import EncodingVariables
from .base import EncodingSection


class HintSection(EncodingSection):
    """
    A hint with a step index constrains body step `k` (1-based); without one,
    some body step has to satisfy it.
    """

    name = "hints"

    def __init__(self, variables: EncodingVariables, hints: Optional[Sequence[ResolvedHint]] = None):
        super().__init__(variables)
        self.hints = list(self.theory.hints if hints is None else hints)

    def emit(self) -> List[Constraint]:
        v = self.vars
        for hint in self.hints:
            if hint.step_index is None:
                self.add(any_of(self.at_step(hint, s) for s in v.body_steps()))
                continue
            s = v.first_body + hint.step_index - 1
            if s > v.last:
                raise EncodingError(
                    f"hint {hint.name} names step {hint.step_index} of a {v.params.length}-step proof"
                )
            self.add(self.at_step(hint, s))
        return self.constraints

    def at_step(self, hint: ResolvedHint, s: int) -> Constraint:
        v = self.vars
        parts = []
        if hint.atom_predicate is not None:
            args = [None if name is None else v.constant(name) for name in hint.atom_args]
            parts.append(self.first_slot_matches(s, v.code(hint.atom_predicate), args))
        if hint.axiom is not None:
            inst = v.inst[s]
            parts.append(self.kind_is(s, StepKind.MP))
            parts.append(eq(v.axiom[s], self.theory.axiom_index(hint.axiom)))
            parts.extend(
                eq(inst[i], v.constant(name)) for i, name in enumerate(hint.axiom_args) if name is not None
            )
        return all_of(parts)
