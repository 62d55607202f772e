"""QEDBYASSUMPTION and QEDBYEFQ steps."""

from typing import List

from proofkit.schemas.proof import StepKind
from proofkit.tptp.signature import BOTTOM

from ..constraints import FALSE, Constraint, all_of, any_of, eq, implies, ne
from .base import StepSection


class ClosingSection(StepSection):
    """
    Branch closes that read the step right before them.

    QEDBYASSUMPTION requires every atom of the goal instance in the preceding
    step's contents; QEDBYEFQ requires ⊥ there.
    """

    name = "closing"

    def emit_step(self, s: int) -> List[Constraint]:
        v = self.vars
        by_assumption = self.kind_is(s, StepKind.QEDBYASSUMPTION)
        by_efq = self.kind_is(s, StepKind.QEDBYEFQ)
        if s == v.first_body:
            return [implies(by_assumption, FALSE), implies(by_efq, FALSE)]

        found = [
            implies(
                ne(v.cpred[s][0][a], v.sentinel),
                any_of(self.slots_equal(s, 0, a, s - 1, 0, b) for b in range(v.conj)),
            )
            for a in range(v.conj)
        ]
        return [
            implies(by_assumption, all_of([
                self.usable_premise(s - 1),
                eq(v.cases[s], 0),
                *found,
            ])),
            implies(by_efq, all_of([
                self.usable_premise(s - 1),
                eq(v.cpred[s - 1][0][0], v.code(BOTTOM)),
                eq(v.cases[s], 0),
            ])),
        ]
