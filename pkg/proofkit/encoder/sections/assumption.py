"""ASSUMPTION steps in the proof body."""

from typing import List

from proofkit.schemas.proof import StepKind

from ..constraints import Constraint, all_of, any_of, eq, implies
from .base import StepSection


class AssumptionSection(StepSection):
    """A body ASSUMPTION step restates one assumption or one abduct."""

    name = "assumption"

    def emit_step(self, s: int) -> List[Constraint]:
        v = self.vars
        sources = [
            self.slot_is_fact(s, 0, 0, fact.predicate, fact.args)
            for fact in self.theory.assumptions
        ]
        sources.extend(self.slots_equal(s, 0, 0, t, 0, 0) for t in v.abduct_steps())
        return [implies(
            self.kind_is(s, StepKind.ASSUMPTION),
            all_of([eq(v.cases[s], 0), self.slots_inactive(s, 0, 1), any_of(sources)]),
        )]
