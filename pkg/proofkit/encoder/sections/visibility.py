"""Branch visibility between steps."""

from typing import List

from proofkit.schemas.proof import StepKind

from ..constraints import Constraint, all_of, at_most, eq, implies, negate, same
from .base import StepSection


class VisibilitySection(StepSection):
    """
    `Visible(t, s)` may hold only if step `t`'s branch still encloses step `s`.

    Leaving a branch shows in the nesting: either the level drops below the
    level of `t`, or a SECONDCASE starts the sibling branch on that level.
    """

    name = "visibility"

    def emit_step(self, s: int) -> List[Constraint]:
        v = self.vars
        n = v.nesting
        out = []
        for t in range(s):
            later = range(t + 1, s + 1)
            out.append(implies(eq(v.visible[(t, s)], 1), all_of([
                *(at_most(n[t], n[u]) for u in later),
                *(
                    negate(all_of([self.kind_is(u, StepKind.SECONDCASE), same(n[u], n[t])]))
                    for u in later
                ),
            ])))
        return out
