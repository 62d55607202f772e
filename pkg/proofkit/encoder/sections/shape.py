"""Step skeleton: contents shape, nesting transitions and step successors."""

from typing import List

from proofkit.schemas.proof import StepKind

from ..constraints import Constraint, all_of, eq, implies, ne, offset, one_of, same
from .base import CLOSING_KINDS, EncodingSection, StepSection


class ContentsShapeSection(EncodingSection):
    """
    Canonical contents layout for every step.

    Active slots come first; arguments past a predicate's arity and all
    arguments of an inactive slot are 0; second-disjunct slots are used only
    by case-splitting steps, and only their first slot.
    """

    name = "contents-shape"

    def emit(self) -> List[Constraint]:
        v = self.vars
        for s in range(v.num_steps):
            self._check_slots(s)
            self.add(ne(v.cpred[s][0][0], v.sentinel))
            self.add(self.slots_inactive(s, 1, 1))
            self.add(implies(eq(v.cases[s], 0), self.slot_inactive(s, 1, 0)))
            self.add(implies(eq(v.cases[s], 1), ne(v.cpred[s][1][0], v.sentinel)))
        return self.constraints

    def _check_slots(self, s: int) -> None:
        v = self.vars
        for d in range(2):
            for a in range(v.conj):
                if a + 1 < v.conj:
                    self.add(implies(self.slot_inactive(s, d, a), self.slot_inactive(s, d, a + 1)))
                if not v.arity:
                    continue
                args = v.carg[s][d][a]
                for code, arity in enumerate(v.arities):
                    if arity < v.arity:
                        self.add(implies(
                            eq(v.cpred[s][d][a], code),
                            all_of(eq(args[j], 0) for j in range(arity, v.arity)),
                        ))
                self.add(implies(
                    self.slot_inactive(s, d, a),
                    all_of(eq(x, 0) for x in args),
                ))


class StepSkeletonSection(StepSection):
    """Kind-independent rules of a body step."""

    name = "step-skeleton"

    def emit_step(self, s: int) -> List[Constraint]:
        v = self.vars
        out: List[Constraint] = []
        closing = self.kind_in(s, CLOSING_KINDS)

        out.append(implies(closing, eq(v.goal[s], 1)))
        out.append(implies(eq(v.goal[s], 1), closing))
        out.append(implies(eq(v.cases[s], 1), self.kind_is(s, StepKind.MP)))

        if s == v.first_body:
            out.append(self.kind_in(s, (StepKind.ASSUMPTION, StepKind.MP)))
            out.append(eq(v.nesting[s], 1))
        else:
            out.append(implies(
                self.kind_is(s, StepKind.FIRSTCASE), offset(v.nesting[s], v.nesting[s - 1], 1)
            ))
            out.append(implies(
                self.kind_is(s, StepKind.QEDBYCASES), offset(v.nesting[s], v.nesting[s - 1], -1)
            ))
            out.append(implies(
                one_of(v.kind[s], [k.code for k in StepKind if k not in (StepKind.FIRSTCASE, StepKind.QEDBYCASES)]),
                same(v.nesting[s], v.nesting[s - 1]),
            ))

        if s < v.last:
            out.append(implies(eq(v.cases[s], 1), self.kind_is(s + 1, StepKind.FIRSTCASE)))
            out.append(implies(
                closing, self.kind_in(s + 1, (StepKind.SECONDCASE, StepKind.QEDBYCASES))
            ))

        out.extend(self._unused(s))
        return out

    def _unused(self, s: int) -> List[Constraint]:
        """Variables that carry no meaning for the step's kind are pinned."""
        v = self.vars
        not_mp = ne(v.kind[s], StepKind.MP.code)
        pinned = [eq(v.axiom[s], 0)]
        pinned.extend(eq(x, 0) for x in v.from_[s])
        pinned.extend(eq(x, 0) for x in v.inst[s])
        pinned.extend(eq(x, v.sentinel) for x in v.premise_pred[s])
        pinned.extend(eq(x, 0) for row in v.premise_arg[s] for x in row)
        if v.premise_perm[s]:
            pinned.extend(eq(x, 0) for x in v.premise_perm[s])
            pinned.extend(eq(x, 0) for row in v.premise_match[s] for x in row)
        out = [implies(not_mp, all_of(pinned))]

        origin_kinds = [StepKind.SECONDCASE.code, StepKind.QEDBYCASES.code]
        out.append(implies(
            one_of(v.kind[s], [k.code for k in StepKind if k.code not in origin_kinds]),
            eq(v.case_origin[s], 0),
        ))
        out.append(implies(
            eq(v.goal[s], 0),
            all_of([eq(v.goal_disj[s], 0), *(eq(x, 0) for x in v.goal_witness[s])]),
        ))
        return out
