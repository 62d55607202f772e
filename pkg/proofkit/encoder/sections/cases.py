"""Case splits: FIRSTCASE, SECONDCASE and QEDBYCASES steps."""

from typing import List

from proofkit.schemas.proof import StepKind

from ..constraints import (
    FALSE,
    Constraint,
    all_of,
    any_of,
    at_most,
    eq,
    implies,
    less,
    lt,
    negate,
    ne,
    offset,
    same,
)
from .base import CLOSING_KINDS, StepSection


class CaseSplitSection(StepSection):
    """
    Branch bookkeeping of case splits.

    `CaseOrigin(s)` of a SECONDCASE or QEDBYCASES step names the MP step that
    opened the split. The first branch starts right after that step one level
    deeper; the second branch starts at the SECONDCASE step on the same level.
    """

    name = "case-split"

    def emit_step(self, s: int) -> List[Constraint]:
        out: List[Constraint] = []
        out.append(self._first_case(s))
        out.extend(self._second_case(s))
        out.extend(self._qed_by_cases(s))
        return out

    def _first_case(self, s: int) -> Constraint:
        v = self.vars
        is_first = self.kind_is(s, StepKind.FIRSTCASE)
        if s == v.first_body:
            return implies(is_first, FALSE)
        return implies(is_first, all_of([
            self.kind_is(s - 1, StepKind.MP),
            eq(v.cases[s - 1], 1),
            eq(v.cases[s], 0),
            self.slots_equal(s, 0, 0, s - 1, 0, 0),
            self.slots_inactive(s, 0, 1),
        ]))

    def _second_case(self, s: int) -> List[Constraint]:
        v = self.vars
        n = v.nesting
        is_second = self.kind_is(s, StepKind.SECONDCASE)
        origin = v.case_origin[s]
        out = [implies(is_second, lt(origin, s - 1))]
        for t in range(origin.hi):
            if t < v.first_body or t + 1 >= s - 1:
                out.append(implies(is_second, ne(origin, t)))
                continue
            inside = range(t + 2, s)
            out.append(implies(all_of([is_second, eq(origin, t)]), all_of([
                self.kind_is(t, StepKind.MP),
                eq(v.cases[t], 1),
                same(n[t + 1], n[s]),
                self.kind_in(s - 1, CLOSING_KINDS),
                same(n[s], n[s - 1]),
                *(at_most(n[s], n[u]) for u in inside),
                *(negate(all_of([self.kind_is(u, StepKind.SECONDCASE), same(n[u], n[s])])) for u in inside),
                eq(v.cases[s], 0),
                self.slots_equal(s, 0, 0, t, 1, 0),
                self.slots_inactive(s, 0, 1),
            ])))
        return out

    def _qed_by_cases(self, s: int) -> List[Constraint]:
        v = self.vars
        n = v.nesting
        is_qed = self.kind_is(s, StepKind.QEDBYCASES)
        origin = v.case_origin[s]
        out = []
        for t in range(origin.hi):
            if t < v.first_body or t + 4 > s:
                out.append(implies(is_qed, ne(origin, t)))
                continue
            out.append(implies(all_of([is_qed, eq(origin, t)]), all_of([
                self.kind_is(t, StepKind.MP),
                eq(v.cases[t], 1),
                same(n[t], n[s]),
                self.kind_in(s - 1, CLOSING_KINDS),
                offset(n[s - 1], n[s], 1),
                *(less(n[t], n[u]) for u in range(t + 1, s)),
                any_of(
                    all_of([self.kind_is(u, StepKind.SECONDCASE), eq(v.case_origin[u], t)])
                    for u in range(t + 2, s - 1)
                ),
                eq(v.cases[s], 0),
            ])))
        return out
