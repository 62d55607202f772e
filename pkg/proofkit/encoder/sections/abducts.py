"""Abduct slots: leading assumption steps whose atom the solver chooses."""

from typing import List, Sequence

from proofkit.logic.goal import GoalAtom, Hole
from proofkit.logic.terms import Var
from proofkit.schemas.proof import StepKind

from ..constraints import (
    Constraint,
    IntVar,
    all_of,
    any_of,
    eq,
    less,
    lt,
    negate,
    one_of,
    same,
)
from .base import EncodingSection


class AbductSection(EncodingSection):
    """
    Each abduct slot is a top-level ASSUMPTION holding one atom over input
    constants. It is not ⊤ or ⊥, not an assumption and not a single-atom goal
    disjunct. Several slots are kept in strictly increasing order.
    """

    name = "abducts"

    def emit(self) -> List[Constraint]:
        v = self.vars
        for s in v.abduct_steps():
            self._slot(s)
        slots = list(v.abduct_steps())
        for left, right in zip(slots, slots[1:]):
            self.add(_lex_less(self._key(left), self._key(right)))
        return self.constraints

    def _key(self, s: int) -> List[IntVar]:
        v = self.vars
        return [v.cpred[s][0][0], *v.carg[s][0][0]]

    def _slot(self, s: int) -> None:
        v = self.vars
        self.add(self.kind_is(s, StepKind.ASSUMPTION))
        self.add(eq(v.nesting[s], 1))
        self.add(eq(v.cases[s], 0))
        self.add(eq(v.goal[s], 0))
        self.add(eq(v.case_origin[s], 0))
        self.add(self.slots_inactive(s, 0, 1))

        n_inputs = self.pool.num_inputs
        allowed = [
            code for code in v.atom_predicates()
            if n_inputs or v.arities[code] == 0
        ]
        self.add(one_of(v.cpred[s][0][0], allowed))
        if n_inputs:
            for x in v.carg[s][0][0]:
                self.add(lt(x, n_inputs))

        for fact in self.theory.assumptions:
            self.add(negate(self.slot_is_fact(s, 0, 0, fact.predicate, fact.args)))
        for atom in self.theory.goal.single_atom_disjuncts():
            self.add(negate(self._is_goal_atom(s, atom)))

    def _is_goal_atom(self, s: int, atom: GoalAtom) -> Constraint:
        """Slot matches a goal atom; existential positions match any constant."""
        v = self.vars
        parts = []
        if atom.pred_slot is not None:
            parts.append(same(v.cpred[s][0][0], v.goal_pred[atom.pred_slot]))
        else:
            parts.append(eq(v.cpred[s][0][0], v.code(atom.predicate)))
        for j, term in enumerate(atom.args):
            target = v.carg[s][0][0][j]
            if isinstance(term, Hole):
                parts.append(same(target, v.goal_arg[term.index]))
            elif not isinstance(term, Var):
                parts.append(eq(target, v.constant(term.name)))
        return all_of(parts)


def _lex_less(left: Sequence[IntVar], right: Sequence[IntVar]) -> Constraint:
    """Strict lexicographic order of two equally long variable tuples."""
    options = []
    for k in range(len(left)):
        prefix = [same(x, y) for x, y in zip(left[:k], right[:k])]
        options.append(all_of([*prefix, less(left[k], right[k])]))
    return any_of(options)
