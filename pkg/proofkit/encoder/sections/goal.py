"""Goal contents of closing steps, goal wildcards and the final step."""

from typing import List

from proofkit.logic.goal import GoalAtom, Hole
from proofkit.logic.terms import Var
from proofkit.schemas.proof import StepKind
from proofkit.utils.exceptions import EncodingError

from ..constraints import (
    FALSE,
    TRUE,
    Constraint,
    all_of,
    eq,
    implies,
    ne,
    negate,
    one_of,
    same,
)
from .base import EncodingSection


class GoalSection(EncodingSection):
    """
    Every closing step states an instance of one goal disjunct.

    Wildcard predicates and arguments are read from the goal-fill variables,
    which are shared by all closing steps. Existential goal variables get a
    per-step witness, so case branches may close with different witnesses.
    """

    name = "goal"

    def emit(self) -> List[Constraint]:
        v = self.vars
        goal = self.theory.goal
        for atom in goal.atoms():
            if atom.arity > v.arity:
                raise EncodingError(
                    f"goal atom of arity {atom.arity} exceeds the signature's maximum {v.arity}"
                )
        for disjunct in goal.disjuncts:
            if len(disjunct) > v.conj:
                raise EncodingError(f"goal disjunct with {len(disjunct)} atoms exceeds {v.conj} slots")

        for s in v.body_steps():
            self._closing_contents(s)
        self._wildcard_domains()
        self._non_trivial_fill()
        self._final_step()
        self._no_ex_falso()
        return self.constraints

    def _closing_contents(self, s: int) -> None:
        v = self.vars
        is_goal = eq(v.goal[s], 1)
        disjuncts = self.theory.goal.disjuncts
        self.add(implies(is_goal, eq(v.cases[s], 0)))
        for i, disjunct in enumerate(disjuncts):
            chosen = all_of([is_goal, eq(v.goal_disj[s], i)])
            parts = [self._slot_is_goal_atom(s, a, atom) for a, atom in enumerate(disjunct)]
            parts.append(self.slots_inactive(s, 0, len(disjunct)))
            self.add(implies(chosen, all_of(parts)))

    def _slot_is_goal_atom(self, s: int, a: int, atom: GoalAtom) -> Constraint:
        v = self.vars
        parts = []
        if atom.pred_slot is not None:
            parts.append(same(v.cpred[s][0][a], v.goal_pred[atom.pred_slot]))
        else:
            parts.append(eq(v.cpred[s][0][a], v.code(atom.predicate)))
        for j, term in enumerate(atom.args):
            target = v.carg[s][0][a][j]
            if isinstance(term, Var):
                parts.append(same(target, v.goal_witness[s][term.index]))
            elif isinstance(term, Hole):
                parts.append(same(target, v.goal_arg[term.index]))
            else:
                parts.append(eq(target, v.constant(term.name)))
        return all_of(parts)

    def _wildcard_domains(self) -> None:
        v = self.vars
        allowed = v.atom_predicates()
        for atom in self.theory.goal.atoms():
            if atom.pred_slot is None:
                continue
            fitting = [code for code in allowed if v.arities[code] == atom.arity]
            self.add(one_of(v.goal_pred[atom.pred_slot], fitting))

    def _non_trivial_fill(self) -> None:
        """A filled single-atom goal may not be one of the assumptions."""
        if not self.theory.goal.has_wildcards:
            return
        for atom in self.theory.goal.single_atom_disjuncts():
            if not atom.is_wild:
                continue
            for fact in self.theory.assumptions:
                self.add(negate(self.goal_atom_is_fact(atom, fact.predicate, fact.args)))

    def goal_atom_is_fact(self, atom: GoalAtom, predicate: str, args) -> Constraint:
        """The filled goal atom equals a ground fact (existential positions match anything)."""
        v = self.vars
        if atom.arity != len(args):
            return FALSE
        parts = []
        if atom.pred_slot is not None:
            parts.append(eq(v.goal_pred[atom.pred_slot], v.code(predicate)))
        elif atom.predicate != predicate:
            return FALSE
        for term, name in zip(atom.args, args):
            if isinstance(term, Hole):
                parts.append(eq(v.goal_arg[term.index], v.constant(name)))
            elif isinstance(term, Var):
                parts.append(TRUE)
            elif term.name != name:
                return FALSE
        return all_of(parts)

    def _final_step(self) -> None:
        v = self.vars
        last = v.last
        self.add(eq(v.nesting[last], 1))
        self.add(eq(v.goal[last], 1))

    def _no_ex_falso(self) -> None:
        """With abducts, no branch of the proof may close from ⊥."""
        v = self.vars
        if not v.params.num_abducts:
            return
        for s in v.body_steps():
            self.add(ne(v.kind[s], StepKind.QEDBYEFQ.code))
