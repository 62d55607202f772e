"""Extended modus ponens steps."""

from typing import List, Set

from proofkit.logic.terms import CLFormula, Var
from proofkit.schemas.proof import StepKind
from proofkit.tptp.signature import BOTTOM

from ..constraints import (
    FALSE,
    Constraint,
    all_of,
    any_of,
    eq,
    implies,
    lt,
    ne,
    one_of,
    same,
)
from .base import StepSection


class ModusPonensSection(StepSection):
    """
    MP steps: axiom choice, instantiation, premise sourcing and contents.

    The instantiated premises are materialized in `PremisePredicate` and
    `PremiseArgument`, so premise sourcing does not depend on the axiom.
    Sources are compared against `PremiseMatch`, the premise arguments
    permuted by a member of the predicate's symmetry group.
    """

    name = "modus-ponens"

    def emit_step(self, s: int) -> List[Constraint]:
        v = self.vars
        out: List[Constraint] = []
        is_mp = self.kind_is(s, StepKind.MP)
        if not self.theory.axioms:
            return [implies(is_mp, FALSE)]

        for index, axiom in enumerate(self.theory.axioms):
            gate = all_of([is_mp, eq(v.axiom[s], index)])
            out.append(implies(gate, all_of(self._axiom_constraints(s, axiom))))

        out.extend(self._premise_symmetry(s))
        out.extend(self._premise_sources(s))
        return out

    def _axiom_constraints(self, s: int, axiom: CLFormula) -> List[Constraint]:
        v = self.vars
        inst = v.inst[s]
        parts: List[Constraint] = [eq(v.cases[s], 1 if axiom.is_case_split else 0)]

        born = self.pool.born_before(s)
        for i in range(len(inst)):
            if i < axiom.num_univ:
                parts.append(lt(inst[i], born))
            elif i < axiom.num_vars:
                parts.append(eq(inst[i], self.pool.fresh_index(s, i - axiom.num_univ)))
            else:
                parts.append(eq(inst[i], 0))

        bound: Set[int] = {
            arg.index for atom in axiom.premises for arg in atom.args if isinstance(arg, Var)
        }
        for i in range(axiom.num_univ):
            if i not in bound:
                parts.extend(self._witness_born(s, inst[i]))

        for k in range(len(v.premise_pred[s])):
            pred = v.premise_pred[s][k]
            args = v.premise_arg[s][k]
            if k < len(axiom.premises):
                atom = axiom.premises[k]
                parts.append(eq(pred, v.code(atom.predicate)))
                for j, x in enumerate(args):
                    if j >= atom.arity:
                        parts.append(eq(x, 0))
                    elif isinstance(atom.args[j], Var):
                        parts.append(same(x, inst[atom.args[j].index]))
                    else:
                        parts.append(eq(x, v.constant(atom.args[j].name)))
            else:
                parts.append(eq(pred, v.sentinel))
                parts.extend(eq(x, 0) for x in args)
                parts.append(eq(v.from_[s][k], 0))

        parts.extend(self._contents(s, axiom))
        return parts

    def _witness_born(self, s: int, var) -> List[Constraint]:
        """A universal variable no premise binds may only take a witness that exists."""
        v = self.vars
        pool = self.pool
        if not pool.block_width:
            return []
        out = []
        for c in range(pool.num_inputs, pool.born_before(s)):
            t, i = divmod(c - pool.num_inputs, pool.block_width)
            if t < v.first_body:
                out.append(ne(var, c))
                continue
            owners = [n for n, f in enumerate(self.theory.axioms) if len(f.exist_vars) > i]
            out.append(implies(
                eq(var, c),
                all_of([self.kind_is(t, StepKind.MP), one_of(v.axiom[t], owners)]),
            ))
        return out

    def _contents(self, s: int, axiom: CLFormula) -> List[Constraint]:
        v = self.vars
        inst = v.inst[s]
        if axiom.is_falsum:
            return [
                self.slot_holds(s, 0, 0, v.code(BOTTOM), []),
                self.slots_inactive(s, 0, 1),
            ]
        if axiom.is_case_split:
            first, second = axiom.disjuncts
            return [
                self.slot_is_atom(s, 0, 0, first.atoms[0], inst),
                self.slots_inactive(s, 0, 1),
                self.slot_is_atom(s, 1, 0, second.atoms[0], inst),
            ]
        atoms = axiom.disjuncts[0].atoms
        parts = [self.slot_is_atom(s, 0, a, atom, inst) for a, atom in enumerate(atoms)]
        parts.append(self.slots_inactive(s, 0, len(atoms)))
        return parts

    def _premise_sources(self, s: int) -> List[Constraint]:
        """Each used premise is an assumption or an atom of a visible earlier step."""
        v = self.vars
        out: List[Constraint] = []
        is_mp = self.kind_is(s, StepKind.MP)
        for k, source in enumerate(v.from_[s]):
            pred = v.premise_pred[s][k]
            args = v.premise_match[s][k]
            used = all_of([is_mp, ne(pred, v.sentinel)])
            out.append(implies(used, lt(source, v.step_ref(s))))

            for i, fact in enumerate(self.theory.assumptions):
                match = all_of([
                    eq(pred, v.code(fact.predicate)),
                    *(eq(args[j], v.constant(name)) for j, name in enumerate(fact.args)),
                ])
                out.append(implies(all_of([used, eq(source, i)]), match))

            for t in range(s):
                match = any_of(
                    all_of([
                        same(v.cpred[t][0][a], pred),
                        *(same(x, y) for x, y in zip(v.carg[t][0][a], args)),
                    ])
                    for a in range(v.conj)
                )
                out.append(implies(
                    all_of([used, eq(source, v.step_ref(t))]),
                    all_of([eq(v.visible[(t, s)], 1), self.usable_premise(t), match]),
                ))
        return out

    def _premise_symmetry(self, s: int) -> List[Constraint]:
        """`PremiseMatch` is `PremiseArgument` permuted by the chosen group member."""
        v = self.vars
        out: List[Constraint] = []
        groups = {v.code(name): group for name, group in v.symmetries.items()}
        for k, perm in enumerate(v.premise_perm[s]):
            pred = v.premise_pred[s][k]
            args = v.premise_arg[s][k]
            match = v.premise_match[s][k]
            out.append(implies(eq(perm, 0), all_of(same(m, x) for m, x in zip(match, args))))
            for i in range(1, v.group_size):
                owners = [code for code, group in groups.items() if len(group) > i]
                out.append(implies(eq(perm, i), one_of(pred, owners)))
                for code in owners:
                    image = groups[code][i]
                    out.append(implies(
                        all_of([eq(pred, code), eq(perm, i)]),
                        all_of(
                            same(m, args[image[j]] if j < len(image) else args[j])
                            for j, m in enumerate(match)
                        ),
                    ))
        return out
