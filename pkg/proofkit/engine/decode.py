"""Reading proofs back out of solver models."""

from typing import Dict, List, Optional, Tuple

from proofkit.encoder import Encoding, EncodingVariables
from proofkit.logic.goal import GoalSpec
from proofkit.schemas.proof import (
    Fact,
    PremiseRef,
    PremiseSource,
    Proof,
    ProofGoal,
    ProofStep,
    StepKind,
)
from proofkit.solver.cnf import Model
from proofkit.utils.exceptions import ProofCheckError


class ProofDecoder:
    """
    Turns a model of an encoding into a `Proof`.

    Abduct slots become `Proof.abducts`; body steps become proof steps.
    ASSUMPTION steps that nothing reads are dropped and step references are
    renumbered.
    """

    def __init__(self, encoding: Encoding, model: Model):
        self.encoding = encoding
        self.vars: EncodingVariables = encoding.variables
        self.model = model
        self.signature = encoding.theory.signature

    def value(self, var) -> int:
        try:
            return self.model[var.name]
        except KeyError:
            raise ProofCheckError(f"model has no value for {var.name}") from None

    def atom(self, s: int, d: int, a: int) -> Optional[Fact]:
        """The atom in slot (d, a) of step s, or None for an inactive slot."""
        v = self.vars
        code = self.value(v.cpred[s][d][a])
        if code == v.sentinel:
            return None
        arity = v.arities[code]
        args = tuple(self.encoding.pool.name(self.value(x)) for x in v.carg[s][d][a][:arity])
        return Fact(predicate=self.signature.name_of(code), args=args)

    def conjunction(self, s: int, d: int) -> List[Fact]:
        facts = []
        for a in range(self.vars.conj):
            fact = self.atom(s, d, a)
            if fact is None:
                break
            facts.append(fact)
        return facts

    def abducts(self) -> List[Fact]:
        found = []
        for s in self.vars.abduct_steps():
            fact = self.atom(s, 0, 0)
            if fact is None:
                raise ProofCheckError(f"abduct slot {s} holds no atom")
            found.append(fact)
        return found

    def filled_goal(self) -> GoalSpec:
        goal = self.encoding.theory.goal
        if not goal.has_wildcards:
            return goal
        predicates = [self.signature.name_of(self.value(x)) for x in self.vars.goal_pred]
        constants = [self.encoding.pool.name(self.value(x)) for x in self.vars.goal_arg]
        return goal.fill(predicates, constants)

    def _raw_step(self, s: int) -> Tuple[ProofStep, List[int]]:
        """Step s with premise references still as raw `From` values."""
        v = self.vars
        kind = StepKind.from_code(self.value(v.kind[s]))
        cases = bool(self.value(v.cases[s]))
        contents = [self.conjunction(s, 0)]
        if not contents[0]:
            raise ProofCheckError(f"step {s} ({kind.value}) has no contents")
        if cases:
            second = self.conjunction(s, 1)
            if not second:
                raise ProofCheckError(f"case split at step {s} has no second case")
            contents.append(second)

        axiom_name = None
        instantiation: Dict[str, str] = {}
        sources: List[int] = []
        if kind == StepKind.MP:
            axiom = self.encoding.theory.axioms[self.value(v.axiom[s])]
            axiom_name = axiom.name
            for i, name in enumerate(axiom.var_names):
                instantiation[name] = self.encoding.pool.name(self.value(v.inst[s][i]))
            sources = [self.value(v.from_[s][k]) for k in range(len(axiom.premises))]

        step = ProofStep(
            kind=kind,
            nesting=self.value(v.nesting[s]),
            cases=cases,
            contents=contents,
            axiom=axiom_name,
            instantiation=instantiation,
            is_goal=bool(self.value(v.goal[s])),
        )
        return step, sources

    def _reference(self, raw: int, renumber: Dict[int, int]) -> PremiseRef:
        v = self.vars
        if raw < v.num_assumptions:
            return PremiseRef(source=PremiseSource.ASSUMPTION, index=raw)
        t = raw - v.num_assumptions
        if t < v.first_body:
            return PremiseRef(source=PremiseSource.ABDUCT, index=t)
        if t not in renumber:
            raise ProofCheckError(f"premise refers to dropped step {t}")
        return PremiseRef(source=PremiseSource.STEP, index=renumber[t])

    def decode(self) -> Proof:
        v = self.vars
        raw: Dict[int, Tuple[ProofStep, List[int]]] = {s: self._raw_step(s) for s in v.body_steps()}

        referenced = set()
        for step, sources in raw.values():
            referenced.update(r - v.num_assumptions for r in sources if r >= v.num_assumptions)
        kept = []
        for s in v.body_steps():
            step = raw[s][0]
            following = raw.get(s + 1, (None, []))[0]
            droppable = (
                step.kind == StepKind.ASSUMPTION
                and s not in referenced
                and not (following is not None and following.kind == StepKind.QEDBYASSUMPTION)
            )
            if not droppable:
                kept.append(s)
        renumber = {s: i for i, s in enumerate(kept)}

        steps = []
        for s in kept:
            step, sources = raw[s]
            if sources:
                step = step.model_copy(update={
                    "from_": [self._reference(r, renumber) for r in sources],
                })
            steps.append(step)

        goal = self.filled_goal()
        return Proof(
            constants=list(self.encoding.pool.inputs),
            assumptions=list(self.encoding.theory.assumptions),
            abducts=self.abducts(),
            goal=goal.to_proof_goal(),
            steps=steps,
        )


def reconstruct_proof(model: Model, encoding: Encoding) -> Proof:
    """
    Read a proof off a model of `encoding`.

    Raises:
        ProofCheckError: If the model references an inactive slot or a dropped step
    """
    return ProofDecoder(encoding, model).decode()


def filled_goal(model: Model, encoding: Encoding) -> ProofGoal:
    """The concrete goal a model of a wildcard encoding chooses."""
    return ProofDecoder(encoding, model).filled_goal().to_proof_goal()
