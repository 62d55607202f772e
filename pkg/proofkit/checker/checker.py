"""Replay checker for linear coherent-logic proofs."""

from typing import Dict, List, Optional, Sequence, Set, Union

from pydantic import BaseModel, Field

from proofkit.logic.symmetry import SymmetryGroups, symmetry_groups, variants
from proofkit.logic.terms import CLFormula, instantiate
from proofkit.schemas.proof import Fact, PremiseSource, Proof, ProofStep, StepKind
from proofkit.tptp.signature import BOTTOM
from proofkit.utils.exceptions import InstantiationError

from .scope import branch_paths, is_visible, usable_as_premise


class CheckOk(BaseModel):
    """The proof replays."""
    notes: List[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return True


class Violation(BaseModel):
    """First step that fails to replay, with a machine-readable reason code."""
    step: int
    reason: str
    detail: str = ""

    @property
    def ok(self) -> bool:
        return False

    def __str__(self) -> str:
        suffix = f": {self.detail}" if self.detail else ""
        return f"step {self.step}: {self.reason}{suffix}"


CheckResult = Union[CheckOk, Violation]


class _Frame:
    __slots__ = ("origin", "branch")

    def __init__(self, origin: int, branch: int):
        self.origin = origin
        self.branch = branch


class _Violated(Exception):
    def __init__(self, step: int, reason: str, detail: str = ""):
        super().__init__(reason)
        self.violation = Violation(step=step, reason=reason, detail=detail)


def _match_goal(contents: List[Fact], proof: Proof) -> bool:
    """Whether `contents` is an instance of one goal disjunct (positional)."""
    exist = set(proof.goal.exist_vars)
    for disjunct in proof.goal.disjuncts:
        if len(disjunct) != len(contents):
            continue
        binding: Dict[str, str] = {}
        matched = True
        for pattern, fact in zip(disjunct, contents):
            if pattern.predicate != fact.predicate or len(pattern.args) != len(fact.args):
                matched = False
                break
            for p_arg, f_arg in zip(pattern.args, fact.args):
                if p_arg in exist:
                    if binding.setdefault(p_arg, f_arg) != f_arg:
                        matched = False
                        break
                elif p_arg != f_arg:
                    matched = False
                    break
            if not matched:
                break
        if matched:
            return True
    return False


class ProofChecker:
    """
    Replays a proof against a theory.

    With `strict` (the default) QEDBYASSUMPTION and QEDBYEFQ must find their
    facts in the immediately preceding step; otherwise any visible fact is
    accepted and a note is recorded. Proofs with abducts may not close any
    branch by QEDBYEFQ.

    A premise matches a fact equal to it modulo the argument symmetries the
    axioms state.
    """

    def __init__(
        self,
        axioms: Sequence[CLFormula],
        strict: bool = True,
        symmetries: Optional[SymmetryGroups] = None,
    ):
        self.axioms: Dict[str, CLFormula] = {f.name: f for f in axioms}
        self.strict = strict
        self.symmetries = symmetries if symmetries is not None else symmetry_groups(axioms)

    def check(self, proof: Proof) -> CheckResult:
        notes: List[str] = []
        try:
            self._replay(proof, notes)
        except _Violated as e:
            return e.violation
        return CheckOk(notes=notes)

    def _replay(self, proof: Proof, notes: List[str]) -> None:
        steps = proof.steps
        if not steps:
            raise _Violated(0, "empty-proof")
        paths = branch_paths(steps)
        stack: List[_Frame] = []
        known_constants: Set[str] = set(proof.constants)
        for fact in [*proof.assumptions, *proof.abducts]:
            known_constants.update(fact.args)
        for disjunct in proof.goal.disjuncts:
            for fact in disjunct:
                known_constants.update(a for a in fact.args if a not in proof.goal.exist_vars)
        seen_constants = set(known_constants)

        for s, step in enumerate(steps):
            previous = steps[s - 1] if s > 0 else None
            if previous is not None and previous.kind.is_closing:
                if step.kind not in (StepKind.SECONDCASE, StepKind.QEDBYCASES):
                    raise _Violated(s, "step-after-close", f"{step.kind.value} follows a closed branch")
            if previous is not None and previous.cases and step.kind != StepKind.FIRSTCASE:
                raise _Violated(s, "split-not-opened")
            if step.is_goal != step.kind.is_closing:
                raise _Violated(s, "goal-flag")

            depth = len(stack) + 1
            if step.kind == StepKind.ASSUMPTION:
                self._expect_nesting(s, step, depth)
                self._check_assumption(s, step, proof)
            elif step.kind == StepKind.MP:
                self._expect_nesting(s, step, depth)
                self._check_mp(s, step, proof, paths, seen_constants)
            elif step.kind == StepKind.FIRSTCASE:
                if previous is None or previous.kind != StepKind.MP or not previous.cases:
                    raise _Violated(s, "no-open-split")
                stack.append(_Frame(s - 1, 1))
                self._expect_nesting(s, step, depth + 1)
                self._expect_contents(s, step, [[previous.contents[0][0]]])
            elif step.kind == StepKind.SECONDCASE:
                if previous is None or not previous.kind.is_closing:
                    raise _Violated(s, "first-branch-open")
                if not stack or stack[-1].branch != 1:
                    raise _Violated(s, "no-first-branch")
                stack[-1].branch = 2
                self._expect_nesting(s, step, depth)
                origin = steps[stack[-1].origin]
                self._expect_contents(s, step, [[origin.contents[1][0]]])
            elif step.kind == StepKind.QEDBYCASES:
                if previous is None or not previous.kind.is_closing:
                    raise _Violated(s, "second-branch-open")
                if not stack or stack[-1].branch != 2:
                    raise _Violated(s, "unclosed-branch")
                stack.pop()
                self._expect_nesting(s, step, len(stack) + 1)
                self._expect_goal_instance(s, step, proof)
            elif step.kind == StepKind.QEDBYASSUMPTION:
                self._expect_nesting(s, step, depth)
                self._check_qed_assumption(s, step, proof, paths, notes)
            elif step.kind == StepKind.QEDBYEFQ:
                if proof.abducts:
                    raise _Violated(s, "efq-with-abducts", "abducted proofs may not close from ⊥")
                self._expect_nesting(s, step, depth)
                self._check_qed_efq(s, step, proof, paths, notes)

        last = len(steps) - 1
        if stack:
            raise _Violated(last, "unclosed-split")
        if not steps[last].kind.is_closing or steps[last].nesting != 1:
            raise _Violated(last, "proof-not-closed")

    # Individual rules

    def _expect_nesting(self, s: int, step: ProofStep, expected: int) -> None:
        if step.nesting == expected:
            return
        reason = "nesting-jump" if abs(step.nesting - expected) > 1 else "nesting-mismatch"
        raise _Violated(s, reason, f"nesting {step.nesting}, expected {expected}")

    def _expect_contents(self, s: int, step: ProofStep, expected: List[List[Fact]]) -> None:
        if step.contents != expected:
            raise _Violated(s, "contents-mismatch", f"expected {_show(expected)}")

    def _expect_goal_instance(self, s: int, step: ProofStep, proof: Proof) -> None:
        if len(step.contents) != 1 or not _match_goal(step.contents[0], proof):
            raise _Violated(s, "not-goal", f"{_show(step.contents)} is not an instance of the goal")

    def _check_assumption(self, s: int, step: ProofStep, proof: Proof) -> None:
        if step.cases or len(step.contents) != 1 or len(step.contents[0]) != 1:
            raise _Violated(s, "malformed-assumption")
        fact = step.contents[0][0]
        if fact not in proof.assumptions and fact not in proof.abducts:
            raise _Violated(s, "not-an-assumption", str(fact))

    def _premise_fact_source(self, s: int, ref, proof: Proof, paths) -> List[Fact]:
        if ref.source == PremiseSource.ASSUMPTION:
            if ref.index >= len(proof.assumptions):
                raise _Violated(s, "bad-reference", f"assumption {ref.index}")
            return [proof.assumptions[ref.index]]
        if ref.source == PremiseSource.ABDUCT:
            if ref.index >= len(proof.abducts):
                raise _Violated(s, "bad-reference", f"abduct {ref.index}")
            return [proof.abducts[ref.index]]
        t = ref.index
        if t >= s:
            raise _Violated(s, "forward-reference", f"step {t}")
        referenced = proof.steps[t]
        if not usable_as_premise(referenced):
            raise _Violated(s, "bad-reference", f"step {t} is {referenced.kind.value}")
        if not is_visible(paths, t, s):
            raise _Violated(s, "invisible-premise", f"step {t}")
        return referenced.facts()

    def _check_mp(self, s: int, step: ProofStep, proof: Proof, paths, seen_constants: Set[str]) -> None:
        axiom = self.axioms.get(step.axiom or "")
        if axiom is None:
            raise _Violated(s, "unknown-axiom", str(step.axiom))
        if set(step.instantiation) != set(axiom.var_names):
            raise _Violated(s, "bad-instantiation", "instantiation must cover exactly the axiom variables")

        sub = {v: step.instantiation[v] for v in axiom.univ_vars}
        witness = {v: step.instantiation[v] for v in axiom.exist_vars}
        for name, value in sub.items():
            if value not in seen_constants:
                raise _Violated(s, "unknown-constant", f"{name} -> {value}")
        witness_values = list(witness.values())
        if len(set(witness_values)) != len(witness_values):
            raise _Violated(s, "witness-not-fresh", "witnesses are not distinct")
        for name, value in witness.items():
            if value in seen_constants:
                raise _Violated(s, "witness-not-fresh", f"{name} -> {value}")

        try:
            premises, disjuncts = instantiate(axiom, sub, witness)
        except InstantiationError as e:
            raise _Violated(s, "bad-instantiation", str(e)) from None

        if len(step.from_) != len(premises):
            raise _Violated(
                s, "premise-count", f"{len(step.from_)} references for {len(premises)} premises"
            )
        for k, (ref, premise) in enumerate(zip(step.from_, premises)):
            available = self._premise_fact_source(s, ref, proof, paths)
            if not any(f in available for f in variants(premise, self.symmetries)):
                raise _Violated(s, "premise-mismatch", f"premise {k} {premise} not in {ref.source.value} {ref.index}")

        if axiom.is_case_split:
            if not step.cases:
                raise _Violated(s, "cases-flag")
            expected = [[d[0]] for d in disjuncts]
        else:
            if step.cases:
                raise _Violated(s, "cases-flag")
            expected = [disjuncts[0]] if disjuncts else [[Fact(predicate=BOTTOM)]]
        self._expect_contents(s, step, expected)
        seen_constants.update(witness_values)

    def _check_qed_assumption(self, s: int, step: ProofStep, proof: Proof, paths, notes: List[str]) -> None:
        if s == 0:
            raise _Violated(s, "no-prior-fact")
        self._expect_goal_instance(s, step, proof)
        previous = proof.steps[s - 1]
        needed = step.contents[0]
        if usable_as_premise(previous) and all(f in previous.facts() for f in needed):
            return
        if not self.strict:
            visible = self._visible(proof, paths, s)
            if all(f in visible for f in needed):
                notes.append(f"step {s}: goal matched against a non-adjacent visible fact")
                return
        raise _Violated(s, "goal-not-established", _show(step.contents))

    def _check_qed_efq(self, s: int, step: ProofStep, proof: Proof, paths, notes: List[str]) -> None:
        if s == 0:
            raise _Violated(s, "no-prior-falsum")
        self._expect_goal_instance(s, step, proof)
        falsum = Fact(predicate=BOTTOM)
        previous = proof.steps[s - 1]
        if usable_as_premise(previous) and previous.facts()[:1] == [falsum]:
            return
        if not self.strict and falsum in self._visible(proof, paths, s):
            notes.append(f"step {s}: falsum taken from a non-adjacent step")
            return
        raise _Violated(s, "no-prior-falsum")

    def _visible(self, proof: Proof, paths, s: int) -> Set[Fact]:
        facts: Set[Fact] = set(proof.assumptions) | set(proof.abducts)
        for t in range(s):
            step = proof.steps[t]
            if usable_as_premise(step) and is_visible(paths, t, s):
                facts.update(step.facts())
        return facts


def _show(contents: List[List[Fact]]) -> str:
    return " | ".join(" & ".join(str(f) for f in conj) for conj in contents)


def check_proof(theory, proof: Proof, strict: bool = True) -> CheckResult:
    """
    Check a proof against a theory.

    Args:
        theory: A `Theory` or a sequence of CL axioms
        proof: Proof to replay
        strict: Require QED facts in the immediately preceding step

    Returns:
        CheckOk, or the first Violation found
    """
    axioms = getattr(theory, "axioms", theory)
    symmetries = getattr(theory, "symmetries", None)
    return ProofChecker(axioms, strict=strict, symmetries=symmetries).check(proof)
