"""
Natural-language proof text.

Renders a checked proof as an assumption block, the goal, an optional
abduct block and numbered steps, indented by case nesting.
"""

from typing import List, Optional, Sequence

from proofkit.logic.terms import instantiate
from proofkit.logic.theory import Theory
from proofkit.schemas.proof import Fact, PremiseRef, PremiseSource, Proof, ProofGoal, ProofStep, StepKind
from proofkit.schemas.prover import ProverResult, RenderOptions
from proofkit.tptp.signature import BOTTOM, EQ, NEQ, TOP, Signature
from proofkit.utils.exceptions import InstantiationError


ABDUCT_MARKER = "[abduct]"
INDENT = "  "


class TextRenderer:
    """
    Proof to text.

    Args:
        theory: Supplies the signature (bar predicates print as negations)
            and the axioms used to show each MP premise
        options: Rendering switches
    """

    def __init__(self, theory: Optional[Theory] = None, options: Optional[RenderOptions] = None):
        self.theory = theory
        self.options = options or RenderOptions()
        self.signature: Optional[Signature] = theory.signature if theory is not None else None
        self.axioms = theory.axiom_map if theory is not None else {}

    def fact(self, fact: Fact) -> str:
        args = ", ".join(fact.args)
        if fact.predicate == BOTTOM:
            return "⊥"
        if fact.predicate == TOP:
            return "⊤"
        if fact.predicate == NEQ and len(fact.args) == 2:
            return f"{fact.args[0]} ≠ {fact.args[1]}"
        if fact.predicate == EQ and len(fact.args) == 2:
            return f"{fact.args[0]} = {fact.args[1]}"
        positive = self.signature.positive_of(fact.predicate) if self.signature else None
        name = f"¬ {positive}" if positive else fact.predicate
        return f"{name}({args})" if fact.args else name

    def conjunction(self, facts: Sequence[Fact]) -> str:
        return " ∧ ".join(self.fact(f) for f in facts) or "⊤"

    def goal(self, goal: ProofGoal) -> str:
        body = " ∨ ".join(self.conjunction(d) for d in goal.disjuncts) or "⊥"
        if goal.exist_vars:
            return f"∃ {', '.join(goal.exist_vars)}. {body}"
        return body

    def header(self, proof: Proof) -> List[str]:
        lines = []
        if proof.constants:
            lines.append(f"Consider arbitrary {', '.join(proof.constants)} such that:")
            for i, fact in enumerate(proof.assumptions):
                end = "." if i == len(proof.assumptions) - 1 else ","
                lines.append(f"{INDENT}{self.fact(fact)}{end}")
        lines.append(f"It should be proved that {self.goal(proof.goal)}.")
        if proof.abducts and self.options.show_abducts:
            lines.append("Abducts found:")
            lines.extend(f"{INDENT}{self.fact(f)}" for f in proof.abducts)
        return lines

    def _premise(self, proof: Proof, ref: PremiseRef, grounded: Optional[Fact]) -> str:
        if ref.source == PremiseSource.ABDUCT:
            text = self.fact(grounded or proof.abducts[ref.index])
            return f"{text} {ABDUCT_MARKER}" if self.options.show_abducts else text
        if grounded is not None:
            return self.fact(grounded)
        if ref.source == PremiseSource.ASSUMPTION:
            return self.fact(proof.assumptions[ref.index])
        return self.conjunction(proof.steps[ref.index].facts())

    def _grounded_premises(self, step: ProofStep) -> List[Optional[Fact]]:
        axiom = self.axioms.get(step.axiom or "")
        if axiom is None:
            return [None] * len(step.from_)
        sub = {v: step.instantiation[v] for v in axiom.univ_vars if v in step.instantiation}
        witness = {v: step.instantiation[v] for v in axiom.exist_vars if v in step.instantiation}
        try:
            premises, _ = instantiate(axiom, sub, witness)
        except InstantiationError:
            return [None] * len(step.from_)
        return list(premises) + [None] * (len(step.from_) - len(premises))

    def mp(self, proof: Proof, step: ProofStep) -> str:
        if step.cases:
            contents = " ∨ ".join(self.conjunction(c) for c in step.contents)
        else:
            contents = self.conjunction(step.facts())
        parts = ["by MP"]
        if step.from_:
            grounded = self._grounded_premises(step)
            shown = [self._premise(proof, ref, g) for ref, g in zip(step.from_, grounded)]
            parts.append(f"from {', '.join(shown)}")
        reason = ", ".join(parts) + f" using axiom {step.axiom}"
        if self.options.show_instantiations and step.instantiation:
            mapping = ", ".join(f"{k} ↦ {v}" for k, v in step.instantiation.items())
            reason += f"; instantiation: {mapping}"
        return f"{contents} ({reason})"

    def step(self, proof: Proof, step: ProofStep) -> str:
        kind = step.kind
        if kind == StepKind.MP:
            return self.mp(proof, step)
        if kind == StepKind.ASSUMPTION:
            fact = step.facts()[0]
            if fact in proof.abducts and self.options.show_abducts:
                return f"{self.fact(fact)} {ABDUCT_MARKER} (by assumption)"
            return f"{self.fact(fact)} (by assumption)"
        if kind == StepKind.FIRSTCASE:
            return f"Case 1: Assume {self.conjunction(step.facts())}."
        if kind == StepKind.SECONDCASE:
            return f"Case 2: Assume {self.conjunction(step.facts())}."
        if kind == StepKind.QEDBYCASES:
            return "Proved by cases! (by QEDcs)"
        if kind == StepKind.QEDBYEFQ:
            return "Contradiction! (by QEDefq)"
        return "Proved by assumption! (by QEDas)"

    def render(self, proof: Proof) -> str:
        lines = self.header(proof)
        for k, step in enumerate(proof.steps, start=1):
            indent = INDENT * (step.nesting - 1)
            lines.append(f"{indent}{k}. {self.step(proof, step)}")
        return "\n".join(lines) + "\n"


def render_text(
    proof: Proof,
    theory: Optional[Theory] = None,
    options: Optional[RenderOptions] = None,
) -> str:
    """
    Render a proof as readable text.

    Args:
        proof: Proof that passes the checker
        theory: Symbol tables and axioms; without it premises are shown as
            the referenced facts and bar predicates under their own names
        options: Rendering switches

    Returns:
        Text ending in a newline
    """
    return TextRenderer(theory, options).render(proof)


def render_abducts(result: ProverResult, theory: Optional[Theory] = None, all_verdicts: bool = False) -> str:
    """List of abduct tuples with their verdicts, consistent ones only by default."""
    renderer = TextRenderer(theory)
    lines = []
    for finding in result.abducts:
        if not all_verdicts and finding.verdict.value != "consistent":
            continue
        shown = " ∧ ".join(renderer.fact(f) for f in finding.abducts)
        lines.append(f"{shown} ({finding.verdict.value})")
    return "\n".join(lines) + ("\n" if lines else "")


def render_deducts(result: ProverResult, theory: Optional[Theory] = None) -> str:
    renderer = TextRenderer(theory)
    lines = [renderer.goal(d.goal) for d in result.deducts]
    return "\n".join(lines) + ("\n" if lines else "")
