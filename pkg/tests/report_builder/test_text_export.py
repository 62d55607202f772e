"""Tests for the text renderer."""

from proofkit.report_builder import render_abducts, render_deducts, render_text
from proofkit.report_builder.text_export import TextRenderer
from proofkit.schemas import Fact
from proofkit.schemas.proof import ProofGoal
from proofkit.schemas.prover import (
    AbductFinding,
    AbductVerdict,
    DeductFinding,
    Outcome,
    ProverResult,
    RenderOptions,
)


def _fact(predicate, *args):
    return Fact(predicate=predicate, args=tuple(args))


class TestRenderText:
    def test_chain_proof(self, chain_proof, chain_theory):
        """Test the full text of a two-step proof."""
        text = render_text(chain_proof, chain_theory)

        assert text == (
            "Consider arbitrary a such that:\n"
            "  p(a).\n"
            "It should be proved that r(a).\n"
            "1. q(a) (by MP, from p(a) using axiom ax1; instantiation: X ↦ a)\n"
            "2. r(a) (by MP, from q(a) using axiom ax2; instantiation: X ↦ a)\n"
            "3. Proved by assumption! (by QEDas)\n"
        )

    def test_without_instantiations(self, chain_proof, chain_theory):
        """Test hiding instantiations."""
        text = render_text(chain_proof, chain_theory, RenderOptions(show_instantiations=False))

        assert "1. q(a) (by MP, from p(a) using axiom ax1)\n" in text
        assert "↦" not in text

    def test_without_theory(self, chain_proof):
        """Test that referenced facts stand in for the grounded premises."""
        text = render_text(chain_proof)

        assert "2. r(a) (by MP, from q(a) using axiom ax2; instantiation: X ↦ a)" in text

    def test_case_split_indentation(self, cases_proof, cases_theory):
        """Test case lines and their nesting indentation."""
        lines = render_text(cases_proof, cases_theory).splitlines()

        assert lines[3] == "1. p(a) ∨ q(a) (by MP, from s(a) using axiom split; instantiation: X ↦ a)"
        assert lines[4] == "  2. Case 1: Assume p(a)."
        assert lines[8] == "  6. r(a) (by MP, from q(a) using axiom qr; instantiation: X ↦ a)"
        assert lines[-1] == "8. Proved by cases! (by QEDcs)"

    def test_abduct_block(self, chain_proof, chain_theory):
        """Test the abduct block under the goal."""
        proof = chain_proof.model_copy(update={"abducts": [_fact("q", "a")]})

        lines = render_text(proof, chain_theory).splitlines()

        assert lines[3:5] == ["Abducts found:", "  q(a)"]


class TestFacts:
    def test_bar_predicate_prints_as_negation(self, negation_theory):
        """Test ¬ for bar predicates known to the signature."""
        renderer = TextRenderer(negation_theory)

        assert renderer.fact(_fact("nq", "a")) == "¬ q(a)"

    def test_reserved_predicates(self):
        """Test ≠, ⊥ and ⊤."""
        renderer = TextRenderer()

        assert renderer.fact(_fact("neq", "a", "b")) == "a ≠ b"
        assert renderer.fact(_fact("$false")) == "⊥"
        assert renderer.fact(_fact("$true")) == "⊤"

    def test_goal_with_witness(self):
        """Test existential goals."""
        goal = ProofGoal(exist_vars=["Y"], disjuncts=[[_fact("q", "a", "Y")], [_fact("r", "a")]])

        assert TextRenderer().goal(goal) == "∃ Y. q(a, Y) ∨ r(a)"


class TestResultListings:
    def test_abduct_listing(self, chain_proof):
        """Test that only consistent abducts are listed by default."""
        result = ProverResult(
            outcome=Outcome.PROVED_WITH_ABDUCTS,
            proof=chain_proof,
            abducts=[
                AbductFinding(abducts=[_fact("q", "a")], proof=chain_proof, verdict=AbductVerdict.CONSISTENT),
                AbductFinding(abducts=[_fact("s", "a")], proof=chain_proof, verdict=AbductVerdict.INCONSISTENT),
            ],
        )

        assert render_abducts(result) == "q(a) (consistent)\n"
        assert render_abducts(result, all_verdicts=True) == "q(a) (consistent)\ns(a) (inconsistent)\n"

    def test_deduct_listing(self, chain_proof):
        """Test one line per deduct."""
        result = ProverResult(
            outcome=Outcome.PROVED,
            proof=chain_proof,
            deducts=[DeductFinding(goal=ProofGoal(disjuncts=[[_fact("q", "a")]]), proof=chain_proof)],
        )

        assert render_deducts(result) == "q(a)\n"
        assert render_deducts(ProverResult(outcome=Outcome.UNPROVABLE_AT_BOUND)) == ""
