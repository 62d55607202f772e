"""End-to-end runs on the bundled Varignon problems (python-sat backend)."""

import pytest

from proofkit.checker import check_proof
from proofkit.engine import prove
from proofkit.logic import build_theory, variants
from proofkit.schemas import Fact
from proofkit.schemas.proof import StepKind
from proofkit.schemas.prover import AbductVerdict, Outcome, ProverOptions, SolverChoice
from proofkit.tptp import BOTTOM, parse_problem_file
from proofkit.utils.paths import resolve_problem_path

pytestmark = pytest.mark.slow


def _corpus(name):
    return build_theory(parse_problem_file(resolve_problem_path(name)))


def _options(**overrides):
    values = {"solver": SolverChoice.PYSAT, "max_len": 8}
    values.update(overrides)
    return ProverOptions(**values)


def _fact(predicate, *args):
    return Fact(predicate=predicate, args=tuple(args))


def _derived(theory, proof):
    """Facts of the proof's MP steps, closed under the theory's symmetries."""
    found = set()
    for step in proof.steps:
        if step.kind == StepKind.MP:
            for fact in step.facts():
                found.update(variants(fact, theory.symmetries))
    return found


def _assert_abduct_hygiene(theory, result):
    """No abduct is ⊥ or the goal, and no abducted proof closes from ⊥."""
    goal_atoms = {fact for disjunct in result.proof.goal.disjuncts for fact in disjunct}
    for finding in result.abducts:
        assert all(fact.predicate != BOTTOM for fact in finding.abducts)
        assert not goal_atoms & set(finding.abducts)
        assert all(step.kind != StepKind.QEDBYEFQ for step in finding.proof.steps)
        assert check_proof(theory, finding.proof).ok


class TestVarignonCorpus:
    def test_varignon(self):
        """Test the full theorem at -m8 within two minutes."""
        theory = _corpus("varignon")

        result = prove(theory, _options(time_limit=120))

        assert result.outcome == Outcome.PROVED
        assert check_proof(theory, result.proof).ok
        assert len(result.proof.steps) <= 8
        derived = _derived(theory, result.proof)
        for fact in (
            _fact("par", "a", "c", "h", "g"),
            _fact("par", "b", "d", "f", "g"),
            _fact("par", "a", "c", "e", "f"),
            _fact("par", "b", "d", "e", "h"),
            _fact("par", "e", "f", "g", "h"),
            _fact("pG", "e", "f", "g", "h"),
        ):
            assert fact in derived, fact

    def test_missing_midpoint_abducts(self):
        """Test that the dropped midpoint is the only consistent abduct, in both orders."""
        theory = _corpus("varignon_inverse1")

        result = prove(theory, _options(num_abducts=1, time_limit=300))

        assert result.outcome == Outcome.PROVED_WITH_ABDUCTS
        consistent = {str(f.abducts[0]) for f in result.consistent_abducts}
        assert consistent == {"midpoint(a, h, d)", "midpoint(d, h, a)"}
        assert result.proof.abducts[0].predicate == "midpoint"
        _assert_abduct_hygiene(theory, result)

    def test_missing_congruence_abduct(self):
        """Test that the diagonal congruence is among the first fifty consistent abducts."""
        theory = _corpus("varignon_inverse2")

        result = prove(theory, _options(num_abducts=1, abduct_enumeration_cap=50, time_limit=600))

        assert result.outcome == Outcome.PROVED_WITH_ABDUCTS
        cong = [f for f in result.consistent_abducts if f.abducts == [_fact("cong", "e", "g", "f", "h")]]
        assert len(cong) == 1
        assert cong[0].verdict == AbductVerdict.CONSISTENT
        assert len(cong[0].proof.steps) == 3
        _assert_abduct_hygiene(theory, result)

    def test_deduct_parallel_sides(self):
        """Test filling the wildcard goal with the first provable relation."""
        theory = _corpus("varignon_deduct")

        result = prove(theory, _options(time_limit=120))

        assert result.outcome == Outcome.PROVED
        assert str(result.filled_goal) == "par(e, f, g, h)"
        assert len(result.proof.steps) == 4
        assert check_proof(theory, result.proof).ok

    def test_deduct_all(self):
        """Test listing every relation between the midpoints the bound allows."""
        theory = _corpus("varignon_deduct")

        result = prove(theory, _options(deduct_all=True, time_limit=120))

        assert result.outcome == Outcome.PROVED
        assert [str(d.goal) for d in result.deducts] == ["par(e, f, g, h)", "pG(e, f, g, h)"]
        for deduct in result.deducts:
            assert check_proof(theory, deduct.proof).ok

    def test_hint_fixes_rectangle_step(self):
        """Test the rectangle variant with an axiom hint."""
        theory = _corpus("varignon_hint")

        result = prove(theory, _options(time_limit=300))

        assert result.outcome == Outcome.PROVED
        assert len(result.proof.steps) == 3
        hinted = [s for s in result.proof.steps if s.kind == StepKind.MP and s.axiom == "defrectangle4b"]
        assert hinted
        assert [hinted[0].instantiation[v] for v in ("A", "B", "C", "D")] == ["e", "f", "g", "h"]
        assert check_proof(theory, result.proof).ok

    def test_rectangle_without_hint(self):
        """Test that the rectangle variant is also proved with the hint dropped."""
        theory = _corpus("varignon_hint")

        result = prove(theory, _options(time_limit=300), hints=[])

        assert result.outcome == Outcome.PROVED
        assert result.statistics.hints_used == 0
        assert check_proof(theory, result.proof).ok
