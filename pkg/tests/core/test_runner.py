"""Tests for the run orchestrator."""

import pytest

from proofkit.core.runner import ProofRunner, load_theory
from proofkit.schemas import RunConfig, RunStatus
from proofkit.schemas.prover import Outcome, ProverOptions, RenderOptions, RenderStyle, SolverChoice
from proofkit.utils.exceptions import StructuredFormatError, TptpSyntaxError
from proofkit.utils.paths import resolve_problem_path


def _config(problem, **render):
    return RunConfig(
        problem=problem,
        options=ProverOptions(solver=SolverChoice.BUILTIN, max_len=3),
        render=RenderOptions(**render),
    )


class TestProofRunner:
    def test_run_renders_text(self, chain_file):
        """Test a complete search run."""
        runner = ProofRunner(_config(chain_file))

        result = runner.run()

        assert result.status == RunStatus.COMPLETE
        assert result.outcome == Outcome.PROVED
        assert result.completed_at is not None
        assert result.rendered.endswith("3. Proved by assumption! (by QEDas)\n")
        assert runner.theory is not None
        assert result.run_id.startswith("run_")

    def test_progress_callback(self, chain_file):
        """Test that progress reaches the caller."""
        seen = []

        ProofRunner(_config(chain_file)).run(progress_callback=lambda length, status: seen.append(length))

        assert seen == [1, 2, 3]

    def test_unprovable_has_no_rendering(self, chain_file):
        """Test a run without a proof."""
        config = _config(chain_file)
        config.options.max_len = 2

        result = ProofRunner(config).run()

        assert result.outcome == Outcome.UNPROVABLE_AT_BOUND
        assert result.rendered == ""
        assert result.status == RunStatus.COMPLETE

    def test_check_round_trip(self, chain_file, temp_dir):
        """Test checking the structured output of a run."""
        result = ProofRunner(_config(chain_file, style=RenderStyle.STRUCTURED)).run()
        proof_file = temp_dir / "proof.json"
        proof_file.write_text(result.rendered, encoding="utf-8")

        checked = ProofRunner(_config(chain_file)).check(proof_file)

        assert checked.accepted
        assert checked.violation is None
        assert checked.status == RunStatus.COMPLETE

    def test_check_bad_document(self, chain_file, temp_dir):
        """Test that unreadable proof documents propagate."""
        proof_file = temp_dir / "proof.json"
        proof_file.write_text("{}", encoding="utf-8")

        with pytest.raises(StructuredFormatError):
            ProofRunner(_config(chain_file)).check(proof_file)

    def test_load_errors_propagate(self, write_problem):
        """Test that parse errors reach the caller."""
        path = write_problem("fof(goal, conjecture, #).\n")

        with pytest.raises(TptpSyntaxError):
            ProofRunner(_config(path)).run()


class TestLoadTheory:
    def test_corpus_problem(self):
        """Test loading a bundled problem by path."""
        theory = load_theory(resolve_problem_path("varignon"))

        assert theory.constants == ("a", "b", "c", "d", "e", "f", "g", "h")
        assert "ncol_exclusive" in theory.axiom_map
