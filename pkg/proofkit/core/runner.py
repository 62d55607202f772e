"""Run orchestration: load a problem, search or check, render."""

from datetime import datetime
from pathlib import Path
from typing import Callable, Optional

from proofkit.checker import check_proof
from proofkit.engine import prove
from proofkit.logic import Theory, build_theory
from proofkit.report_builder import parse_structured, render_structured, render_text
from proofkit.schemas.prover import ProverResult, RenderStyle
from proofkit.schemas.run import RunConfig, RunResult, RunStatus
from proofkit.tptp import parse_problem_file
from proofkit.utils.logger import logger


def load_theory(path: Path) -> Theory:
    """
    Parse and normalize a problem file.

    Raises:
        OSError: If the file cannot be read
        TptpError: On syntax or structure errors
        NormalizationError: If a formula has no coherent form
        HintResolutionError: If a hint does not fit the theory
    """
    logger.info(f"Loading problem {path}")
    return build_theory(parse_problem_file(path))


class ProofRunner:
    """
    Coordinates parsing, proof search (or checking) and rendering for one problem.
    """

    def __init__(self, config: RunConfig):
        self.config = config
        self.run_id = f"run_{datetime.utcnow().strftime('%Y%m%d_%H%M%S')}"
        self.theory: Optional[Theory] = None

    def run(self, progress_callback: Optional[Callable[[int, str], None]] = None) -> RunResult:
        """
        Search for a proof and render it.

        Args:
            progress_callback: Called with (length, status) after each solver call

        Returns:
            RunResult with the outcome and the rendered proof, if any
        """
        result = self._start()
        try:
            result.status = RunStatus.PARSING
            self.theory = load_theory(self.config.problem)

            result.status = RunStatus.SEARCHING
            prover_result = prove(self.theory, self.config.options, progress_callback=progress_callback)
            result.result = prover_result
            result.outcome = prover_result.outcome

            if prover_result.proof is not None:
                result.status = RunStatus.RENDERING
                result.rendered = self.render(prover_result)

            result.status = RunStatus.COMPLETE
            result.completed_at = datetime.utcnow()
            logger.info(f"Run complete: {prover_result.outcome.value}")

        except Exception as e:
            result.status = RunStatus.FAILED
            result.error = str(e)
            logger.error(f"Run failed: {e}")
            raise

        return result

    def check(self, proof_path: Optional[Path] = None) -> RunResult:
        """
        Check a structured proof against the problem's theory.

        Raises:
            StructuredFormatError: If the proof file is not a valid document
        """
        result = self._start()
        proof_path = proof_path or self.config.check_file
        try:
            result.status = RunStatus.PARSING
            self.theory = load_theory(self.config.problem)
            proof = parse_structured(Path(proof_path).read_bytes())

            result.status = RunStatus.CHECKING
            verdict = check_proof(self.theory, proof)
            result.accepted = verdict.ok
            if not verdict.ok:
                result.violation = str(verdict)
                logger.warning(f"Proof rejected: {verdict}")

            result.status = RunStatus.COMPLETE
            result.completed_at = datetime.utcnow()

        except Exception as e:
            result.status = RunStatus.FAILED
            result.error = str(e)
            logger.error(f"Check failed: {e}")
            raise

        return result

    def render(self, prover_result: ProverResult) -> str:
        if self.config.render.style == RenderStyle.STRUCTURED:
            return render_structured(prover_result)
        return render_text(prover_result.proof, self.theory, self.config.render)

    def _start(self) -> RunResult:
        return RunResult(
            run_id=self.run_id,
            config=self.config,
            status=RunStatus.PENDING,
            started_at=datetime.utcnow(),
        )
