"""Proof search by iterative deepening over SAT encodings."""

import time
from typing import Optional, Sequence

from proofkit.logic.theory import ResolvedHint, Theory
from proofkit.schemas.prover import (
    AbductVerdict,
    Outcome,
    ProverOptions,
    ProverResult,
    RunStatistics,
)
from proofkit.solver import SolveStatus
from proofkit.utils.logger import logger

from .abducts import AbductSearch, enumerate_deducts
from .search import BoundedSearch, ProgressCallback


class Prover:
    """
    Runs one proof search.

    Without abduct slots, lengths are tried in increasing order and the first
    proof found is returned. With abduct slots, abduct tuples are enumerated
    and filtered for consistency. Only a consistent tuple yields a proof; when
    none is, the rejected tuples are reported without one. With `deduct_all`,
    every concrete goal that fills the conjecture's wildcards is listed.
    """

    def __init__(
        self,
        theory: Theory,
        options: Optional[ProverOptions] = None,
        progress_callback: Optional[ProgressCallback] = None,
    ):
        self.theory = theory
        self.options = options or ProverOptions()
        self.progress_callback = progress_callback
        self.statistics = RunStatistics(hints_used=len(theory.hints))

    def prove(self) -> ProverResult:
        started = time.monotonic()
        try:
            if self.options.num_abducts:
                result = self._prove_with_abducts()
            elif self.options.deduct_all and self.theory.goal.has_wildcards:
                result = self._prove_deducts(started)
            else:
                result = self._prove_once(started)
        finally:
            self.statistics.total_seconds = time.monotonic() - started
        logger.info(f"Outcome: {result.outcome.value} in {self.statistics.total_seconds:.2f}s")
        return result

    def _result(self, outcome: Outcome, **fields) -> ProverResult:
        return ProverResult(outcome=outcome, statistics=self.statistics, **fields)

    def _prove_once(self, started: float) -> ProverResult:
        search = BoundedSearch(
            self.theory,
            self.options,
            started + self.options.time_limit,
            self.statistics,
            self.progress_callback,
        )
        for length in search.lengths():
            if search.expired():
                return self._result(Outcome.TIMEOUT)
            round_ = search.open(length)
            try:
                result = search.solve(round_)
                if result.status == SolveStatus.TIMEOUT:
                    return self._result(Outcome.TIMEOUT)
                if result.status == SolveStatus.UNSAT:
                    continue
                proof = search.proof(round_, result.model)
            finally:
                round_.close()
            filled = proof.goal if self.theory.goal.has_wildcards else None
            return self._result(Outcome.PROVED, proof=proof, filled_goal=filled)
        return self._result(Outcome.UNPROVABLE_AT_BOUND)

    def _prove_with_abducts(self) -> ProverResult:
        search = AbductSearch(self.theory, self.options, self.statistics, self.progress_callback)
        findings = search.run()
        if not findings:
            return self._result(Outcome.TIMEOUT if search.timed_out else Outcome.UNPROVABLE_AT_BOUND)

        consistent = [f for f in findings if f.verdict == AbductVerdict.CONSISTENT]
        if not consistent:
            logger.warning(f"None of {len(findings)} abduct tuples passed the consistency check")
            return self._result(Outcome.NO_CONSISTENT_ABDUCTS, abducts=findings)
        chosen = consistent[0]
        filled = chosen.proof.goal if self.theory.goal.has_wildcards else None
        return self._result(
            Outcome.PROVED_WITH_ABDUCTS,
            proof=chosen.proof,
            abducts=findings,
            filled_goal=filled,
        )

    def _prove_deducts(self, started: float) -> ProverResult:
        deducts, timed_out = enumerate_deducts(
            self.theory,
            self.options,
            self.statistics,
            deadline=started + self.options.time_limit,
        )
        if not deducts:
            return self._result(Outcome.TIMEOUT if timed_out else Outcome.UNPROVABLE_AT_BOUND)
        first = deducts[0]
        return self._result(
            Outcome.PROVED,
            proof=first.proof,
            filled_goal=first.goal,
            deducts=deducts,
        )


def prove(
    theory: Theory,
    options: Optional[ProverOptions] = None,
    hints: Optional[Sequence[ResolvedHint]] = None,
    progress_callback: Optional[ProgressCallback] = None,
) -> ProverResult:
    """
    Search for a proof of the theory's conjecture.

    Args:
        theory: Normalized theory (axioms, assumptions, goal)
        options: Bounds and solver choice
        hints: Hints to use instead of the theory's own
        progress_callback: Called with (length, status) after each solve

    Returns:
        ProverResult; any proof in it passes the checker

    Raises:
        EncodingError: If the theory exceeds the encoding limits
        ProofCheckError: If a decoded proof fails to replay
    """
    if hints is not None:
        theory = theory.with_hints(hints)
    return Prover(theory, options, progress_callback).prove()
