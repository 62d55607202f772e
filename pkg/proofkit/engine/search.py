"""Per-length encode, lower and solve rounds shared by the prover and the enumerators."""

import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, List, Optional, Sequence

from proofkit.checker import check_proof
from proofkit.encoder import Encoding, EncodingParams, IntVar, encode_problem
from proofkit.logic.theory import Theory
from proofkit.schemas.proof import Proof
from proofkit.schemas.prover import LengthAttempt, ProverOptions, RunStatistics
from proofkit.solver import (
    CNFInstance,
    SatBackend,
    SolveResult,
    SolveStatus,
    export_dimacs,
    lower,
    make_backend,
)
from proofkit.solver.cnf import Model
from proofkit.utils.exceptions import ProofCheckError
from proofkit.utils.logger import logger

from .decode import reconstruct_proof

# Progress callback: (length, status)
ProgressCallback = Callable[[int, str], None]


@dataclass
class LengthRound:
    """An encoding of one length with a live backend."""
    length: int
    encoding: Encoding
    instance: CNFInstance
    backend: SatBackend
    attempt: LengthAttempt

    def block(self, model: Model, variables: Sequence[IntVar]) -> None:
        """Forbid every later model that agrees with `model` on `variables`."""
        names = [var.name for var in variables]
        self.backend.add_clause(self.instance.blocking_clause(model, names))

    def close(self) -> None:
        self.backend.close()


class BoundedSearch:
    """
    Wall-clock bookkeeping plus the encode/solve/decode cycle for one theory.

    Args:
        theory: Normalized theory with its hints
        options: Prover options
        deadline: `time.monotonic()` value after which solving stops
        statistics: Run statistics to record attempts in
    """

    def __init__(
        self,
        theory: Theory,
        options: ProverOptions,
        deadline: float,
        statistics: Optional[RunStatistics] = None,
        progress_callback: Optional[ProgressCallback] = None,
    ):
        self.theory = theory
        self.options = options
        self.deadline = deadline
        self.statistics = statistics if statistics is not None else RunStatistics()
        self.progress_callback = progress_callback

    def remaining(self) -> float:
        return self.deadline - time.monotonic()

    def expired(self) -> bool:
        return self.remaining() <= 0

    def first_length(self) -> int:
        """Shortest length worth trying: the largest hinted step index, at least 1."""
        hinted = [h.step_index for h in self.theory.hints if h.step_index is not None]
        return max([1, *hinted])

    def lengths(self) -> List[int]:
        if not self.options.deepen:
            return [self.options.max_len]
        return list(range(min(self.first_length(), self.options.max_len), self.options.max_len + 1))

    def open(self, length: int) -> LengthRound:
        """
        Encode and lower the theory at one length and load a backend.

        Raises:
            EncodingError: If the theory exceeds the encoding limits
        """
        logger.debug(f"Encoding length {length}")
        started = time.monotonic()
        params = EncodingParams.for_theory(
            self.theory,
            max_len=self.options.max_len,
            num_abducts=self.options.num_abducts,
            length=length,
        )
        encoding = encode_problem(self.theory, params)
        instance = lower(encoding.problem)
        encode_seconds = time.monotonic() - started

        self._dump(encoding, instance)
        backend = make_backend(instance, self.options)
        self.statistics.solver = backend.name
        attempt = LengthAttempt(
            length=length,
            status="pending",
            variables=instance.num_vars,
            clauses=len(instance.clauses),
            encode_seconds=encode_seconds,
        )
        self.statistics.attempts.append(attempt)
        return LengthRound(length, encoding, instance, backend, attempt)

    def _dump(self, encoding: Encoding, instance: CNFInstance) -> None:
        if self.options.dump_cnf is not None:
            Path(self.options.dump_cnf).write_bytes(export_dimacs(instance))
            logger.debug(f"Wrote DIMACS to {self.options.dump_cnf}")
        if self.options.dump_constraints is not None:
            Path(self.options.dump_constraints).write_text(encoding.problem.dump(), encoding="utf-8")
            logger.debug(f"Wrote constraints to {self.options.dump_constraints}")

    def solve(self, round_: LengthRound, deadline: Optional[float] = None) -> SolveResult:
        """Solve within the time left before `deadline` (the search deadline by default)."""
        deadline = self.deadline if deadline is None else deadline
        budget = deadline - time.monotonic()
        if budget <= 0:
            result = SolveResult(status=SolveStatus.TIMEOUT)
        else:
            result = round_.backend.solve(budget)
        round_.attempt.status = result.status.value
        round_.attempt.solve_seconds += result.seconds
        if result.sat:
            self.statistics.models_enumerated += 1
        logger.info(
            f"Length {round_.length}: {result.status.value} "
            f"({round_.instance.num_vars} vars, {len(round_.instance.clauses)} clauses, "
            f"{result.seconds:.2f}s)"
        )
        if self.progress_callback:
            self.progress_callback(round_.length, result.status.value)
        return result

    def proof(self, round_: LengthRound, model: Model) -> Proof:
        """
        Decode a model and check the proof.

        Raises:
            ProofCheckError: If the decoded proof does not replay
        """
        proof = reconstruct_proof(model, round_.encoding)
        verdict = check_proof(self.theory, proof)
        if not verdict.ok:
            raise ProofCheckError(f"decoded proof at length {round_.length} fails: {verdict}")
        return proof
