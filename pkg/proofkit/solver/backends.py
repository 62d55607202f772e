"""
SAT backends.

Each backend wraps one CNF instance, accepts extra clauses between calls
(blocking clauses during enumeration) and answers SAT/UNSAT/TIMEOUT within
a wall-clock budget.
"""

import os
import subprocess
import tempfile
import threading
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, List, Optional

from proofkit.schemas.prover import ProverOptions, SolverChoice
from proofkit.utils.exceptions import ExternalSolverError, SolverError
from proofkit.utils.logger import logger

from .cdcl import CDCLSolver
from .cnf import Clause, CNFInstance, Model
from .dimacs import export_dimacs, parse_assignment

try:
    from pysat.solvers import Solver as PysatSolver
except ImportError:  # pragma: no cover
    PysatSolver = None


class SolveStatus(str, Enum):
    SAT = "sat"
    UNSAT = "unsat"
    TIMEOUT = "timeout"


@dataclass
class SolveResult:
    status: SolveStatus
    model: Optional[Model] = None
    seconds: float = 0.0
    literals: List[int] = field(default_factory=list)

    @property
    def sat(self) -> bool:
        return self.status == SolveStatus.SAT


class SatBackend(ABC):
    """
    Base class for SAT backends.

    Subclasses implement `_solve` (True, False or None on budget exhaustion)
    and `_literals` (the last model as signed literals).
    """

    name: str = "base"

    def __init__(self, instance: CNFInstance, seed: int = 0):
        self.instance = instance
        self.seed = seed
        self.calls = 0

    @abstractmethod
    def add_clause(self, clause: Clause) -> None:
        """Add a clause for all later calls."""
        pass

    @abstractmethod
    def _solve(self, budget: Optional[float]) -> Optional[bool]:
        pass

    @abstractmethod
    def _literals(self) -> List[int]:
        pass

    def solve(self, budget: Optional[float] = None) -> SolveResult:
        """
        Decide the instance plus every clause added so far.

        Args:
            budget: Wall-clock seconds; None for no limit

        Returns:
            SolveResult with the decoded model when satisfiable
        """
        if budget is not None and budget <= 0:
            return SolveResult(status=SolveStatus.TIMEOUT)
        self.calls += 1
        started = time.monotonic()
        answer = self._solve(budget)
        seconds = time.monotonic() - started

        if answer is None:
            logger.debug(f"{self.name}: budget of {budget}s exhausted")
            return SolveResult(status=SolveStatus.TIMEOUT, seconds=seconds)
        if not answer:
            return SolveResult(status=SolveStatus.UNSAT, seconds=seconds)
        literals = self._literals()
        return SolveResult(
            status=SolveStatus.SAT,
            model=self.instance.decode(literals),
            seconds=seconds,
            literals=literals,
        )

    def close(self) -> None:
        pass

    def __enter__(self) -> "SatBackend":
        return self

    def __exit__(self, *exc) -> None:
        self.close()


class BuiltinBackend(SatBackend):
    """The bundled CDCL solver."""

    name = "builtin"

    def __init__(self, instance: CNFInstance, seed: int = 0):
        super().__init__(instance, seed)
        self.solver = CDCLSolver(instance.num_vars, instance.clauses, seed=seed)

    def add_clause(self, clause: Clause) -> None:
        self.solver.add_clause(clause)

    def _solve(self, budget: Optional[float]) -> Optional[bool]:
        return self.solver.solve(budget)

    def _literals(self) -> List[int]:
        return self.solver.model()


class PysatBackend(SatBackend):
    """An incremental solver from python-sat, interrupted by a timer."""

    name = "pysat"

    def __init__(self, instance: CNFInstance, seed: int = 0, engine: str = "glucose4"):
        super().__init__(instance, seed)
        if PysatSolver is None:
            raise SolverError("python-sat is not installed")
        self.engine = engine
        self.trivially_unsat = any(not clause for clause in instance.clauses)
        try:
            self.solver = PysatSolver(
                name=engine,
                bootstrap_with=[c for c in instance.clauses if c],
            )
        except (ValueError, NotImplementedError) as e:
            raise SolverError(f"pysat engine {engine!r} unavailable: {e}") from e
        self.name = f"pysat:{engine}"

    def add_clause(self, clause: Clause) -> None:
        if not clause:
            self.trivially_unsat = True
            return
        self.solver.add_clause(clause)

    def _solve(self, budget: Optional[float]) -> Optional[bool]:
        if self.trivially_unsat:
            return False
        if budget is None:
            return self.solver.solve()
        timer = threading.Timer(budget, self.solver.interrupt)
        timer.start()
        try:
            answer = self.solver.solve_limited(expect_interrupt=True)
        finally:
            timer.cancel()
            self.solver.clear_interrupt()
        return answer

    def _literals(self) -> List[int]:
        return list(self.solver.get_model() or [])

    def close(self) -> None:
        self.solver.delete()


class ExternalBackend(SatBackend):
    """
    An external executable reading a DIMACS file.

    The solver is run as `<path> <file.cnf>` and must print its verdict in
    the competition format on standard output.
    """

    name = "external"

    # Conventional exit codes for SAT and UNSAT
    EXIT_CODES = (0, 10, 20)

    def __init__(self, instance: CNFInstance, path: Path, seed: int = 0):
        super().__init__(instance, seed)
        self.path = Path(path)
        self.extra: List[Clause] = []
        self._model: List[int] = []

    def add_clause(self, clause: Clause) -> None:
        self.extra.append(list(clause))

    def _export(self) -> bytes:
        instance = CNFInstance()
        instance.num_vars = self.instance.num_vars
        instance.clauses = self.instance.clauses + self.extra
        return export_dimacs(instance)

    def _solve(self, budget: Optional[float]) -> Optional[bool]:
        handle, cnf_path = tempfile.mkstemp(suffix=".cnf", prefix="proofkit-")
        try:
            with os.fdopen(handle, "wb") as f:
                f.write(self._export())
            try:
                completed = subprocess.run(
                    [str(self.path), cnf_path],
                    capture_output=True,
                    timeout=budget,
                )
            except subprocess.TimeoutExpired:
                return None
            except OSError as e:
                raise ExternalSolverError(f"cannot run {self.path}: {e}") from e
        finally:
            Path(cnf_path).unlink(missing_ok=True)

        if completed.returncode not in self.EXIT_CODES:
            stderr = completed.stderr.decode("utf-8", errors="replace").strip()
            raise ExternalSolverError(
                f"{self.path} exited with code {completed.returncode}: {stderr[:200]}"
            )
        literals = parse_assignment(completed.stdout)
        if literals is None:
            return False
        self._model = literals
        return True

    def _literals(self) -> List[int]:
        return list(self._model)


def make_backend(instance: CNFInstance, options: Optional[ProverOptions] = None) -> SatBackend:
    """
    Pick a backend for an instance.

    `auto` prefers an external executable when one is configured, then
    python-sat, then the built-in solver.
    """
    options = options or ProverOptions()
    choice = SolverChoice(options.solver)

    if choice == SolverChoice.EXTERNAL or (choice == SolverChoice.AUTO and options.external_solver):
        if options.external_solver is None:
            raise SolverError("external solver selected but no executable configured")
        return ExternalBackend(instance, options.external_solver, seed=options.seed)
    if choice == SolverChoice.PYSAT or (choice == SolverChoice.AUTO and PysatSolver is not None):
        return PysatBackend(instance, seed=options.seed, engine=options.pysat_engine)
    return BuiltinBackend(instance, seed=options.seed)


def solve(
    instance: CNFInstance,
    budget: Optional[float] = None,
    options: Optional[ProverOptions] = None,
    extra_clauses: Iterable[Clause] = (),
) -> SolveResult:
    """
    One-shot solve of an instance.

    Args:
        instance: Lowered CNF
        budget: Wall-clock seconds; None for no limit
        options: Backend selection; the built-in solver when omitted
        extra_clauses: Clauses added on top of the instance

    Returns:
        SolveResult (SAT with a decoded model, UNSAT or TIMEOUT)
    """
    if options is None:
        options = ProverOptions(solver=SolverChoice.BUILTIN)
    with make_backend(instance, options) as backend:
        for clause in extra_clauses:
            backend.add_clause(clause)
        return backend.solve(budget)
