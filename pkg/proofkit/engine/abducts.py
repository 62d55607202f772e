"""Abduct and deduct enumeration by blocking clauses."""

import time
from typing import Callable, Dict, List, Optional, Tuple

from proofkit.encoder import EncodingVariables, IntVar
from proofkit.logic.theory import Theory
from proofkit.schemas.proof import Proof
from proofkit.schemas.prover import (
    AbductFinding,
    AbductVerdict,
    DeductFinding,
    ProverOptions,
    RunStatistics,
)
from proofkit.solver import SolveStatus
from proofkit.utils.exceptions import EncodingError
from proofkit.utils.logger import logger

from .saturation import check_consistency_bounded
from .search import BoundedSearch, ProgressCallback

# Picks the variables whose assignment identifies a finding
Projection = Callable[[EncodingVariables], List[IntVar]]


class ModelEnumerator:
    """
    Lists distinct projections of models, shortest proofs first.

    After each model, a clause forbidding its projected assignment is added.
    Projections found at one length stay blocked at the longer ones.
    """

    def __init__(self, search: BoundedSearch, project: Projection, cap: int):
        self.search = search
        self.project = project
        self.cap = cap
        self.timed_out = False
        self.found: List[Tuple[Dict[str, int], Proof]] = []

    def run(self) -> List[Tuple[Dict[str, int], Proof]]:
        for length in self.search.lengths():
            if len(self.found) >= self.cap:
                break
            if self.search.expired():
                self.timed_out = True
                break
            if not self._run_length(length):
                break
        return self.found

    def _run_length(self, length: int) -> bool:
        """Enumerate at one length; False stops the whole run."""
        round_ = self.search.open(length)
        try:
            variables = self.project(round_.encoding.variables)
            names = [var.name for var in variables]
            for key, _ in self.found:
                round_.backend.add_clause(round_.instance.blocking_clause(key, names))
            while len(self.found) < self.cap:
                result = self.search.solve(round_)
                if result.status == SolveStatus.TIMEOUT:
                    self.timed_out = True
                    return False
                if result.status == SolveStatus.UNSAT:
                    return True
                proof = self.search.proof(round_, result.model)
                key = {name: result.model[name] for name in names}
                self.found.append((key, proof))
                round_.block(result.model, variables)
            return False
        finally:
            round_.close()


def _abduct_projection(variables: EncodingVariables) -> List[IntVar]:
    return variables.abduct_variables()


def _goal_projection(variables: EncodingVariables) -> List[IntVar]:
    return variables.goal_fill_variables()


def classify_abducts(
    theory: Theory,
    findings: List[AbductFinding],
    options: ProverOptions,
    deadline: Optional[float] = None,
) -> None:
    """Attach a consistency verdict to each finding, in place."""
    for finding in findings:
        if deadline is not None and time.monotonic() > deadline:
            finding.verdict = AbductVerdict.UNKNOWN
            continue
        finding.verdict = check_consistency_bounded(
            theory,
            finding.abducts,
            bound=options.consistency_bound,
            branch_limit=options.branch_limit,
            deadline=deadline,
        )
        shown = ", ".join(str(f) for f in finding.abducts)
        logger.info(f"Abduct {shown}: {finding.verdict.value}")


class AbductSearch:
    """
    Abduct enumeration with consistency filtering under one time limit.

    The search share of the limit goes to enumeration; consistency checks
    use whatever remains.
    """

    def __init__(
        self,
        theory: Theory,
        options: ProverOptions,
        statistics: Optional[RunStatistics] = None,
        progress_callback: Optional[ProgressCallback] = None,
    ):
        if options.num_abducts < 1:
            raise EncodingError("abduct enumeration needs at least one abduct slot")
        self.theory = theory
        self.options = options
        self.statistics = statistics if statistics is not None else RunStatistics()
        self.progress_callback = progress_callback
        self.timed_out = False

    def run(self) -> List[AbductFinding]:
        started = time.monotonic()
        final = started + self.options.time_limit
        search_deadline = started + self.options.time_limit * self.options.search_share
        search = BoundedSearch(
            self.theory, self.options, search_deadline, self.statistics, self.progress_callback
        )
        enumerator = ModelEnumerator(search, _abduct_projection, self.options.abduct_enumeration_cap)
        found = enumerator.run()
        self.timed_out = enumerator.timed_out
        logger.info(f"Enumerated {len(found)} abduct tuples")

        findings = [AbductFinding(abducts=proof.abducts, proof=proof) for _, proof in found]
        classify_abducts(self.theory, findings, self.options, deadline=final)
        return findings


def enumerate_abducts(
    theory: Theory,
    options: ProverOptions,
    statistics: Optional[RunStatistics] = None,
) -> List[AbductFinding]:
    """
    Find abduct tuples with the proofs they enable, each with a consistency verdict.

    Raises:
        EncodingError: If `options.num_abducts` is 0
    """
    return AbductSearch(theory, options, statistics).run()


def enumerate_deducts(
    theory: Theory,
    options: ProverOptions,
    statistics: Optional[RunStatistics] = None,
    deadline: Optional[float] = None,
) -> Tuple[List[DeductFinding], bool]:
    """
    List concrete goals that fill a wildcard conjecture, each with a proof.

    Returns:
        Tuple of (findings, whether the time limit cut the enumeration short)
    """
    deadline = deadline if deadline is not None else time.monotonic() + options.time_limit
    search = BoundedSearch(theory, options, deadline, statistics)
    enumerator = ModelEnumerator(search, _goal_projection, options.abduct_enumeration_cap)
    found = enumerator.run()
    findings = [DeductFinding(goal=proof.goal, proof=proof) for _, proof in found]
    logger.info(f"Enumerated {len(findings)} deducts")
    return findings, enumerator.timed_out
