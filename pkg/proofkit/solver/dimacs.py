"""DIMACS CNF export and solver-output import."""

from typing import List, Optional

from proofkit.utils.exceptions import SolverOutputError

from .cnf import CNFInstance, Model

SAT_MARKERS = ("SATISFIABLE", "SAT")
UNSAT_MARKERS = ("UNSATISFIABLE", "UNSAT")


def export_dimacs(instance: CNFInstance) -> bytes:
    """
    Serialize an instance as DIMACS CNF.

    The header is `p cnf V C`; each clause is a line of literals ending in 0.
    """
    lines = [f"p cnf {instance.num_vars} {len(instance.clauses)}"]
    for clause in instance.clauses:
        lines.append(" ".join(str(lit) for lit in clause) + (" 0" if clause else "0"))
    return ("\n".join(lines) + "\n").encode("ascii")


def parse_assignment(output: bytes) -> Optional[List[int]]:
    """
    Read the literal list from solver output.

    Accepts the competition format (`s SATISFIABLE` with `v` lines), the
    MiniSat result-file format (`SAT` followed by literals) and a bare
    literal list. Comment lines (`c ...`) are skipped.

    Returns:
        Signed literals, or None when the output reports unsatisfiability

    Raises:
        SolverOutputError: If the output carries neither an assignment nor an UNSAT marker
    """
    try:
        text = output.decode("utf-8")
    except UnicodeDecodeError as e:
        raise SolverOutputError(f"solver output is not text: {e}") from e

    literals: List[int] = []
    saw_sat = False
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "s":
            tokens = tokens[1:]
        if tokens and tokens[0] in UNSAT_MARKERS:
            return None
        if tokens and tokens[0] in SAT_MARKERS:
            saw_sat = True
            tokens = tokens[1:]
        if tokens and tokens[0] == "v":
            tokens = tokens[1:]
        for token in tokens:
            try:
                value = int(token)
            except ValueError:
                raise SolverOutputError(f"unexpected token {token!r} in solver output") from None
            if value != 0:
                literals.append(value)

    if not literals and not saw_sat:
        raise SolverOutputError("solver output has neither an assignment nor an UNSAT marker")
    return literals


def import_model(instance: CNFInstance, output: bytes) -> Optional[Model]:
    """
    Invert a solver's assignment through the instance's one-hot map.

    Returns:
        The decoded model, or None for UNSAT
    """
    literals = parse_assignment(output)
    if literals is None:
        return None
    for lit in literals:
        if abs(lit) > instance.num_vars:
            raise SolverOutputError(f"literal {lit} outside 1..{instance.num_vars}")
    return instance.decode(literals)
