"""Propositional lowering and SAT backends."""

from .backends import (
    BuiltinBackend,
    ExternalBackend,
    PysatBackend,
    SatBackend,
    SolveResult,
    SolveStatus,
    make_backend,
    solve,
)
from .cdcl import CDCLSolver
from .cnf import CNFInstance, Model, decode_assignment, lower
from .dimacs import export_dimacs, import_model, parse_assignment

__all__ = [
    "BuiltinBackend",
    "ExternalBackend",
    "PysatBackend",
    "SatBackend",
    "SolveResult",
    "SolveStatus",
    "make_backend",
    "solve",
    "CDCLSolver",
    "CNFInstance",
    "Model",
    "decode_assignment",
    "lower",
    "export_dimacs",
    "import_model",
    "parse_assignment",
]
