"""Bounded proof search as a finite-domain constraint problem."""

from .constraints import (
    And,
    Bool,
    Constraint,
    ConstraintProblem,
    Implies,
    IntVar,
    Lin,
    Not,
    Or,
    evaluate,
)
from .encoder import (
    Encoding,
    ProofEncoder,
    encode_abduct_slots,
    encode_goal,
    encode_hints,
    encode_problem,
    encode_step_kinds,
)
from .layout import EncodingParams, EncodingVariables

__all__ = [
    "And",
    "Bool",
    "Constraint",
    "ConstraintProblem",
    "Implies",
    "IntVar",
    "Lin",
    "Not",
    "Or",
    "evaluate",
    "Encoding",
    "ProofEncoder",
    "encode_abduct_slots",
    "encode_goal",
    "encode_hints",
    "encode_problem",
    "encode_step_kinds",
    "EncodingParams",
    "EncodingVariables",
]
