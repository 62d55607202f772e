"""TPTP/fof frontend: grammar, parser, hints and printer."""

from .ast import Formula, iter_atoms
from .hints import AtomPattern, AxiomPattern, Hint
from .parser import FormulaEntry, ProblemFile, parse_hint, parse_problem, parse_problem_file
from .printer import render_formula, render_hint, render_problem
from .signature import BOTTOM, NEQ, TOP, Signature

__all__ = [
    "Formula",
    "iter_atoms",
    "AtomPattern",
    "AxiomPattern",
    "Hint",
    "FormulaEntry",
    "ProblemFile",
    "parse_hint",
    "parse_problem",
    "parse_problem_file",
    "render_formula",
    "render_hint",
    "render_problem",
    "BOTTOM",
    "NEQ",
    "TOP",
    "Signature",
]
