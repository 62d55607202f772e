"""Coherent-logic core: terms, normalization and theories."""

from .goal import FALSUM_GOAL, GoalAtom, GoalSpec, Hole
from .normalize import ConjectureParts, Normalizer, fol_to_cl, to_dnf, to_nnf
from .symmetry import SymmetryGroups, symmetry_groups, variants
from .terms import Atom, CLFormula, Conjunct, Const, ConstantPool, Var, instantiate, is_coherent
from .theory import ResolvedHint, Theory, build_theory, resolve_hints

__all__ = [
    "FALSUM_GOAL",
    "GoalAtom",
    "GoalSpec",
    "Hole",
    "ConjectureParts",
    "Normalizer",
    "fol_to_cl",
    "to_dnf",
    "to_nnf",
    "SymmetryGroups",
    "symmetry_groups",
    "variants",
    "Atom",
    "CLFormula",
    "Conjunct",
    "Const",
    "ConstantPool",
    "Var",
    "instantiate",
    "is_coherent",
    "ResolvedHint",
    "Theory",
    "build_theory",
    "resolve_hints",
]
