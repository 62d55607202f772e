"""Render parsed problems back to fof text."""

from typing import List

from .ast import (
    FAnd,
    FAtom,
    FConst,
    FFalse,
    FIff,
    FImplies,
    FNot,
    FNumber,
    FOr,
    FQuant,
    FTrue,
    FVar,
    FWild,
    Formula,
)
from .hints import Hint
from .parser import ProblemFile


def render_term(term) -> str:
    if isinstance(term, (FVar, FConst)):
        return term.name
    if isinstance(term, FWild):
        return "_"
    if isinstance(term, FNumber):
        return str(term.value)
    return str(term)


def _render_atom(atom: FAtom) -> str:
    if atom.predicate == "neq" and len(atom.args) == 2:
        return f"({render_term(atom.args[0])} != {render_term(atom.args[1])})"
    if atom.predicate == "eq" and len(atom.args) == 2:
        return f"({render_term(atom.args[0])} = {render_term(atom.args[1])})"
    name = atom.predicate if atom.predicate is not None else "_"
    if not atom.args:
        return name
    return f"{name}({','.join(render_term(arg) for arg in atom.args)})"


def render_formula(formula: Formula) -> str:
    """
    Print a formula fully parenthesized.

    Re-parsing the output yields the same tree.
    """
    if isinstance(formula, FAtom):
        return _render_atom(formula)
    if isinstance(formula, FTrue):
        return "$true"
    if isinstance(formula, FFalse):
        return "$false"
    if isinstance(formula, FNot):
        return f"~ {_wrap(formula.body)}"
    if isinstance(formula, FAnd):
        return "(" + " & ".join(render_formula(item) for item in formula.items) + ")"
    if isinstance(formula, FOr):
        return "(" + " | ".join(render_formula(item) for item in formula.items) + ")"
    if isinstance(formula, FImplies):
        return f"({render_formula(formula.left)} => {render_formula(formula.right)})"
    if isinstance(formula, FIff):
        return f"({render_formula(formula.left)} <=> {render_formula(formula.right)})"
    if isinstance(formula, FQuant):
        return f"{formula.kind} [{','.join(formula.variables)}] : {_wrap(formula.body)}"
    raise TypeError(f"not a formula: {formula!r}")


def _wrap(formula: Formula) -> str:
    text = render_formula(formula)
    if isinstance(formula, (FAtom, FTrue, FFalse, FNot, FQuant)) or text.startswith("("):
        return text
    return f"({text})"


def _render_hint_arg(arg) -> str:
    return "_" if arg is None else str(arg)


def render_hint(hint: Hint) -> str:
    if hint.atom_pattern is None:
        atom = "_"
    else:
        args = ",".join(_render_hint_arg(arg) for arg in hint.atom_pattern.args)
        atom = f"{hint.atom_pattern.predicate}({args})" if args else hint.atom_pattern.predicate
    step = "_" if hint.step_index is None else str(hint.step_index)
    if hint.axiom_pattern is None:
        axiom = "_"
    elif hint.axiom_pattern.args:
        args = ",".join(_render_hint_arg(arg) for arg in hint.axiom_pattern.args)
        axiom = f"{hint.axiom_pattern.axiom}({args})"
    else:
        axiom = hint.axiom_pattern.axiom
    return f"fof({hint.name}, hint, {atom}, {step}, {axiom})."


def render_problem(problem: ProblemFile) -> str:
    """Print a ProblemFile as fof text, axioms first, then conjecture and hints."""
    lines: List[str] = []
    for entry in problem.axioms:
        lines.append(f"fof({entry.name}, {entry.role}, {render_formula(entry.formula)}).")
    conjecture = problem.conjecture
    lines.append(
        f"fof({conjecture.name}, {conjecture.role}, {render_formula(conjecture.formula)})."
    )
    lines.extend(render_hint(hint) for hint in problem.hints)
    return "\n".join(lines) + "\n"
