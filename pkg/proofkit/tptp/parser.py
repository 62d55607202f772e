"""Problem-file parsing: fof clauses to a ProblemFile."""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, List, Optional, Tuple

from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from proofkit.utils.exceptions import (
    HintSyntaxError,
    ProblemStructureError,
    ProofKitError,
    TptpSyntaxError,
)
from proofkit.utils.logger import logger

from .ast import FAtom, FConst, FNumber, FVar, FWild, Formula, iter_atoms
from .grammar import FofTransformer, RawStatement, get_parser
from .hints import AtomPattern, AxiomPattern, Hint
from .signature import Signature


AXIOM_ROLES = frozenset({"axiom", "hypothesis", "lemma", "theorem", "definition"})
CONJECTURE_ROLE = "conjecture"
HINT_ROLE = "hint"


@dataclass
class FormulaEntry:
    """A named formula with its role, as written in the file."""

    name: str
    role: str
    formula: Formula
    line: int = field(default=0, compare=False)


@dataclass
class ProblemFile:
    """
    Parsed problem file.

    Formulas stay in raw first-order form; `proofkit.logic` normalizes them.
    `constants` lists constant symbols in order of first occurrence.
    """

    axioms: List[FormulaEntry]
    conjecture: FormulaEntry
    hints: List[Hint] = field(default_factory=list)
    signature: Signature = field(default_factory=Signature)
    constants: List[str] = field(default_factory=list)

    def axiom_names(self) -> List[str]:
        return [entry.name for entry in self.axioms]


def _parse_statements(text: str) -> List[RawStatement]:
    try:
        tree = get_parser().parse(text)
    except UnexpectedEOF as e:
        raise TptpSyntaxError("unexpected end of input", None, None) from e
    except UnexpectedInput as e:
        line = getattr(e, "line", None)
        column = getattr(e, "column", None)
        token = getattr(e, "token", None)
        if token is not None:
            message = f"unexpected token {str(token)!r}"
        else:
            char = getattr(e, "char", None)
            message = f"unexpected character {char!r}" if char else "syntax error"
        if line is not None and line < 0:
            line, column = None, None
        raise TptpSyntaxError(message, line, column) from e

    try:
        return FofTransformer().transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, ProofKitError):
            raise e.orig_exc from None
        raise


def parse_problem(text: str) -> ProblemFile:
    """
    Parse a problem file in the supported fof subset.

    Args:
        text: Full problem text

    Returns:
        ProblemFile with raw formulas, hints, signature and constants

    Raises:
        TptpSyntaxError: On a syntax error (with line and column)
        SignatureError: On an arity clash or a function symbol
        ProblemStructureError: On a missing or repeated conjecture or an unknown role
        HintSyntaxError: On a malformed hint clause
    """
    statements = _parse_statements(text)

    axioms: List[FormulaEntry] = []
    conjectures: List[FormulaEntry] = []
    hints: List[Hint] = []
    seen_names: set = set()

    for statement in statements:
        if statement.role == HINT_ROLE:
            hints.append(_hint_from_statement(statement))
            continue

        if statement.role not in AXIOM_ROLES and statement.role != CONJECTURE_ROLE:
            raise ProblemStructureError(
                f"line {statement.line}: unknown role {statement.role!r} in {statement.name}"
            )
        if len(statement.items) != 1 or isinstance(statement.items[0], FNumber):
            raise ProblemStructureError(
                f"line {statement.line}: {statement.name} must carry exactly one formula"
            )
        if statement.name in seen_names:
            raise ProblemStructureError(
                f"line {statement.line}: duplicate formula name {statement.name}"
            )
        seen_names.add(statement.name)

        entry = FormulaEntry(
            name=statement.name,
            role=statement.role,
            formula=statement.items[0],
            line=statement.line,
        )
        if statement.role == CONJECTURE_ROLE:
            conjectures.append(entry)
        else:
            axioms.append(entry)

    if not conjectures:
        raise ProblemStructureError("no conjecture")
    if len(conjectures) > 1:
        names = ", ".join(entry.name for entry in conjectures)
        raise ProblemStructureError(f"multiple conjectures: {names}")

    conjecture = conjectures[0]
    signature, constants = _collect_symbols(axioms, conjecture)

    logger.debug(
        f"Parsed {len(axioms)} axioms, {len(hints)} hints, "
        f"{len(signature)} predicates, {len(constants)} constants"
    )
    return ProblemFile(
        axioms=axioms,
        conjecture=conjecture,
        hints=hints,
        signature=signature,
        constants=constants,
    )


def parse_problem_file(path: Path) -> ProblemFile:
    """Read and parse a problem file from disk."""
    return parse_problem(Path(path).read_text(encoding="utf-8"))


def _collect_symbols(
    axioms: Iterable[FormulaEntry], conjecture: FormulaEntry
) -> Tuple[Signature, List[str]]:
    signature = Signature()
    constants: List[str] = []
    warned_eq = False

    for entry in [*axioms, conjecture]:
        in_conjecture = entry is conjecture
        for atom in iter_atoms(entry.formula):
            if atom.predicate is None and not in_conjecture:
                raise ProblemStructureError(
                    f"line {entry.line}: wildcard predicate outside the conjecture in {entry.name}"
                )
            for arg in atom.args:
                if isinstance(arg, FNumber):
                    raise ProblemStructureError(
                        f"line {entry.line}: numeric argument in {entry.name}"
                    )
                if isinstance(arg, FWild) and not in_conjecture:
                    raise ProblemStructureError(
                        f"line {entry.line}: wildcard argument outside the conjecture in {entry.name}"
                    )
                if isinstance(arg, FConst) and arg.name not in constants:
                    constants.append(arg.name)
            if atom.predicate is None:
                continue
            if atom.predicate == "eq" and not warned_eq:
                logger.warning("'=' is read as the predicate eq/2 with no equality reasoning")
                warned_eq = True
            signature.register(atom.predicate, atom.arity, entry.line)

    return signature, constants


def parse_hint(text: str) -> Hint:
    """
    Parse a single `fof(name, hint, atom, step, axiom).` clause.

    Raises:
        HintSyntaxError: If the clause is not a well-formed hint
    """
    statements = _parse_statements(text)
    if len(statements) != 1:
        raise HintSyntaxError(f"expected one hint clause, found {len(statements)}")
    statement = statements[0]
    if statement.role != HINT_ROLE:
        raise HintSyntaxError(f"clause {statement.name} has role {statement.role!r}, not hint")
    return _hint_from_statement(statement)


def _is_wildcard(item: object) -> bool:
    return isinstance(item, FAtom) and item.predicate is None and not item.args


def _hint_argument(term: object, where: str) -> Optional[object]:
    if isinstance(term, FWild):
        return None
    if isinstance(term, FNumber):
        return term.value
    if isinstance(term, FConst):
        return term.name
    if isinstance(term, FVar):
        raise HintSyntaxError(f"{where}: variable {term.name} in a hint; use a constant or index")
    raise HintSyntaxError(f"{where}: unsupported hint argument")


def _hint_from_statement(statement: RawStatement) -> Hint:
    where = f"line {statement.line}, hint {statement.name}"
    if len(statement.items) != 3:
        raise HintSyntaxError(
            f"{where}: expected 3 payload positions, found {len(statement.items)}"
        )
    atom_item, step_item, axiom_item = statement.items

    atom_pattern = None
    if not _is_wildcard(atom_item):
        if not isinstance(atom_item, FAtom) or atom_item.predicate is None:
            raise HintSyntaxError(f"{where}: first position must be an atom or _")
        atom_pattern = AtomPattern(
            predicate=atom_item.predicate,
            args=[_hint_argument(arg, where) for arg in atom_item.args],
        )

    step_index = None
    if not _is_wildcard(step_item):
        if not isinstance(step_item, FNumber) or step_item.value < 1:
            raise HintSyntaxError(f"{where}: step position must be a positive integer or _")
        step_index = step_item.value

    axiom_pattern = None
    if not _is_wildcard(axiom_item):
        if not isinstance(axiom_item, FAtom) or axiom_item.predicate is None:
            raise HintSyntaxError(f"{where}: third position must be an axiom pattern or _")
        axiom_pattern = AxiomPattern(
            axiom=axiom_item.predicate,
            args=[_hint_argument(arg, where) for arg in axiom_item.args] or None,
        )

    if atom_pattern is None and axiom_pattern is None:
        raise HintSyntaxError(f"{where}: vacuous hint")

    return Hint(
        name=statement.name,
        atom_pattern=atom_pattern,
        step_index=step_index,
        axiom_pattern=axiom_pattern,
    )
