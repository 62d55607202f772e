"""Normalized theories: axioms, assumptions, goal and resolved hints."""

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Dict, Iterable, List, Optional, Sequence, Tuple

from proofkit.schemas.proof import Fact
from proofkit.tptp.hints import Hint
from proofkit.tptp.signature import BOTTOM, TOP, Signature
from proofkit.utils.exceptions import HintResolutionError
from proofkit.utils.logger import logger

from .goal import GoalSpec
from .normalize import Normalizer
from .symmetry import SymmetryGroups, symmetry_groups
from .terms import CLFormula, ConstantPool

if TYPE_CHECKING:
    from proofkit.tptp.parser import ProblemFile


@dataclass(frozen=True)
class ResolvedHint:
    """
    Hint with names checked against the theory.

    `atom_args` and `axiom_args` hold constant names, or None for a wildcard
    position. An empty `axiom_args` leaves the instantiation free.
    """
    name: str
    step_index: Optional[int] = None
    atom_predicate: Optional[str] = None
    atom_args: Tuple[Optional[str], ...] = ()
    axiom: Optional[str] = None
    axiom_args: Tuple[Optional[str], ...] = ()


@dataclass
class Theory:
    """Everything the encoder and checker need about one problem."""
    signature: Signature
    axioms: List[CLFormula]
    constants: Tuple[str, ...]
    assumptions: List[Fact]
    goal: GoalSpec
    hints: List[ResolvedHint] = field(default_factory=list)
    conjecture_name: str = "conjecture"
    skolem: Dict[str, str] = field(default_factory=dict)

    def axiom(self, name: str) -> CLFormula:
        for formula in self.axioms:
            if formula.name == name:
                return formula
        raise KeyError(name)

    def axiom_index(self, name: str) -> int:
        for i, formula in enumerate(self.axioms):
            if formula.name == name:
                return i
        raise KeyError(name)

    @property
    def axiom_map(self) -> Dict[str, CLFormula]:
        return {formula.name: formula for formula in self.axioms}

    @property
    def symmetries(self) -> SymmetryGroups:
        """Argument symmetry group per predicate, as stated by the axioms."""
        return symmetry_groups(self.axioms, self.signature)

    @property
    def max_exist(self) -> int:
        return max((len(f.exist_vars) for f in self.axioms), default=0)

    @property
    def max_premises(self) -> int:
        return max((len(f.premises) for f in self.axioms), default=0)

    @property
    def max_vars(self) -> int:
        return max((f.num_vars for f in self.axioms), default=0)

    @property
    def max_conjunct_size(self) -> int:
        sizes = [len(c.atoms) for f in self.axioms for c in f.disjuncts]
        sizes.append(self.goal.max_conjunct_size)
        return max(sizes + [1])

    @property
    def max_arity(self) -> int:
        return self.signature.max_arity

    def pool(self, n_steps: int) -> ConstantPool:
        """Constant pool with one fresh block per step."""
        base = ConstantPool(inputs=tuple(self.constants))
        return base.with_fresh_blocks(n_steps, self.max_exist)

    def with_hints(self, hints: Sequence[ResolvedHint]) -> "Theory":
        return Theory(
            signature=self.signature,
            axioms=self.axioms,
            constants=self.constants,
            assumptions=self.assumptions,
            goal=self.goal,
            hints=list(hints),
            conjecture_name=self.conjecture_name,
            skolem=self.skolem,
        )

    @classmethod
    def from_parts(
        cls,
        axioms: Sequence[CLFormula],
        assumptions: Sequence[Fact],
        goal: GoalSpec,
        constants: Optional[Sequence[str]] = None,
        signature: Optional[Signature] = None,
    ) -> "Theory":
        """
        Assemble a theory directly from CL objects.

        The signature and constant list are derived from the atoms when not given.
        """
        if signature is None:
            signature = Signature()
            for formula in axioms:
                for atom in list(formula.premises) + [a for c in formula.disjuncts for a in c.atoms]:
                    signature.register(atom.predicate, atom.arity)
            for fact in assumptions:
                signature.register(fact.predicate, len(fact.args))
            for atom in goal.atoms():
                if atom.predicate is not None:
                    signature.register(atom.predicate, atom.arity)
        if constants is None:
            names: List[str] = []
            for fact in assumptions:
                names.extend(a for a in fact.args if a not in names)
            for atom in goal.atoms():
                for arg in atom.args:
                    name = getattr(arg, "name", None)
                    if name is not None and name not in names:
                        names.append(name)
            for formula in axioms:
                for atom in list(formula.premises) + [a for c in formula.disjuncts for a in c.atoms]:
                    for arg in atom.args:
                        name = getattr(arg, "name", None)
                        if name is not None and name not in names:
                            names.append(name)
            constants = names
        return cls(
            signature=signature,
            axioms=list(axioms),
            constants=tuple(constants),
            assumptions=list(assumptions),
            goal=goal,
        )


def build_theory(problem: "ProblemFile") -> Theory:
    """
    Normalize a parsed problem.

    Axioms keep file order; linking axioms of bar predicates follow them.

    Raises:
        NormalizationError: If a formula has no coherent form
        HintResolutionError: If a hint names something the theory lacks
    """
    signature = problem.signature.copy()
    normalizer = Normalizer(signature)

    axioms: List[CLFormula] = []
    for entry in problem.axioms:
        axioms.extend(normalizer.axiom(entry.name, entry.formula))

    parts = normalizer.conjecture(problem.conjecture.formula, problem.constants)
    axioms.extend(normalizer.take_linking())

    constants = list(parts.constants)
    constants.extend(name for name in problem.constants if name not in constants)

    theory = Theory(
        signature=signature,
        axioms=axioms,
        constants=tuple(constants),
        assumptions=parts.assumptions,
        goal=parts.goal,
        conjecture_name=problem.conjecture.name,
        skolem=parts.skolem,
    )
    if problem.hints:
        theory = theory.with_hints(resolve_hints(problem.hints, theory))

    logger.info(
        f"Theory {theory.conjecture_name}: {len(axioms)} axioms, "
        f"{len(theory.assumptions)} assumptions, {len(theory.constants)} constants"
    )
    return theory


def _resolve_argument(value, theory: Theory, where: str) -> Optional[str]:
    if value is None:
        return None
    if isinstance(value, int):
        skolem = list(theory.skolem.values())
        if not 0 <= value < len(skolem):
            raise HintResolutionError(
                f"{where}: index {value} outside the {len(skolem)} conjecture variables"
            )
        return skolem[value]
    if value not in theory.constants:
        raise HintResolutionError(f"{where}: unknown constant {value}")
    return value


def resolve_hints(hints: Iterable[Hint], theory: Theory) -> List[ResolvedHint]:
    """
    Check hints against a theory and translate their arguments to constants.

    Numeric arguments index the conjecture's universally quantified variables.
    """
    resolved: List[ResolvedHint] = []
    for hint in hints:
        where = f"hint {hint.name}"
        atom_predicate = None
        atom_args: Tuple[Optional[str], ...] = ()
        if hint.atom_pattern is not None:
            atom_predicate = hint.atom_pattern.predicate
            if atom_predicate not in theory.signature or atom_predicate in (TOP, BOTTOM):
                raise HintResolutionError(f"{where}: unknown predicate {atom_predicate}")
            arity = theory.signature.arity(atom_predicate)
            if len(hint.atom_pattern.args) != arity:
                raise HintResolutionError(
                    f"{where}: {atom_predicate} takes {arity} arguments, "
                    f"pattern has {len(hint.atom_pattern.args)}"
                )
            atom_args = tuple(_resolve_argument(a, theory, where) for a in hint.atom_pattern.args)

        axiom_name = None
        axiom_args: Tuple[Optional[str], ...] = ()
        if hint.axiom_pattern is not None:
            axiom_name = hint.axiom_pattern.axiom
            try:
                formula = theory.axiom(axiom_name)
            except KeyError:
                split = [f.name for f in theory.axioms if f.name.startswith(f"{axiom_name}_")]
                detail = f" (normalized into {', '.join(split)})" if split else ""
                raise HintResolutionError(f"{where}: unknown axiom {axiom_name}{detail}") from None
            pattern_args = hint.axiom_pattern.args or []
            if pattern_args and len(pattern_args) != formula.num_univ:
                raise HintResolutionError(
                    f"{where}: {axiom_name} has {formula.num_univ} universal variables, "
                    f"pattern has {len(pattern_args)}"
                )
            axiom_args = tuple(_resolve_argument(a, theory, where) for a in pattern_args)

        resolved.append(ResolvedHint(
            name=hint.name,
            step_index=hint.step_index,
            atom_predicate=atom_predicate,
            atom_args=atom_args,
            axiom=axiom_name,
            axiom_args=axiom_args,
        ))
    return resolved
