"""Proof encoder for orchestrating the constraint sections."""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Type

from proofkit.logic.terms import ConstantPool, is_coherent
from proofkit.logic.theory import ResolvedHint, Theory
from proofkit.utils.exceptions import EncodingError
from proofkit.utils.logger import logger

from .constraints import Constraint, ConstraintProblem
from .layout import EncodingParams, EncodingVariables
from .sections import (
    AbductSection,
    AssumptionSection,
    CaseSplitSection,
    ClosingSection,
    ContentsShapeSection,
    EncodingSection,
    GoalSection,
    HintSection,
    ModusPonensSection,
    StepSection,
    StepSkeletonSection,
    VisibilitySection,
)


@dataclass
class Encoding:
    """A constraint problem together with the layout needed to decode its models."""
    problem: ConstraintProblem
    variables: EncodingVariables
    params: EncodingParams
    theory: Theory

    @property
    def pool(self) -> ConstantPool:
        return self.variables.pool


class ProofEncoder:
    """
    Compiles a theory into a constraint problem whose models are proofs of
    exactly `params.length` body steps.
    """

    # Sections emitted for every encoding, in order
    SECTION_CLASSES: List[Type[EncodingSection]] = [
        ContentsShapeSection,
        StepSkeletonSection,
        AssumptionSection,
        ModusPonensSection,
        CaseSplitSection,
        ClosingSection,
        VisibilitySection,
        GoalSection,
        AbductSection,
        HintSection,
    ]

    # Sections that describe the kinds of a single body step
    STEP_SECTION_CLASSES: List[Type[StepSection]] = [
        StepSkeletonSection,
        AssumptionSection,
        ModusPonensSection,
        CaseSplitSection,
        ClosingSection,
    ]

    def __init__(self, theory: Theory, params: EncodingParams):
        self.theory = theory
        self.params = params

    def validate(self) -> None:
        """
        Check that every axiom fits the encoding's fixed shape.

        Raises:
            EncodingError: If an axiom exceeds a size parameter
        """
        params = self.params
        for axiom in self.theory.axioms:
            if not is_coherent(axiom):
                raise EncodingError(f"axiom {axiom.name} is not in coherent form")
            if len(axiom.premises) > params.max_premises:
                raise EncodingError(f"axiom {axiom.name} has more than {params.max_premises} premises")
            if axiom.num_vars > params.max_vars:
                raise EncodingError(f"axiom {axiom.name} has more than {params.max_vars} variables")
            if len(axiom.exist_vars) > params.max_exist:
                raise EncodingError(
                    f"axiom {axiom.name} has more than {params.max_exist} existential variables"
                )
            for atom in axiom.consequent_atoms():
                if atom.arity > params.max_arity:
                    raise EncodingError(f"axiom {axiom.name} uses an atom wider than {params.max_arity}")
            for atom in axiom.premises:
                if atom.arity > params.max_arity:
                    raise EncodingError(f"axiom {axiom.name} uses an atom wider than {params.max_arity}")
            if not axiom.is_case_split and len(axiom.consequent_atoms()) > params.max_conjunct_size:
                raise EncodingError(
                    f"axiom {axiom.name} concludes more than {params.max_conjunct_size} atoms"
                )

    def layout(self) -> EncodingVariables:
        """Declare the variables of a fresh encoding."""
        pool = self.theory.pool(self.params.num_steps)
        if len(pool) == 0:
            pool = ConstantPool.from_names(["c0"])
        return EncodingVariables(ConstraintProblem(), self.theory, self.params, pool)

    def encode(self) -> Encoding:
        """
        Emit every section.

        Returns:
            Encoding with the constraint problem and its variable layout
        """
        self.validate()
        variables = self.layout()
        problem = variables.problem

        for section_class in self.SECTION_CLASSES:
            section = section_class(variables)
            constraints = section.emit()
            problem.extend(constraints)
            logger.debug(f"{section_class.__name__}: {len(constraints)} constraints")

        logger.info(
            f"Encoded length {self.params.length} (+{self.params.num_abducts} abduct slots): "
            f"{len(problem.variables)} variables, {len(problem)} constraints"
        )
        return Encoding(problem=problem, variables=variables, params=self.params, theory=self.theory)


def encode_problem(
    theory: Theory,
    params: EncodingParams,
    hints: Optional[Sequence[ResolvedHint]] = None,
) -> Encoding:
    """
    Compile a theory, its conjecture and hints into a constraint problem.

    Args:
        theory: Normalized theory (axioms, assumptions and goal)
        params: Size parameters
        hints: Hints to use instead of the theory's own

    Returns:
        Encoding whose models are the proofs of `params.length` body steps

    Raises:
        EncodingError: If an axiom exceeds the size parameters or a hint
            names a step outside the proof
    """
    if hints is not None:
        theory = theory.with_hints(hints)
    return ProofEncoder(theory, params).encode()


def encode_step_kinds(variables: EncodingVariables, s: int) -> List[Constraint]:
    """Constraints describing the kinds body step `s` may take."""
    if s not in variables.body_steps():
        raise EncodingError(f"step {s} is not a body step")
    constraints: List[Constraint] = []
    for section_class in ProofEncoder.STEP_SECTION_CLASSES:
        constraints.extend(section_class(variables).emit_step(s))
    return constraints


def encode_abduct_slots(variables: EncodingVariables) -> List[Constraint]:
    """Constraints on the abduct slots of a layout."""
    if not variables.params.num_abducts:
        raise EncodingError("the encoding has no abduct slots")
    return AbductSection(variables).emit()


def encode_goal(variables: EncodingVariables) -> List[Constraint]:
    """Goal constraints: closing-step contents, wildcards and the final step."""
    return GoalSection(variables).emit()


def encode_hints(variables: EncodingVariables, hints: Sequence[ResolvedHint]) -> List[Constraint]:
    """Constraints expressing the given hints over a layout."""
    return HintSection(variables, hints).emit()
