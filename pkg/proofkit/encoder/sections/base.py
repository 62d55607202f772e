"""Base class for all encoding sections."""

from abc import ABC, abstractmethod
from typing import Iterable, List, Optional, Sequence

from proofkit.logic.terms import Atom, Const, Var
from proofkit.schemas.proof import StepKind

from ..constraints import (
    Constraint,
    IntVar,
    all_of,
    any_of,
    eq,
    one_of,
    same,
)
from ..layout import EncodingVariables


PREMISE_KINDS = (StepKind.ASSUMPTION, StepKind.MP, StepKind.FIRSTCASE, StepKind.SECONDCASE)
CLOSING_KINDS = (StepKind.QEDBYCASES, StepKind.QEDBYASSUMPTION, StepKind.QEDBYEFQ)


class EncodingSection(ABC):
    """
    Base class for all encoding sections.

    Subclasses should:
    - Set the `name` class attribute
    - Implement the `emit()` method
    - Use `add()` to record constraints
    """

    name: str = "section"  # Override in subclass

    def __init__(self, variables: EncodingVariables):
        """
        Initialize the section over a variable layout.

        Args:
            variables: Variables of the encoding under construction
        """
        self.vars = variables
        self.theory = variables.theory
        self.pool = variables.pool
        self.constraints: List[Constraint] = []

    @abstractmethod
    def emit(self) -> List[Constraint]:
        """
        Build the section's constraints.

        Returns:
            List of constraints, implicitly conjoined
        """
        pass

    def add(self, constraint: Constraint) -> None:
        self.constraints.append(constraint)

    # Step helpers

    def kind_is(self, s: int, kind: StepKind) -> Constraint:
        return eq(self.vars.kind[s], kind.code)

    def kind_in(self, s: int, kinds: Iterable[StepKind]) -> Constraint:
        return one_of(self.vars.kind[s], [k.code for k in kinds])

    def usable_premise(self, t: int) -> Constraint:
        """Step `t` holds a plain conjunction usable as a premise."""
        return all_of([self.kind_in(t, PREMISE_KINDS), eq(self.vars.cases[t], 0)])

    # Contents helpers

    def slot_inactive(self, s: int, d: int, a: int) -> Constraint:
        return eq(self.vars.cpred[s][d][a], self.vars.sentinel)

    def slots_inactive(self, s: int, d: int, first: int = 0) -> Constraint:
        return all_of(self.slot_inactive(s, d, a) for a in range(first, self.vars.conj))

    def slots_equal(self, s: int, d: int, a: int, t: int, e: int, b: int) -> Constraint:
        """Atom slot (s, d, a) holds the same atom as slot (t, e, b)."""
        v = self.vars
        parts = [same(v.cpred[s][d][a], v.cpred[t][e][b])]
        parts.extend(same(x, y) for x, y in zip(v.carg[s][d][a], v.carg[t][e][b]))
        return all_of(parts)

    def slot_holds(self, s: int, d: int, a: int, predicate: int, args: Sequence[Constraint]) -> Constraint:
        """Atom slot has the given predicate; `args` constrain its argument variables."""
        return all_of([eq(self.vars.cpred[s][d][a], predicate), *args])

    def slot_is_fact(self, s: int, d: int, a: int, predicate: str, args: Sequence[str]) -> Constraint:
        v = self.vars
        return self.slot_holds(
            s, d, a, v.code(predicate),
            [eq(v.carg[s][d][a][j], v.constant(name)) for j, name in enumerate(args)],
        )

    def slot_is_atom(self, s: int, d: int, a: int, atom: Atom, values: Sequence[IntVar]) -> Constraint:
        """
        Atom slot holds `atom` with its variables read from `values`.

        `values[i]` is the integer variable carrying formula variable `i`.
        """
        v = self.vars
        args = []
        for j, term in enumerate(atom.args):
            target = v.carg[s][d][a][j]
            if isinstance(term, Var):
                args.append(same(target, values[term.index]))
            else:
                args.append(eq(target, v.constant(term.name)))
        return self.slot_holds(s, d, a, v.code(atom.predicate), args)

    def first_slot_matches(self, s: int, predicate: int, args: Sequence[Optional[int]]) -> Constraint:
        """Some atom slot of the first disjunct matches a pattern (None is a wildcard)."""
        v = self.vars
        options = []
        for a in range(v.conj):
            pinned = [eq(v.carg[s][0][a][j], code) for j, code in enumerate(args) if code is not None]
            options.append(self.slot_holds(s, 0, a, predicate, pinned))
        return any_of(options)


class StepSection(EncodingSection):
    """Section whose constraints are emitted one body step at a time."""

    def emit(self) -> List[Constraint]:
        for s in self.vars.body_steps():
            self.constraints.extend(self.emit_step(s))
        return self.constraints

    @abstractmethod
    def emit_step(self, s: int) -> List[Constraint]:
        """
        Build the constraints of body step `s`.

        Returns:
            List of constraints for this step only
        """
        pass
