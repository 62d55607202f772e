"""
Finite-domain constraint language.

Integer variables over `[lo, hi)`, linear atoms `Σ cᵢ·vᵢ ⋈ k` with
⋈ ∈ {=, !=, <=, <}, and boolean combinations of them.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from proofkit.utils.exceptions import EncodingError


OPS = ("=", "!=", "<=", "<")


@dataclass(frozen=True)
class IntVar:
    name: str
    lo: int
    hi: int

    @property
    def size(self) -> int:
        return self.hi - self.lo

    @property
    def domain(self) -> range:
        return range(self.lo, self.hi)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Lin:
    """Linear atom over at most a handful of variables."""
    terms: Tuple[Tuple[int, IntVar], ...]
    op: str
    rhs: int

    def holds(self, assignment: Mapping[str, int]) -> bool:
        total = sum(c * assignment[v.name] for c, v in self.terms)
        return compare(total, self.op, self.rhs)

    def negated(self) -> "Lin":
        if self.op == "=":
            return Lin(self.terms, "!=", self.rhs)
        if self.op == "!=":
            return Lin(self.terms, "=", self.rhs)
        flipped = tuple((-c, v) for c, v in self.terms)
        # ¬(Σ ≤ k) is -Σ < -k; ¬(Σ < k) is -Σ ≤ -k
        return Lin(flipped, "<" if self.op == "<=" else "<=", -self.rhs)

    def __str__(self) -> str:
        parts = []
        for c, v in self.terms:
            if c == 1:
                parts.append(f"+{v.name}")
            elif c == -1:
                parts.append(f"-{v.name}")
            else:
                parts.append(f"{c:+d}*{v.name}")
        lhs = " ".join(parts).lstrip("+") or "0"
        return f"{lhs} {self.op} {self.rhs}"


@dataclass(frozen=True)
class Bool:
    value: bool

    def __str__(self) -> str:
        return "true" if self.value else "false"


@dataclass(frozen=True)
class And:
    items: Tuple["Constraint", ...]

    def __str__(self) -> str:
        return "(" + " & ".join(str(i) for i in self.items) + ")" if self.items else "true"


@dataclass(frozen=True)
class Or:
    items: Tuple["Constraint", ...]

    def __str__(self) -> str:
        return "(" + " | ".join(str(i) for i in self.items) + ")" if self.items else "false"


@dataclass(frozen=True)
class Not:
    item: "Constraint"

    def __str__(self) -> str:
        return f"~{self.item}"


@dataclass(frozen=True)
class Implies:
    cond: "Constraint"
    then: "Constraint"

    def __str__(self) -> str:
        return f"({self.cond} -> {self.then})"


Constraint = Union[Lin, Bool, And, Or, Not, Implies]

TRUE = Bool(True)
FALSE = Bool(False)


def compare(total: int, op: str, rhs: int) -> bool:
    if op == "=":
        return total == rhs
    if op == "!=":
        return total != rhs
    if op == "<=":
        return total <= rhs
    if op == "<":
        return total < rhs
    raise EncodingError(f"unknown comparison {op}")


# Atom helpers

def eq(v: IntVar, k: int) -> Constraint:
    if k not in v.domain:
        return FALSE
    return Lin(((1, v),), "=", k)


def ne(v: IntVar, k: int) -> Constraint:
    if k not in v.domain:
        return TRUE
    return Lin(((1, v),), "!=", k)


def lt(v: IntVar, k: int) -> Constraint:
    if k >= v.hi:
        return TRUE
    if k <= v.lo:
        return FALSE
    return Lin(((1, v),), "<", k)


def ge(v: IntVar, k: int) -> Constraint:
    if k <= v.lo:
        return TRUE
    if k >= v.hi:
        return FALSE
    return Lin(((-1, v),), "<=", -k)


def one_of(v: IntVar, values: Iterable[int]) -> Constraint:
    inside = [k for k in values if k in v.domain]
    if not inside:
        return FALSE
    if len(inside) == v.size:
        return TRUE
    return any_of(eq(v, k) for k in inside)


def same(v: IntVar, w: IntVar) -> Constraint:
    """v = w."""
    return Lin(((1, v), (-1, w)), "=", 0)


def differ(v: IntVar, w: IntVar) -> Constraint:
    return Lin(((1, v), (-1, w)), "!=", 0)


def offset(v: IntVar, w: IntVar, k: int) -> Constraint:
    """v - w = k."""
    return Lin(((1, v), (-1, w)), "=", k)


def at_most(v: IntVar, w: IntVar, k: int = 0) -> Constraint:
    """v - w <= k."""
    return Lin(((1, v), (-1, w)), "<=", k)


def less(v: IntVar, w: IntVar) -> Constraint:
    """v < w."""
    return Lin(((1, v), (-1, w)), "<", 0)


# Boolean helpers with constant folding

def all_of(items: Iterable[Constraint]) -> Constraint:
    kept: List[Constraint] = []
    for item in items:
        if item == FALSE:
            return FALSE
        if item == TRUE:
            continue
        kept.append(item)
    if not kept:
        return TRUE
    if len(kept) == 1:
        return kept[0]
    return And(tuple(kept))


def any_of(items: Iterable[Constraint]) -> Constraint:
    kept: List[Constraint] = []
    for item in items:
        if item == TRUE:
            return TRUE
        if item == FALSE:
            continue
        kept.append(item)
    if not kept:
        return FALSE
    if len(kept) == 1:
        return kept[0]
    return Or(tuple(kept))


def implies(cond: Constraint, then: Constraint) -> Constraint:
    if cond == FALSE or then == TRUE:
        return TRUE
    if cond == TRUE:
        return then
    if then == FALSE:
        return negate(cond)
    return Implies(cond, then)


def negate(item: Constraint) -> Constraint:
    if isinstance(item, Bool):
        return Bool(not item.value)
    if isinstance(item, Lin):
        return item.negated()
    return Not(item)


def evaluate(constraint: Constraint, assignment: Mapping[str, int]) -> bool:
    """Truth value of a constraint under a total assignment (by variable name)."""
    if isinstance(constraint, Lin):
        return constraint.holds(assignment)
    if isinstance(constraint, Bool):
        return constraint.value
    if isinstance(constraint, And):
        return all(evaluate(i, assignment) for i in constraint.items)
    if isinstance(constraint, Or):
        return any(evaluate(i, assignment) for i in constraint.items)
    if isinstance(constraint, Not):
        return not evaluate(constraint.item, assignment)
    if isinstance(constraint, Implies):
        return not evaluate(constraint.cond, assignment) or evaluate(constraint.then, assignment)
    raise EncodingError(f"not a constraint: {constraint!r}")


def referenced_variables(constraint: Constraint) -> List[IntVar]:
    found: List[IntVar] = []
    stack = [constraint]
    while stack:
        node = stack.pop()
        if isinstance(node, Lin):
            found.extend(v for _, v in node.terms)
        elif isinstance(node, (And, Or)):
            stack.extend(node.items)
        elif isinstance(node, Not):
            stack.append(node.item)
        elif isinstance(node, Implies):
            stack.extend((node.cond, node.then))
    return found


class ConstraintProblem:
    """Declared variables plus a list of constraints (implicitly conjoined)."""

    def __init__(self) -> None:
        self.variables: List[IntVar] = []
        self._by_name: Dict[str, IntVar] = {}
        self.constraints: List[Constraint] = []

    def new_var(self, name: str, lo: int, hi: int) -> IntVar:
        if name in self._by_name:
            raise EncodingError(f"variable {name} declared twice")
        if hi <= lo:
            raise EncodingError(f"variable {name} has an empty domain [{lo}, {hi})")
        var = IntVar(name, lo, hi)
        self.variables.append(var)
        self._by_name[name] = var
        return var

    def var(self, name: str) -> IntVar:
        return self._by_name[name]

    def add(self, constraint: Constraint) -> None:
        if constraint == TRUE:
            return
        self.constraints.append(constraint)

    def extend(self, constraints: Iterable[Constraint]) -> None:
        for constraint in constraints:
            self.add(constraint)

    def validate(self) -> None:
        """Every constraint must reference declared variables only."""
        for constraint in self.constraints:
            for var in referenced_variables(constraint):
                if self._by_name.get(var.name) != var:
                    raise EncodingError(f"undeclared variable {var.name}")

    def satisfied_by(self, assignment: Mapping[str, int]) -> bool:
        for var in self.variables:
            if assignment.get(var.name) not in var.domain:
                return False
        return all(evaluate(c, assignment) for c in self.constraints)

    def dump(self) -> str:
        """Text form, one declaration or constraint per line."""
        lines = [f"var {v.name} in [{v.lo}, {v.hi})" for v in self.variables]
        lines.extend(str(c) for c in self.constraints)
        return "\n".join(lines) + "\n"

    def __len__(self) -> int:
        return len(self.constraints)
