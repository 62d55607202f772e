"""
One-hot lowering of finite-domain constraint problems to CNF.

Every integer variable gets one literal per domain value and an exactly-one
group. Linear atoms over one or two variables expand pointwise; boolean
structure is put in negation normal form and disjunctions of multi-clause
parts get a defining auxiliary literal each.
"""

from itertools import product
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from pysat.card import CardEnc, EncType

from proofkit.encoder.constraints import (
    And,
    Bool,
    Constraint,
    ConstraintProblem,
    Implies,
    IntVar,
    Lin,
    Not,
    Or,
    compare,
)
from proofkit.utils.exceptions import LoweringError, MalformedInstanceError, SolverOutputError

Clause = List[int]

# Model: total assignment variable name -> domain value
Model = Dict[str, int]

# Groups up to this size get pairwise at-most-one clauses
PAIRWISE_LIMIT = 6


class CNFInstance:
    """
    Propositional clauses plus the one-hot map back to integer variables.

    `var_map[(name, value)]` is the literal that is true exactly when the
    variable `name` takes `value`.
    """

    def __init__(self) -> None:
        self.num_vars = 0
        self.clauses: List[Clause] = []
        self.var_map: Dict[Tuple[str, int], int] = {}
        self.groups: Dict[str, List[Tuple[int, int]]] = {}

    def new_var(self) -> int:
        self.num_vars += 1
        return self.num_vars

    def add_clause(self, clause: Iterable[int]) -> None:
        literals = list(dict.fromkeys(clause))
        for lit in literals:
            if lit == 0 or abs(lit) > self.num_vars:
                raise MalformedInstanceError(f"literal {lit} outside 1..{self.num_vars}")
        if any(-lit in literals for lit in literals):
            return
        self.clauses.append(literals)

    def add_group(self, var: IntVar) -> None:
        """Declare the one-hot literals of an integer variable."""
        if var.size <= 0:
            raise MalformedInstanceError(f"variable {var.name} has an empty domain")
        members = []
        for value in var.domain:
            lit = self.new_var()
            self.var_map[(var.name, value)] = lit
            members.append((value, lit))
        self.groups[var.name] = members

        literals = [lit for _, lit in members]
        self.add_clause(literals)
        if len(literals) <= PAIRWISE_LIMIT:
            for i, x in enumerate(literals):
                for y in literals[i + 1:]:
                    self.add_clause([-x, -y])
            return
        encoded = CardEnc.atmost(
            lits=literals, bound=1, top_id=self.num_vars, encoding=EncType.seqcounter
        )
        self.num_vars = max(self.num_vars, encoded.nv)
        for clause in encoded.clauses:
            self.add_clause(clause)

    def literal(self, name: str, value: int) -> int:
        try:
            return self.var_map[(name, value)]
        except KeyError:
            raise LoweringError(f"no literal for {name} = {value}") from None

    def decode(self, literals: Iterable[int]) -> Model:
        """
        Read integer values off a propositional assignment.

        Raises:
            SolverOutputError: If a one-hot group has no true literal
        """
        true = {lit for lit in literals if lit > 0}
        model: Model = {}
        for name, members in self.groups.items():
            chosen = [value for value, lit in members if lit in true]
            if len(chosen) != 1:
                raise SolverOutputError(
                    f"assignment sets {len(chosen)} values for {name}"
                )
            model[name] = chosen[0]
        return model

    def blocking_clause(self, model: Mapping[str, int], names: Sequence[str]) -> Clause:
        """Clause excluding every model that agrees with `model` on `names`."""
        return [-self.literal(name, model[name]) for name in names]

    def __repr__(self) -> str:
        return f"CNFInstance(vars={self.num_vars}, clauses={len(self.clauses)})"


def _nnf(node: Constraint, positive: bool = True) -> Constraint:
    if isinstance(node, Lin):
        return node if positive else node.negated()
    if isinstance(node, Bool):
        return Bool(node.value == positive)
    if isinstance(node, Not):
        return _nnf(node.item, not positive)
    if isinstance(node, And):
        items = tuple(_nnf(i, positive) for i in node.items)
        return And(items) if positive else Or(items)
    if isinstance(node, Or):
        items = tuple(_nnf(i, positive) for i in node.items)
        return Or(items) if positive else And(items)
    if isinstance(node, Implies):
        if positive:
            return Or((_nnf(node.cond, False), _nnf(node.then, True)))
        return And((_nnf(node.cond, True), _nnf(node.then, False)))
    raise LoweringError(f"not a constraint: {node!r}")


class Lowering:
    """Compiles the constraints of one problem into a CNFInstance."""

    def __init__(self, problem: ConstraintProblem):
        self.problem = problem
        self.instance = CNFInstance()
        self._declared = {v.name: v for v in problem.variables}

    def run(self) -> CNFInstance:
        for var in self.problem.variables:
            self.instance.add_group(var)
        for constraint in self.problem.constraints:
            self.add(constraint)
        return self.instance

    def add(self, constraint: Constraint) -> None:
        for clause in self.clauses(_nnf(constraint)):
            if not clause:
                self.instance.clauses.append([])
                continue
            self.instance.add_clause(clause)

    def clauses(self, node: Constraint) -> List[Clause]:
        """CNF of a node in negation normal form; `[[]]` is false, `[]` is true."""
        if isinstance(node, Lin):
            return self.linear(node)
        if isinstance(node, Bool):
            return [] if node.value else [[]]
        if isinstance(node, And):
            out: List[Clause] = []
            for item in node.items:
                out.extend(self.clauses(item))
            return out
        if isinstance(node, Or):
            return self._disjunction(node)
        raise LoweringError(f"unexpected node after normalization: {node!r}")

    def _disjunction(self, node: Or) -> List[Clause]:
        base: Clause = []
        multi: List[List[Clause]] = []
        for item in node.items:
            part = self.clauses(item)
            if not part:
                return []
            if any(not c for c in part):
                continue
            if len(part) == 1:
                base.extend(part[0])
            else:
                multi.append(part)
        if not multi:
            return [base]
        for part in multi[1:]:
            selector = self.instance.new_var()
            for clause in part:
                self.instance.add_clause([-selector, *clause])
            base.append(selector)
        return [base + clause for clause in multi[0]]

    def _check(self, var: IntVar) -> None:
        if self._declared.get(var.name) != var:
            raise LoweringError(f"undeclared variable {var.name}")

    def linear(self, atom: Lin) -> List[Clause]:
        for _, var in atom.terms:
            self._check(var)
        if len(atom.terms) == 1:
            return self._unary(atom)
        if len(atom.terms) == 2:
            return self._binary(atom)
        raise LoweringError(f"linear atom over {len(atom.terms)} variables: {atom}")

    def _unary(self, atom: Lin) -> List[Clause]:
        (coef, var), = atom.terms
        lit = self.instance.literal
        allowed = [a for a in var.domain if compare(coef * a, atom.op, atom.rhs)]
        if len(allowed) == var.size:
            return []
        if not allowed:
            return [[]]
        if len(allowed) == var.size - 1:
            (banned,) = [a for a in var.domain if a not in allowed]
            return [[-lit(var.name, banned)]]
        return [[lit(var.name, a) for a in allowed]]

    def _binary(self, atom: Lin) -> List[Clause]:
        (c1, v), (c2, w) = atom.terms
        if c1 == -c2 and abs(c1) == 1:
            if c1 == -1:
                v, w = w, v
            return self._difference(v, w, atom.op, atom.rhs)
        return self._tabulated(atom)

    def _difference(self, v: IntVar, w: IntVar, op: str, k: int) -> List[Clause]:
        """Clauses for `v - w ⋈ k`, read per value of `v`."""
        lit = self.instance.literal
        out: List[Clause] = []
        if op in ("=", "!="):
            for a in v.domain:
                b = a - k
                if op == "=":
                    out.append([-lit(v.name, a), lit(w.name, b)] if b in w.domain else [-lit(v.name, a)])
                elif b in w.domain:
                    out.append([-lit(v.name, a), -lit(w.name, b)])
            if op == "=" and k == 0 and v.domain == w.domain:
                out.extend([-lit(w.name, b), lit(v.name, b)] for b in w.domain)
            return out
        for a in v.domain:
            # v - w <= k  iff  w >= a - k;  v - w < k  iff  w > a - k
            floor = a - k if op == "<=" else a - k + 1
            support = [b for b in w.domain if b >= floor]
            if len(support) < w.size:
                out.append([-lit(v.name, a), *(lit(w.name, b) for b in support)])
        return out

    def _tabulated(self, atom: Lin) -> List[Clause]:
        (c1, v), (c2, w) = atom.terms
        lit = self.instance.literal
        holds = {
            (a, b): compare(c1 * a + c2 * b, atom.op, atom.rhs)
            for a, b in product(v.domain, w.domain)
        }
        conflicts = [pair for pair, ok in holds.items() if not ok]
        if not conflicts:
            return []
        from_v = []
        for a in v.domain:
            support = [b for b in w.domain if holds[(a, b)]]
            if len(support) < w.size:
                from_v.append([-lit(v.name, a), *(lit(w.name, b) for b in support)])
        from_w = []
        for b in w.domain:
            support = [a for a in v.domain if holds[(a, b)]]
            if len(support) < v.size:
                from_w.append([-lit(w.name, b), *(lit(v.name, a) for a in support)])
        pairwise = [[-lit(v.name, a), -lit(w.name, b)] for a, b in conflicts]
        return min((from_v, from_w, pairwise), key=lambda cs: sum(len(c) for c in cs))


def lower(problem: ConstraintProblem) -> CNFInstance:
    """
    Lower a constraint problem to CNF.

    Raises:
        LoweringError: If a linear atom ranges over more than two variables
        MalformedInstanceError: If a variable has an empty domain
    """
    return Lowering(problem).run()


def decode_assignment(instance: CNFInstance, literals: Iterable[int]) -> Model:
    return instance.decode(literals)
