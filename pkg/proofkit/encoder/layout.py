"""Encoding parameters and the variable layout of a proof of fixed length."""

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from proofkit.logic.terms import ConstantPool
from proofkit.logic.theory import Theory
from proofkit.schemas.proof import STEP_KINDS
from proofkit.tptp.signature import BOTTOM, TOP
from proofkit.utils.exceptions import EncodingError

from .constraints import ConstraintProblem, IntVar


class EncodingParams(BaseModel):
    """
    Size parameters of one encoding.

    `length` is the number of body steps of this encoding; `max_len` is the
    bound the user asked for. Abduct slots are extra leading steps.
    """
    max_len: int = Field(..., ge=1)
    length: Optional[int] = Field(None, ge=1)
    num_abducts: int = Field(0, ge=0)
    max_conjunct_size: int = Field(1, ge=1)
    max_arity: int = Field(0, ge=0)
    max_premises: int = Field(0, ge=0)
    max_vars: int = Field(0, ge=0)
    max_exist: int = Field(0, ge=0)

    @model_validator(mode="after")
    def _check_bounds(self) -> "EncodingParams":
        if self.length is None:
            self.length = self.max_len
        if self.num_abducts >= self.max_len:
            raise ValueError(
                f"{self.num_abducts} abduct slots need a bound larger than {self.max_len}"
            )
        return self

    @property
    def num_steps(self) -> int:
        return self.num_abducts + self.length

    @classmethod
    def for_theory(
        cls, theory: Theory, max_len: int, num_abducts: int = 0, length: Optional[int] = None
    ) -> "EncodingParams":
        """
        Derive the size parameters from a theory.

        Raises:
            EncodingError: If the abduct slots do not fit under the bound
        """
        if num_abducts >= max_len:
            raise EncodingError(
                f"{num_abducts} abduct slots need a bound larger than {max_len}"
            )
        return cls(
            max_len=max_len,
            length=length,
            num_abducts=num_abducts,
            max_conjunct_size=theory.max_conjunct_size,
            max_arity=theory.max_arity,
            max_premises=theory.max_premises,
            max_vars=theory.max_vars,
            max_exist=theory.max_exist,
        )


class EncodingVariables:
    """
    All integer variables of an encoding, indexed the way the sections use them.

    Steps `0 .. num_abducts-1` are abduct slots; body steps follow. MP-only
    variables (axiom, premises, instantiation) exist for body steps only.
    `From(s, k)` values below `#assumptions` name an assumption; value
    `#assumptions + t` names step `t`. `PremisePredicate(s, k)` and
    `PremiseArgument(s, k, j)` hold the instantiated premise `k` of step `s`.
    When the axioms state argument symmetries, `PremisePermutation(s, k)`
    picks a member of the premise predicate's group (0 is the identity) and
    `PremiseMatch(s, k, j)` holds the permuted arguments the source must
    carry. Without symmetries `premise_match` is `premise_arg` itself.
    """

    def __init__(self, problem: ConstraintProblem, theory: Theory, params: EncodingParams, pool: ConstantPool):
        self.problem = problem
        self.theory = theory
        self.params = params
        self.pool = pool

        self.num_steps = params.num_steps
        self.first_body = params.num_abducts
        self.num_assumptions = len(theory.assumptions)
        self.sentinel = len(theory.signature)
        self.conj = params.max_conjunct_size
        self.arity = params.max_arity
        self.codes: Dict[str, int] = {name: i for i, name in enumerate(theory.signature)}
        self.arities: List[int] = [arity for _, arity in theory.signature.predicates]
        self.constant_codes: Dict[str, int] = pool.lookup()
        self.symmetries = theory.symmetries
        self.group_size = max((len(g) for g in self.symmetries.values()), default=1)
        n_pool = len(pool)
        n_steps = self.num_steps

        self.kind: List[IntVar] = []
        self.nesting: List[IntVar] = []
        self.cases: List[IntVar] = []
        self.goal: List[IntVar] = []
        self.case_origin: List[IntVar] = []
        self.cpred: List[List[List[IntVar]]] = []
        self.carg: List[List[List[List[IntVar]]]] = []
        self.axiom: Dict[int, IntVar] = {}
        self.from_: Dict[int, List[IntVar]] = {}
        self.inst: Dict[int, List[IntVar]] = {}
        self.premise_pred: Dict[int, List[IntVar]] = {}
        self.premise_arg: Dict[int, List[List[IntVar]]] = {}
        self.premise_perm: Dict[int, List[IntVar]] = {}
        self.premise_match: Dict[int, List[List[IntVar]]] = {}
        self.goal_disj: Dict[int, IntVar] = {}
        self.goal_witness: Dict[int, List[IntVar]] = {}
        self.visible: Dict[Tuple[int, int], IntVar] = {}

        new = problem.new_var
        for s in range(n_steps):
            self.kind.append(new(f"StepKind[{s}]", 0, len(STEP_KINDS)))
            self.nesting.append(new(f"Nesting[{s}]", 1, n_steps + 1))
            self.cases.append(new(f"Cases[{s}]", 0, 2))
            self.goal.append(new(f"Goal[{s}]", 0, 2))
            self.case_origin.append(new(f"CaseOrigin[{s}]", 0, max(1, s)))
            self.cpred.append([
                [new(f"ContentsPredicate[{s},{d},{a}]", 0, self.sentinel + 1) for a in range(self.conj)]
                for d in range(2)
            ])
            self.carg.append([
                [
                    [new(f"ContentsArgument[{s},{d},{a},{j}]", 0, n_pool) for j in range(self.arity)]
                    for a in range(self.conj)
                ]
                for d in range(2)
            ])

        n_axioms = len(theory.axioms)
        for s in range(self.first_body, n_steps):
            self.axiom[s] = new(f"AxiomApplied[{s}]", 0, max(1, n_axioms))
            self.from_[s] = [
                new(f"From[{s},{k}]", 0, self.num_assumptions + n_steps)
                for k in range(params.max_premises)
            ]
            self.inst[s] = [new(f"Instantiation[{s},{v}]", 0, n_pool) for v in range(params.max_vars)]
            self.premise_pred[s] = [
                new(f"PremisePredicate[{s},{k}]", 0, self.sentinel + 1) for k in range(params.max_premises)
            ]
            self.premise_arg[s] = [
                [new(f"PremiseArgument[{s},{k},{j}]", 0, n_pool) for j in range(self.arity)]
                for k in range(params.max_premises)
            ]
            if self.group_size > 1:
                self.premise_perm[s] = [
                    new(f"PremisePermutation[{s},{k}]", 0, self.group_size) for k in range(params.max_premises)
                ]
                self.premise_match[s] = [
                    [new(f"PremiseMatch[{s},{k},{j}]", 0, n_pool) for j in range(self.arity)]
                    for k in range(params.max_premises)
                ]
            else:
                self.premise_perm[s] = []
                self.premise_match[s] = self.premise_arg[s]

        goal = theory.goal
        n_disjuncts = len(goal.disjuncts)
        for s in range(self.first_body, n_steps):
            self.goal_disj[s] = new(f"GoalDisjunct[{s}]", 0, max(1, n_disjuncts))
            self.goal_witness[s] = [
                new(f"GoalWitness[{s},{y}]", 0, n_pool) for y in range(len(goal.exist_vars))
            ]

        self.goal_pred: List[IntVar] = [
            new(f"GoalPredicate[{k}]", 0, self.sentinel) for k in range(goal.num_pred_slots)
        ]
        self.goal_arg: List[IntVar] = [
            new(f"GoalArgument[{k}]", 0, max(1, pool.num_inputs)) for k in range(goal.num_holes)
        ]

        for s in range(self.first_body, n_steps):
            for t in range(s):
                self.visible[(t, s)] = new(f"Visible[{t},{s}]", 0, 2)

        self._aux_counter = 0

    def aux(self, label: str) -> IntVar:
        """Fresh boolean auxiliary variable."""
        self._aux_counter += 1
        return self.problem.new_var(f"{label}#{self._aux_counter}", 0, 2)

    def body_steps(self) -> range:
        return range(self.first_body, self.num_steps)

    def abduct_steps(self) -> range:
        return range(0, self.first_body)

    @property
    def last(self) -> int:
        return self.num_steps - 1

    def step_ref(self, t: int) -> int:
        """`From` value naming step `t`."""
        return self.num_assumptions + t

    def code(self, predicate: str) -> int:
        try:
            return self.codes[predicate]
        except KeyError:
            raise EncodingError(f"predicate {predicate} is not in the signature") from None

    def constant(self, name: str) -> int:
        try:
            return self.constant_codes[name]
        except KeyError:
            raise EncodingError(f"constant {name} is not in the pool") from None

    def atom_predicates(self) -> List[int]:
        """Codes of predicates that may appear in an abduct or a filled goal."""
        return [
            code for code, name in enumerate(self.theory.signature)
            if name not in (TOP, BOTTOM)
        ]

    def decision_variables(self) -> List[IntVar]:
        """Step skeleton variables: kind, nesting, cases and goal flag per step."""
        found = []
        for s in range(self.num_steps):
            found.extend([self.kind[s], self.nesting[s], self.cases[s], self.goal[s]])
        return found

    def abduct_variables(self) -> List[IntVar]:
        """Variables fixing the abduct atoms (first atom slot of every abduct step)."""
        found = []
        for s in self.abduct_steps():
            found.append(self.cpred[s][0][0])
            found.extend(self.carg[s][0][0])
        return found

    def goal_fill_variables(self) -> List[IntVar]:
        return list(self.goal_pred) + list(self.goal_arg)
