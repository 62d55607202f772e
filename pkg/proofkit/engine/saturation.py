"""
Ground forward chaining.

Serves two purposes: the bounded consistency check for abducts, and an
independent provability oracle for tests. Horn axioms (one consequent
conjunct, or ⊥) are applied to a fixpoint; two-way disjunctions then split
the branch. Existential consequents only fire when no existing constant
already witnesses them.
Facts are kept closed under the argument symmetries the axioms state.
"""

import time
from collections import defaultdict, deque
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from proofkit.logic.goal import GoalSpec
from proofkit.logic.symmetry import variants
from proofkit.logic.terms import CLFormula, Const
from proofkit.logic.theory import Theory
from proofkit.schemas.prover import AbductVerdict
from proofkit.schemas.proof import Fact
from proofkit.utils.logger import logger

Binding = Dict[int, str]


@dataclass
class Branch:
    """Facts and constants of one case branch."""
    facts: Set[Fact]
    constants: List[str]
    decisions: List[Fact] = field(default_factory=list)
    closed: bool = False
    truncated: bool = False
    proved: bool = False

    def __post_init__(self) -> None:
        self.index: Dict[str, List[Fact]] = defaultdict(list)
        for fact in self.facts:
            self.index[fact.predicate].append(fact)

    def add(self, fact: Fact) -> bool:
        if fact in self.facts:
            return False
        self.facts.add(fact)
        self.index[fact.predicate].append(fact)
        for arg in fact.args:
            if arg not in self.constants:
                self.constants.append(arg)
        return True

    def child(self, decision: Fact, constants: Sequence[str] = ()) -> "Branch":
        branch = Branch(
            facts=set(self.facts),
            constants=list(self.constants) + [c for c in constants if c not in self.constants],
            decisions=self.decisions + [decision],
        )
        branch.add(decision)
        return branch

    @property
    def open(self) -> bool:
        return not (self.closed or self.proved)


@dataclass
class ChainResult:
    """Leaves of a forward-chaining run."""
    branches: List[Branch]
    exhausted: bool = False

    @property
    def all_closed(self) -> bool:
        return all(b.closed for b in self.branches)

    @property
    def derives_goal(self) -> bool:
        """The goal (or ⊥) holds on every leaf and no limit was hit."""
        if self.exhausted or any(b.truncated for b in self.branches):
            return False
        return all(b.closed or b.proved for b in self.branches)

    def facts(self) -> Set[Fact]:
        """Facts common to every open leaf."""
        open_leaves = [b.facts for b in self.branches if not b.closed]
        if not open_leaves:
            return set()
        common = set(open_leaves[0])
        for facts in open_leaves[1:]:
            common &= facts
        return common


def _match(pattern, fact: Fact, binding: Binding) -> Optional[Binding]:
    if pattern.predicate != fact.predicate or len(pattern.args) != len(fact.args):
        return None
    extended = binding
    for arg, value in zip(pattern.args, fact.args):
        if isinstance(arg, Const):
            if arg.name != value:
                return None
            continue
        bound = extended.get(arg.index)
        if bound is None:
            if extended is binding:
                extended = dict(binding)
            extended[arg.index] = value
        elif bound != value:
            return None
    return extended


def join(atoms: Sequence, branch: Branch, binding: Optional[Binding] = None) -> Iterator[Binding]:
    """All extensions of `binding` under which every atom is a branch fact."""
    binding = binding or {}
    if not atoms:
        yield binding
        return
    first, rest = atoms[0], atoms[1:]
    for fact in list(branch.index.get(first.predicate, ())):
        extended = _match(first, fact, binding)
        if extended is not None:
            yield from join(rest, branch, extended)


def goal_holds(goal: GoalSpec, branch: Branch) -> bool:
    """Some goal disjunct has an instance among the branch facts."""
    for disjunct in goal.disjuncts:
        if any(True for _ in join(disjunct, branch)):
            return True
    return False


class Saturator:
    """
    Applies the axioms of a theory to branches.

    Args:
        theory: Axioms to apply
        cap: Maximum number of facts per branch
    """

    def __init__(self, theory: Theory, cap: int = 20000):
        self.theory = theory
        self.cap = cap
        self.horn = [a for a in theory.axioms if not a.is_case_split]
        self.splits = [a for a in theory.axioms if a.is_case_split and not a.linking]
        self.linking_splits = [a for a in theory.axioms if a.is_case_split and a.linking]
        self.symmetries = theory.symmetries
        self._fresh = 0

    def root(self, facts: Iterable[Fact], constants: Iterable[str] = ()) -> Branch:
        names = list(dict.fromkeys(constants))
        branch = Branch(facts=set(), constants=names)
        for fact in facts:
            branch.add(fact)
        if not branch.constants:
            branch.constants.append("c0")
        return branch

    def fresh_constant(self, branch: Branch) -> str:
        while True:
            name = f"sk{self._fresh}"
            self._fresh += 1
            if name not in branch.constants:
                return name

    def instances(self, axiom: CLFormula, branch: Branch) -> Iterator[Binding]:
        """Universal bindings satisfying the premises, over the branch constants."""
        for binding in list(join(axiom.premises, branch)):
            free = [i for i in range(axiom.num_univ) if i not in binding]
            if not free:
                yield binding
                continue
            for values in product(list(branch.constants), repeat=len(free)):
                extended = dict(binding)
                extended.update(zip(free, values))
                yield extended

    def _ground(self, axiom: CLFormula, atoms, binding: Binding) -> List[Fact]:
        values = [binding.get(i) for i in range(axiom.num_vars)]
        return [atom.ground(values) for atom in atoms]

    def _witnessed(self, axiom: CLFormula, atoms, binding: Binding, branch: Branch) -> bool:
        return any(True for _ in join(atoms, branch, binding))

    def _with_witnesses(self, axiom: CLFormula, binding: Binding, branch: Branch) -> Tuple[Binding, List[str]]:
        extended = dict(binding)
        created = []
        for i in range(axiom.num_univ, axiom.num_vars):
            name = self.fresh_constant(branch)
            extended[i] = name
            created.append(name)
            branch.constants.append(name)
        return extended, created

    def _close_symmetric(self, branch: Branch) -> bool:
        added = False
        for predicate in self.symmetries:
            for fact in list(branch.index.get(predicate, ())):
                for image in variants(fact, self.symmetries)[1:]:
                    added = branch.add(image) or added
        return added

    def saturate(self, branch: Branch, goal: Optional[GoalSpec] = None) -> Branch:
        """
        Close a branch under the Horn axioms.

        Sets `closed` when ⊥ is derived, `truncated` when the fact cap is
        reached and `proved` when `goal` holds.
        """
        changed = True
        while changed and not branch.closed:
            changed = False
            if self._close_symmetric(branch):
                changed = True
            for axiom in self.horn:
                for binding in list(self.instances(axiom, branch)):
                    if axiom.is_falsum:
                        branch.closed = True
                        return branch
                    atoms = axiom.disjuncts[0].atoms
                    if axiom.exist_vars:
                        if self._witnessed(axiom, atoms, binding, branch):
                            continue
                        binding, _ = self._with_witnesses(axiom, binding, branch)
                    for fact in self._ground(axiom, atoms, binding):
                        if branch.add(fact):
                            changed = True
                    if len(branch.facts) >= self.cap:
                        branch.truncated = True
                        return branch
            if goal is not None and goal_holds(goal, branch):
                branch.proved = True
                return branch
        if goal is not None and not branch.closed and goal_holds(goal, branch):
            branch.proved = True
        return branch

    def pending_split(
        self, branch: Branch, linking: bool = True
    ) -> Optional[Tuple[Fact, Fact, List[str]]]:
        """
        First disjunction instance with neither side holding.

        Returns:
            (first fact, second fact, fresh constants), or None
        """
        axioms = self.splits + (self.linking_splits if linking else [])
        for axiom in axioms:
            for binding in self.instances(axiom, branch):
                first, second = (d.atoms for d in axiom.disjuncts)
                if self._witnessed(axiom, first, binding, branch) or self._witnessed(axiom, second, binding, branch):
                    continue
                created: List[str] = []
                if axiom.exist_vars:
                    scratch = Branch(facts=set(), constants=list(branch.constants))
                    binding, created = self._with_witnesses(axiom, binding, scratch)
                left = self._ground(axiom, first, binding)[0]
                right = self._ground(axiom, second, binding)[0]
                return left, right, created
        return None

    def complete(self, branch: Branch) -> bool:
        """
        Try to decide every excluded-middle instance on the negative side.

        Returns True when this yields a saturated branch without ⊥, which is
        then a model of the theory.
        """
        trial = Branch(facts=set(branch.facts), constants=list(branch.constants))
        while True:
            self.saturate(trial)
            if trial.closed or trial.truncated:
                return False
            if self.pending_split(trial, linking=False) is not None:
                return False
            undecided = []
            for axiom in self.linking_splits:
                for binding in self.instances(axiom, trial):
                    first, second = (d.atoms for d in axiom.disjuncts)
                    if self._witnessed(axiom, first, binding, trial) or self._witnessed(axiom, second, binding, trial):
                        continue
                    undecided.extend(self._ground(axiom, second, binding))
            if not undecided:
                return True
            for fact in undecided:
                trial.add(fact)


def forward_chain(
    theory: Theory,
    facts: Iterable[Fact],
    cap: int = 20000,
    goal: Optional[GoalSpec] = None,
    branch_limit: int = 4096,
    split: bool = True,
) -> ChainResult:
    """
    Saturate `facts` under the theory, splitting breadth-first on disjunctions.

    Args:
        theory: Axioms and input constants
        facts: Ground starting facts
        cap: Facts per branch
        goal: Stop a branch as soon as this goal holds on it
        branch_limit: Maximum number of branches created
        split: Whether to split on disjunctive axioms at all

    Returns:
        ChainResult with one entry per leaf branch
    """
    saturator = Saturator(theory, cap=cap)
    root = saturator.root(facts, theory.constants)
    queue = deque([root])
    leaves: List[Branch] = []
    created = 1
    exhausted = False
    while queue:
        branch = saturator.saturate(queue.popleft(), goal)
        if not branch.open or branch.truncated or not split:
            leaves.append(branch)
            continue
        pending = saturator.pending_split(branch)
        if pending is None:
            leaves.append(branch)
            continue
        if created + 2 > branch_limit:
            exhausted = True
            leaves.append(branch)
            continue
        left, right, constants = pending
        queue.append(branch.child(left, constants))
        queue.append(branch.child(right, constants))
        created += 2
    logger.debug(f"Forward chaining: {len(leaves)} leaves, {created} branches")
    return ChainResult(branches=leaves, exhausted=exhausted)


def check_consistency_bounded(
    theory: Theory,
    abducts: Sequence[Fact],
    assumptions: Optional[Sequence[Fact]] = None,
    bound: int = 20000,
    branch_limit: int = 4096,
    deadline: Optional[float] = None,
) -> AbductVerdict:
    """
    Decide, within bounds, whether assumptions and abducts are jointly consistent.

    Branches are explored depth-first, first disjunct first. `deadline` is a
    `time.monotonic()` value checked between branches.

    Returns:
        CONSISTENT if some branch saturates without ⊥, INCONSISTENT if ⊥ closes
        every branch, UNKNOWN if a bound is hit before either
    """
    if assumptions is None:
        assumptions = theory.assumptions
    saturator = Saturator(theory, cap=bound)
    root = saturator.root([*assumptions, *abducts], theory.constants)
    stack = [root]
    explored = 0
    hit_bound = False
    while stack:
        explored += 1
        if explored > branch_limit or (deadline is not None and time.monotonic() > deadline):
            return AbductVerdict.UNKNOWN
        branch = saturator.saturate(stack.pop())
        if branch.closed:
            continue
        if branch.truncated:
            hit_bound = True
            continue
        pending = saturator.pending_split(branch, linking=False)
        if pending is None:
            if saturator.complete(branch):
                return AbductVerdict.CONSISTENT
            pending = saturator.pending_split(branch, linking=True)
            if pending is None:
                return AbductVerdict.CONSISTENT
        left, right, constants = pending
        stack.append(branch.child(right, constants))
        stack.append(branch.child(left, constants))
    return AbductVerdict.UNKNOWN if hit_bound else AbductVerdict.INCONSISTENT
