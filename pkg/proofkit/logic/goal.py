"""Goal disjunctions, including under-specified (wildcard) goals."""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from proofkit.schemas.proof import Fact, ProofGoal
from proofkit.tptp.signature import BOTTOM

from .terms import Const, Var


@dataclass(frozen=True)
class Hole:
    """Wildcard goal argument; `index` numbers the holes of the whole goal."""
    index: int


GoalTerm = Union[Var, Const, Hole]


@dataclass(frozen=True)
class GoalAtom:
    """
    Goal atom. `predicate` is None when the predicate is a wildcard, in which
    case `pred_slot` numbers it among the goal's predicate wildcards.
    """
    predicate: Optional[str]
    args: Tuple[GoalTerm, ...] = ()
    pred_slot: Optional[int] = None

    @property
    def arity(self) -> int:
        return len(self.args)

    @property
    def is_wild(self) -> bool:
        return self.predicate is None or any(isinstance(a, Hole) for a in self.args)


@dataclass(frozen=True)
class GoalSpec:
    """
    ∃y⃗ (D₀ ∨ D₁ ∨ …) with each Dᵢ a conjunction of goal atoms.

    `Var(i)` in an argument is the existential variable `exist_vars[i]`.
    """
    exist_vars: Tuple[str, ...]
    disjuncts: Tuple[Tuple[GoalAtom, ...], ...]

    @property
    def num_pred_slots(self) -> int:
        return sum(1 for atom in self.atoms() if atom.pred_slot is not None)

    @property
    def num_holes(self) -> int:
        return sum(1 for atom in self.atoms() for a in atom.args if isinstance(a, Hole))

    @property
    def has_wildcards(self) -> bool:
        return any(atom.is_wild for atom in self.atoms())

    @property
    def max_conjunct_size(self) -> int:
        return max((len(d) for d in self.disjuncts), default=1)

    def atoms(self) -> List[GoalAtom]:
        return [atom for disjunct in self.disjuncts for atom in disjunct]

    def holes(self) -> List[Tuple[GoalAtom, int, Hole]]:
        """(atom, argument position, hole) for every hole."""
        found = []
        for atom in self.atoms():
            for j, arg in enumerate(atom.args):
                if isinstance(arg, Hole):
                    found.append((atom, j, arg))
        return found

    def fill(self, predicates: Sequence[str], constants: Sequence[str]) -> "GoalSpec":
        """
        Replace wildcards.

        Args:
            predicates: One predicate per predicate wildcard, by `pred_slot`
            constants: One constant per hole, by hole index
        """
        disjuncts = []
        for disjunct in self.disjuncts:
            atoms = []
            for atom in disjunct:
                predicate = atom.predicate
                if atom.pred_slot is not None:
                    predicate = predicates[atom.pred_slot]
                args = tuple(
                    Const(constants[a.index]) if isinstance(a, Hole) else a for a in atom.args
                )
                atoms.append(GoalAtom(predicate, args))
            disjuncts.append(tuple(atoms))
        return GoalSpec(self.exist_vars, tuple(disjuncts))

    def to_proof_goal(self) -> ProofGoal:
        """Convert a wildcard-free goal to its proof-object form."""
        if self.has_wildcards:
            raise ValueError("goal still has wildcards")
        disjuncts: List[List[Fact]] = []
        for disjunct in self.disjuncts:
            facts = []
            for atom in disjunct:
                args = tuple(
                    self.exist_vars[a.index] if isinstance(a, Var) else a.name for a in atom.args
                )
                facts.append(Fact(predicate=atom.predicate, args=args))
            disjuncts.append(facts)
        return ProofGoal(exist_vars=list(self.exist_vars), disjuncts=disjuncts)

    def single_atom_disjuncts(self) -> List[GoalAtom]:
        return [d[0] for d in self.disjuncts if len(d) == 1]

    @classmethod
    def from_facts(cls, disjuncts: Sequence[Sequence[Fact]], exist_vars: Sequence[str] = ()) -> "GoalSpec":
        """Build a goal from facts whose arguments may name existential variables."""
        index: Dict[str, int] = {name: i for i, name in enumerate(exist_vars)}
        built = []
        for disjunct in disjuncts:
            atoms = []
            for fact in disjunct:
                args = tuple(Var(index[a]) if a in index else Const(a) for a in fact.args)
                atoms.append(GoalAtom(fact.predicate, args))
            built.append(tuple(atoms))
        return cls(tuple(exist_vars), tuple(built))


FALSUM_GOAL = GoalSpec((), ((GoalAtom(BOTTOM),),))
