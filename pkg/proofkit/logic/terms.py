"""Coherent-logic terms, atoms, formulas and the constant pool."""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from proofkit.schemas.proof import Fact
from proofkit.tptp.signature import BOTTOM, TOP
from proofkit.utils.exceptions import InstantiationError


@dataclass(frozen=True)
class Var:
    """Variable, as an index into a formula's variable table (universals first)."""
    index: int


@dataclass(frozen=True)
class Const:
    name: str


Term = Union[Var, Const]


@dataclass(frozen=True)
class Atom:
    predicate: str
    args: Tuple[Term, ...] = ()

    @property
    def arity(self) -> int:
        return len(self.args)

    def variables(self) -> Tuple[int, ...]:
        return tuple(arg.index for arg in self.args if isinstance(arg, Var))

    def ground(self, values: Sequence[Optional[str]]) -> Fact:
        """Replace each `Var(i)` by `values[i]`."""
        args = []
        for arg in self.args:
            if isinstance(arg, Const):
                args.append(arg.name)
                continue
            value = values[arg.index] if arg.index < len(values) else None
            if value is None:
                raise InstantiationError(f"variable {arg.index} of {self.predicate} is unbound")
            args.append(value)
        return Fact(predicate=self.predicate, args=tuple(args))

    def render(self, names: Sequence[str]) -> str:
        if not self.args:
            return self.predicate
        shown = [names[a.index] if isinstance(a, Var) else a.name for a in self.args]
        return f"{self.predicate}({', '.join(shown)})"


@dataclass(frozen=True)
class Conjunct:
    atoms: Tuple[Atom, ...]

    def __post_init__(self) -> None:
        if not self.atoms:
            raise ValueError("empty conjunct")


@dataclass(frozen=True)
class CLFormula:
    """
    Coherent formula ∀x⃗ (A₀ ∧ … ∧ Aₙ₋₁ ⇒ ∃y⃗ (B₀ ∨ … ∨ Bₘ₋₁)).

    Variables are indices into `univ_vars + exist_vars`. No premises means the
    antecedent is ⊤; no disjuncts means the consequent is ⊥.
    """
    name: str
    univ_vars: Tuple[str, ...]
    premises: Tuple[Atom, ...]
    exist_vars: Tuple[str, ...]
    disjuncts: Tuple[Conjunct, ...]
    linking: bool = field(default=False, compare=False)

    @property
    def var_names(self) -> Tuple[str, ...]:
        return self.univ_vars + self.exist_vars

    @property
    def num_univ(self) -> int:
        return len(self.univ_vars)

    @property
    def num_vars(self) -> int:
        return len(self.univ_vars) + len(self.exist_vars)

    @property
    def is_case_split(self) -> bool:
        return len(self.disjuncts) == 2

    @property
    def is_falsum(self) -> bool:
        return not self.disjuncts

    def consequent_atoms(self) -> List[Atom]:
        """Atoms as they appear in proof-step contents (⊥ for an empty consequent)."""
        if not self.disjuncts:
            return [Atom(BOTTOM)]
        return [atom for conjunct in self.disjuncts for atom in conjunct.atoms]

    def __str__(self) -> str:
        names = self.var_names
        lhs = " ∧ ".join(a.render(names) for a in self.premises) or "⊤"
        rhs = " ∨ ".join(
            " ∧ ".join(a.render(names) for a in c.atoms) for c in self.disjuncts
        ) or "⊥"
        if self.exist_vars:
            rhs = f"∃ {', '.join(self.exist_vars)}. {rhs}"
        prefix = f"∀ {', '.join(self.univ_vars)}. " if self.univ_vars else ""
        return f"{self.name}: {prefix}{lhs} ⇒ {rhs}"


def instantiate(
    formula: CLFormula,
    sub: Mapping[str, str],
    witness: Optional[Mapping[str, str]] = None,
) -> Tuple[List[Fact], List[List[Fact]]]:
    """
    Ground a formula.

    Args:
        formula: Axiom to instantiate
        sub: Universal variable name -> constant, total on `univ_vars`
        witness: Existential variable name -> constant, total on `exist_vars`

    Returns:
        Tuple of (ground premises, ground disjuncts)

    Raises:
        InstantiationError: If either map misses a variable
    """
    witness = witness or {}
    missing = [v for v in formula.univ_vars if v not in sub]
    missing += [v for v in formula.exist_vars if v not in witness]
    if missing:
        raise InstantiationError(
            f"{formula.name}: no value for {', '.join(missing)}"
        )
    values = [sub[v] for v in formula.univ_vars] + [witness[v] for v in formula.exist_vars]
    premises = [atom.ground(values) for atom in formula.premises]
    disjuncts = [[atom.ground(values) for atom in c.atoms] for c in formula.disjuncts]
    return premises, disjuncts


def is_coherent(formula: CLFormula, max_disjuncts: int = 2) -> bool:
    """Check the syntactic shape invariants of a normalized formula."""
    n_univ = formula.num_univ
    n_all = formula.num_vars
    for atom in formula.premises:
        if atom.predicate in (TOP, BOTTOM):
            return False
        if any(v >= n_univ for v in atom.variables()):
            return False
    if len(formula.disjuncts) > max_disjuncts:
        return False
    if formula.is_case_split and any(len(c.atoms) != 1 for c in formula.disjuncts):
        return False
    for conjunct in formula.disjuncts:
        for atom in conjunct.atoms:
            if atom.predicate in (TOP, BOTTOM):
                return False
            if any(v >= n_all for v in atom.variables()):
                return False
    if formula.exist_vars and not formula.disjuncts:
        return False
    return True


@dataclass(frozen=True)
class ConstantPool:
    """
    Input constants followed by blocks of fresh witness constants.

    Step `s` owns fresh block `s`; witness `i` of that step is the constant at
    index `len(inputs) + s * block_width + i`.
    """
    inputs: Tuple[str, ...]
    fresh: Tuple[str, ...] = ()
    block_width: int = 0

    @classmethod
    def from_names(cls, names: Iterable[str]) -> "ConstantPool":
        ordered: List[str] = []
        for name in names:
            if name not in ordered:
                ordered.append(name)
        return cls(inputs=tuple(ordered))

    def with_fresh_blocks(self, n_steps: int, width: int) -> "ConstantPool":
        taken = set(self.inputs)
        fresh: List[str] = []
        counter = 0
        for _ in range(n_steps * width):
            name = f"w{counter}"
            while name in taken:
                counter += 1
                name = f"w{counter}"
            taken.add(name)
            fresh.append(name)
            counter += 1
        return ConstantPool(inputs=self.inputs, fresh=tuple(fresh), block_width=width)

    @property
    def names(self) -> Tuple[str, ...]:
        return self.inputs + self.fresh

    @property
    def num_inputs(self) -> int:
        return len(self.inputs)

    def __len__(self) -> int:
        return len(self.inputs) + len(self.fresh)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def name(self, index: int) -> str:
        return self.names[index]

    def fresh_index(self, step: int, witness: int) -> int:
        return len(self.inputs) + step * self.block_width + witness

    def born_before(self, step: int) -> int:
        """Number of pool constants usable by step `step` (inputs plus earlier blocks)."""
        return len(self.inputs) + step * self.block_width

    def is_fresh(self, name: str) -> bool:
        return name in self.fresh

    def lookup(self) -> Dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}
