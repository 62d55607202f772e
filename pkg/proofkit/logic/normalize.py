"""
First-order to coherent-logic normalization.

Negations are pushed to atoms and each negated atom ¬R(t⃗) becomes R̄(t⃗) for a
fresh bar predicate R̄. Every bar predicate brings two linking axioms,
R ∧ R̄ ⇒ ⊥ and R ∨ R̄, generated once per signature.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from proofkit.schemas.proof import Fact
from proofkit.tptp.ast import (
    FAnd,
    FAtom,
    FConst,
    FFalse,
    FIff,
    FImplies,
    FNot,
    FOr,
    FQuant,
    FTrue,
    FVar,
    FWild,
    Formula,
    free_variables,
)
from proofkit.tptp.signature import BOTTOM, Signature
from proofkit.utils.exceptions import NormalizationError
from proofkit.utils.logger import logger

from .goal import GoalAtom, GoalSpec, Hole
from .terms import Atom, CLFormula, Conjunct, Const, Var


@dataclass(frozen=True)
class Literal:
    atom: FAtom
    positive: bool = True


# A formula in disjunctive normal form: list of conjunctions of literals
Dnf = List[List[Literal]]


def to_nnf(formula: Formula, negate: bool = False) -> Formula:
    """Negation normal form; FNot survives only directly above atoms."""
    if isinstance(formula, FAtom):
        return FNot(formula) if negate else formula
    if isinstance(formula, FTrue):
        return FFalse() if negate else formula
    if isinstance(formula, FFalse):
        return FTrue() if negate else formula
    if isinstance(formula, FNot):
        return to_nnf(formula.body, not negate)
    if isinstance(formula, (FAnd, FOr)):
        items = tuple(to_nnf(item, negate) for item in formula.items)
        conjunctive = isinstance(formula, FAnd) != negate
        return FAnd(items) if conjunctive else FOr(items)
    if isinstance(formula, FImplies):
        if negate:
            return FAnd((to_nnf(formula.left), to_nnf(formula.right, True)))
        return FOr((to_nnf(formula.left, True), to_nnf(formula.right)))
    if isinstance(formula, FIff):
        left, right = formula.left, formula.right
        if negate:
            return FOr((
                FAnd((to_nnf(left), to_nnf(right, True))),
                FAnd((to_nnf(left, True), to_nnf(right))),
            ))
        return FAnd((
            FOr((to_nnf(left, True), to_nnf(right))),
            FOr((to_nnf(left), to_nnf(right, True))),
        ))
    if isinstance(formula, FQuant):
        kind = formula.kind
        if negate:
            kind = "?" if kind == "!" else "!"
        return FQuant(kind, formula.variables, to_nnf(formula.body, negate))
    raise NormalizationError(f"unsupported formula node {formula!r}")


def to_dnf(formula: Formula) -> Dnf:
    """DNF of a quantifier-free NNF formula. [] is ⊥, [[]] is ⊤."""
    if isinstance(formula, FTrue):
        return [[]]
    if isinstance(formula, FFalse):
        return []
    if isinstance(formula, FAtom):
        return [[Literal(formula, True)]]
    if isinstance(formula, FNot) and isinstance(formula.body, FAtom):
        return [[Literal(formula.body, False)]]
    if isinstance(formula, FOr):
        result: Dnf = []
        for item in formula.items:
            result.extend(to_dnf(item))
        return _dedupe(result)
    if isinstance(formula, FAnd):
        result = [[]]
        for item in formula.items:
            result = [left + right for left, right in product(result, to_dnf(item))]
        return _dedupe(result)
    if isinstance(formula, FQuant):
        raise NormalizationError("quantifier in an unsupported position")
    raise NormalizationError(f"formula is not in negation normal form: {formula!r}")


def _dedupe(dnf: Dnf) -> Dnf:
    out: Dnf = []
    seen = set()
    for conjunct in dnf:
        unique: List[Literal] = []
        for literal in conjunct:
            if literal not in unique:
                unique.append(literal)
        key = tuple(unique)
        if key not in seen:
            seen.add(key)
            out.append(unique)
    return out


def _rename(formula: Formula, renames: Dict[str, str]) -> Formula:
    if not renames:
        return formula
    if isinstance(formula, FAtom):
        args = tuple(
            FVar(renames.get(a.name, a.name)) if isinstance(a, FVar) else a for a in formula.args
        )
        return FAtom(formula.predicate, args)
    if isinstance(formula, FNot):
        return FNot(_rename(formula.body, renames))
    if isinstance(formula, (FAnd, FOr)):
        return type(formula)(tuple(_rename(item, renames) for item in formula.items))
    if isinstance(formula, (FImplies, FIff)):
        return type(formula)(_rename(formula.left, renames), _rename(formula.right, renames))
    if isinstance(formula, FQuant):
        inner = {k: v for k, v in renames.items() if k not in formula.variables}
        return FQuant(formula.kind, formula.variables, _rename(formula.body, inner))
    return formula


@dataclass
class _Prenex:
    univ: List[str] = field(default_factory=list)
    exist: List[str] = field(default_factory=list)


def _fresh_name(name: str, used: set) -> str:
    if name not in used:
        return name
    k = 1
    while f"{name}_{k}" in used:
        k += 1
    return f"{name}_{k}"


def _pull_quantifiers(formula: Formula, prenex: _Prenex, used: set, under_exists: bool = False) -> Formula:
    """Move quantifiers of an NNF consequent to the front, renaming clashes apart."""
    if isinstance(formula, FQuant):
        renames: Dict[str, str] = {}
        for name in formula.variables:
            new = _fresh_name(name, used)
            used.add(new)
            if new != name:
                renames[name] = new
            if formula.kind == "?":
                prenex.exist.append(new)
            elif under_exists:
                raise NormalizationError(
                    "universal quantifier under an existential in a consequent"
                )
            else:
                prenex.univ.append(new)
        body = _rename(formula.body, renames)
        return _pull_quantifiers(body, prenex, used, under_exists or formula.kind == "?")
    if isinstance(formula, (FAnd, FOr)):
        items = tuple(_pull_quantifiers(item, prenex, used, under_exists) for item in formula.items)
        return type(formula)(items)
    return formula


def _contains_quantifier(formula: Formula) -> bool:
    if isinstance(formula, FQuant):
        return True
    if isinstance(formula, FNot):
        return _contains_quantifier(formula.body)
    if isinstance(formula, (FAnd, FOr)):
        return any(_contains_quantifier(item) for item in formula.items)
    if isinstance(formula, (FImplies, FIff)):
        return _contains_quantifier(formula.left) or _contains_quantifier(formula.right)
    return False


def _strip_universals(formula: Formula, names: List[str]) -> Formula:
    while isinstance(formula, FQuant) and formula.kind == "!":
        for name in formula.variables:
            if name not in names:
                names.append(name)
        formula = formula.body
    return formula


def _curry(antecedents: List[Formula], consequent: Formula, names: List[str]) -> Formula:
    """Flatten `A ⇒ ∀x (B ⇒ C)` into antecedents [A, B] and consequent C."""
    while True:
        consequent = _strip_universals(consequent, names)
        if isinstance(consequent, FImplies):
            antecedents.append(consequent.left)
            consequent = consequent.right
            continue
        return consequent


class Normalizer:
    """
    Stateful FOL → CL translator bound to one signature.

    Linking axioms for bar predicates created while translating are queued
    and handed out by `take_linking()`.
    """

    def __init__(self, signature: Signature):
        self.signature = signature
        self._pending_linking: List[CLFormula] = []

    # Literals

    def _predicate_for(self, literal: Literal) -> str:
        predicate = literal.atom.predicate
        if predicate is None:
            raise NormalizationError("wildcard predicate outside the goal")
        if literal.positive:
            return predicate
        bar_name, created = self.signature.bar(predicate)
        if created:
            self._queue_linking(predicate, bar_name)
        return bar_name

    def _queue_linking(self, predicate: str, bar_name: str) -> None:
        positive = self.signature.positive_of(bar_name) or predicate
        negative = bar_name if positive != bar_name else predicate
        arity = self.signature.arity(positive)
        names = tuple(f"X{i + 1}" for i in range(arity))
        args = tuple(Var(i) for i in range(arity))
        pos_atom = Atom(positive, args)
        neg_atom = Atom(negative, args)
        self._pending_linking.append(CLFormula(
            name=f"{negative}_exclusive",
            univ_vars=names,
            premises=(pos_atom, neg_atom),
            exist_vars=(),
            disjuncts=(),
            linking=True,
        ))
        self._pending_linking.append(CLFormula(
            name=f"{negative}_exhaustive",
            univ_vars=names,
            premises=(),
            exist_vars=(),
            disjuncts=(Conjunct((pos_atom,)), Conjunct((neg_atom,))),
            linking=True,
        ))
        logger.debug(f"Introduced bar predicate {negative} for {positive}")

    def take_linking(self) -> List[CLFormula]:
        pending, self._pending_linking = self._pending_linking, []
        return pending

    # Axioms

    def axiom(self, name: str, formula: Formula) -> List[CLFormula]:
        """Translate one axiom into one or more CL formulas (without linking axioms)."""
        parts = self._implication_parts(formula)
        results: List[CLFormula] = []
        for univ, antecedent, consequent in parts:
            results.extend(self._implication(univ, antecedent, consequent))
        if len(results) == 1:
            return [_renamed(results[0], name)]
        if not results:
            logger.warning(f"Axiom {name} normalizes to a tautology and is dropped")
        return [_renamed(f, f"{name}_{i + 1}") for i, f in enumerate(results)]

    def _implication_parts(self, formula: Formula) -> List[Tuple[List[str], Formula, Formula]]:
        univ: List[str] = []
        body = _strip_universals(formula, univ)
        if isinstance(body, FAnd):
            parts = []
            for item in body.items:
                for sub_univ, ante, cons in self._implication_parts(item):
                    parts.append((univ + [v for v in sub_univ if v not in univ], ante, cons))
            return parts
        if isinstance(body, FIff):
            return [
                (list(univ), body.left, body.right),
                (list(univ), body.right, body.left),
            ]
        if isinstance(body, FImplies):
            return [(univ, body.left, body.right)]
        return [(univ, FTrue(), body)]

    def _implication(self, univ: List[str], antecedent: Formula, consequent: Formula) -> List[CLFormula]:
        univ = list(univ)
        antecedents = [antecedent]
        consequent = _curry(antecedents, consequent, univ)
        premise = FAnd(tuple(antecedents)) if len(antecedents) > 1 else antecedents[0]

        premise_nnf = to_nnf(premise)
        if _contains_quantifier(premise_nnf):
            raise NormalizationError("existential quantifier in a premise position")
        premise_dnf = to_dnf(premise_nnf)

        prenex = _Prenex()
        used = set(univ) | set(free_variables(premise))
        matrix = _pull_quantifiers(to_nnf(consequent), prenex, used)
        for name in prenex.univ:
            if name not in univ:
                univ.append(name)
        for name in free_variables(FAnd((premise, matrix))):
            if name not in univ and name not in prenex.exist:
                univ.append(name)

        consequents = self._split_consequent(matrix, bool(prenex.exist))
        results = []
        for premise_conjunct in premise_dnf:
            for disjuncts in consequents:
                if any(not conjunct for conjunct in disjuncts):
                    continue
                results.append(self._build(univ, prenex.exist, premise_conjunct, disjuncts))
        return results

    def _split_consequent(self, matrix: Formula, has_exists: bool) -> List[Dnf]:
        dnf = to_dnf(matrix)
        if _is_coherent_dnf(dnf):
            return [dnf]
        if isinstance(matrix, FAnd) and not has_exists:
            pieces: List[Dnf] = []
            for item in matrix.items:
                pieces.extend(self._split_consequent(item, False))
            return pieces
        if len(dnf) > 2:
            raise NormalizationError(
                f"consequent has {len(dnf)} disjuncts after normalization (at most 2 supported)"
            )
        raise NormalizationError("case-split branches must be single atoms")

    def _build(self, univ: Sequence[str], exist: Sequence[str], premises: List[Literal], disjuncts: Dnf) -> CLFormula:
        mentioned = {
            arg.name
            for conj in disjuncts
            for lit in conj
            for arg in lit.atom.args
            if isinstance(arg, FVar)
        }
        used_exist = tuple(name for name in exist if name in mentioned)
        table = {name: i for i, name in enumerate(list(univ) + list(used_exist))}
        premise_atoms = tuple(self._to_atom(lit, table) for lit in premises)
        conjuncts = tuple(
            Conjunct(tuple(self._to_atom(lit, table) for lit in conj)) for conj in disjuncts
        )
        return CLFormula(
            name="",
            univ_vars=tuple(univ),
            premises=premise_atoms,
            exist_vars=used_exist,
            disjuncts=conjuncts,
        )

    def _to_atom(self, literal: Literal, table: Dict[str, int]) -> Atom:
        predicate = self._predicate_for(literal)
        args = []
        for arg in literal.atom.args:
            if isinstance(arg, FVar):
                args.append(Var(table[arg.name]))
            elif isinstance(arg, FConst):
                args.append(Const(arg.name))
            else:
                raise NormalizationError(f"unsupported argument {arg!r} in {predicate}")
        return Atom(predicate, tuple(args))

    # Conjecture

    def conjecture(self, formula: Formula, taken_constants: Sequence[str]) -> "ConjectureParts":
        """
        Split a conjecture into skolemized assumptions and a goal.

        Universal variables become constants named by lower-casing the variable.
        Goal variables bound by no quantifier are read as existential.
        """
        univ: List[str] = []
        body = _strip_universals(formula, univ)
        antecedents: List[Formula] = []
        if isinstance(body, FImplies):
            antecedents.append(body.left)
            goal = _curry(antecedents, body.right, univ)
        else:
            goal = body
        premise = FAnd(tuple(antecedents)) if antecedents else FTrue()

        premise_nnf = to_nnf(premise)
        if _contains_quantifier(premise_nnf):
            raise NormalizationError("quantifier in the conjecture premises")
        premise_dnf = to_dnf(premise_nnf)
        if len(premise_dnf) != 1:
            raise NormalizationError("conjecture premises must be a conjunction of literals")

        for name in free_variables(premise):
            if name not in univ:
                univ.append(name)

        prenex = _Prenex()
        used = set(univ)
        matrix = _pull_quantifiers(to_nnf(goal), prenex, used)
        for name in prenex.univ:
            if name not in univ:
                univ.append(name)
        exist = list(prenex.exist)
        for name in free_variables(matrix):
            if name not in univ and name not in exist:
                exist.append(name)

        skolem = _skolem_names(univ, taken_constants)
        assumptions: List[Fact] = []
        for literal in premise_dnf[0]:
            if any(isinstance(a, FWild) for a in literal.atom.args):
                raise NormalizationError("wildcard in the conjecture premises")
            predicate = self._predicate_for(literal)
            args = tuple(
                skolem[a.name] if isinstance(a, FVar) else a.name for a in literal.atom.args
            )
            fact = Fact(predicate=predicate, args=args)
            if fact not in assumptions:
                assumptions.append(fact)

        goal_spec = self._goal(matrix, skolem, exist)
        return ConjectureParts(
            constants=[skolem[name] for name in univ],
            skolem=skolem,
            assumptions=assumptions,
            goal=goal_spec,
        )

    def _goal(self, matrix: Formula, skolem: Dict[str, str], exist: List[str]) -> GoalSpec:
        dnf = to_dnf(matrix)
        if any(not conjunct for conjunct in dnf):
            raise NormalizationError("goal is trivially true")
        if not dnf:
            return GoalSpec((), ((GoalAtom(BOTTOM),),))

        exist_index = {name: i for i, name in enumerate(exist)}
        pred_slots = 0
        holes = 0
        disjuncts = []
        for conjunct in dnf:
            atoms = []
            for literal in conjunct:
                atom = literal.atom
                if atom.predicate is None:
                    if not literal.positive:
                        raise NormalizationError("negated wildcard goal")
                    predicate, pred_slot = None, pred_slots
                    pred_slots += 1
                else:
                    predicate, pred_slot = self._predicate_for(literal), None
                args = []
                for arg in atom.args:
                    if isinstance(arg, FWild):
                        args.append(Hole(holes))
                        holes += 1
                    elif isinstance(arg, FVar) and arg.name in skolem:
                        args.append(Const(skolem[arg.name]))
                    elif isinstance(arg, FVar):
                        args.append(Var(exist_index[arg.name]))
                    elif isinstance(arg, FConst):
                        args.append(Const(arg.name))
                    else:
                        raise NormalizationError(f"unsupported goal argument {arg!r}")
                atoms.append(GoalAtom(predicate, tuple(args), pred_slot))
            disjuncts.append(tuple(atoms))
        return GoalSpec(tuple(exist), tuple(disjuncts))


@dataclass
class ConjectureParts:
    """Normalized conjecture: skolem constants, assumptions and the goal."""
    constants: List[str]
    skolem: Dict[str, str]
    assumptions: List[Fact]
    goal: GoalSpec


def _skolem_names(variables: Sequence[str], taken: Sequence[str]) -> Dict[str, str]:
    used = set(taken)
    names: Dict[str, str] = {}
    for variable in variables:
        base = variable.lower()
        name = base
        k = 1
        while name in used:
            name = f"{base}{k}"
            k += 1
        used.add(name)
        names[variable] = name
    return names


def _is_coherent_dnf(dnf: Dnf) -> bool:
    if len(dnf) > 2:
        return False
    if len(dnf) == 2 and any(len(conjunct) != 1 for conjunct in dnf):
        return False
    return True


def _renamed(formula: CLFormula, name: str) -> CLFormula:
    return CLFormula(
        name=name,
        univ_vars=formula.univ_vars,
        premises=formula.premises,
        exist_vars=formula.exist_vars,
        disjuncts=formula.disjuncts,
        linking=formula.linking,
    )


def fol_to_cl(name: str, formula: Formula, signature: Signature) -> List[CLFormula]:
    """
    Translate one first-order formula into coherent form.

    Args:
        name: Axiom name; split results are suffixed `_1`, `_2`, ...
        formula: Raw formula tree from the parser
        signature: Signature, extended in place with new bar predicates

    Returns:
        CL formulas for the axiom followed by linking axioms of bar predicates
        introduced by this call
    """
    normalizer = Normalizer(signature)
    formulas = normalizer.axiom(name, formula)
    return formulas + normalizer.take_linking()
