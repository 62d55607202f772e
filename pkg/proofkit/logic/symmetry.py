"""
Argument symmetries stated by the axioms.

An axiom `p(X1, ..., Xn) ⇒ p(Xπ1, ..., Xπn) ∧ ...` over distinct variables
says that `p` is invariant under the listed argument permutations. The
permutations of all such axioms generate a group per predicate; premises
are matched modulo that group. A bar predicate shares the group of the
predicate it negates.
"""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from proofkit.schemas.proof import Fact
from proofkit.tptp.signature import Signature

from .terms import CLFormula, Var

# perm[j] is the argument position that moves to position j
Permutation = Tuple[int, ...]
SymmetryGroups = Dict[str, Tuple[Permutation, ...]]


def stated_permutations(formula: CLFormula) -> Optional[Tuple[str, List[Permutation]]]:
    """
    Permutations an axiom states for its premise predicate.

    Returns:
        (predicate, non-identity permutations), or None if the axiom is not
        a symmetry statement
    """
    if len(formula.premises) != 1 or formula.exist_vars or len(formula.disjuncts) != 1:
        return None
    premise = formula.premises[0]
    if not premise.args or not all(isinstance(a, Var) for a in premise.args):
        return None
    position = {arg.index: j for j, arg in enumerate(premise.args)}
    if len(position) != premise.arity:
        return None

    found: List[Permutation] = []
    identity = tuple(range(premise.arity))
    for atom in formula.disjuncts[0].atoms:
        if atom.predicate != premise.predicate:
            return None
        if not all(isinstance(a, Var) and a.index in position for a in atom.args):
            return None
        perm = tuple(position[a.index] for a in atom.args)
        if len(set(perm)) != len(perm):
            return None
        if perm != identity and perm not in found:
            found.append(perm)
    if not found:
        return None
    return premise.predicate, found


def compose(first: Permutation, second: Permutation) -> Permutation:
    """Apply `first`, then `second`."""
    return tuple(first[j] for j in second)


def generate(generators: Sequence[Permutation]) -> Tuple[Permutation, ...]:
    """The group generated by `generators`, identity first, in discovery order."""
    identity = tuple(range(len(generators[0])))
    group = [identity]
    frontier = [identity]
    while frontier:
        fresh = []
        for element in frontier:
            for gen in generators:
                product = compose(element, gen)
                if product not in group:
                    group.append(product)
                    fresh.append(product)
        frontier = fresh
    return tuple(group)


def symmetry_groups(axioms: Iterable[CLFormula], signature: Optional[Signature] = None) -> SymmetryGroups:
    """
    Symmetry group of every predicate with a non-trivial one.

    Args:
        axioms: CL axioms to scan for symmetry statements
        signature: When given, bar predicates inherit the group of their positive
    """
    generators: Dict[str, List[Permutation]] = {}
    for formula in axioms:
        stated = stated_permutations(formula)
        if stated is None:
            continue
        predicate, perms = stated
        known = generators.setdefault(predicate, [])
        known.extend(p for p in perms if p not in known)

    groups: SymmetryGroups = {p: generate(gens) for p, gens in generators.items()}
    if signature is not None:
        for name in signature:
            positive = signature.positive_of(name)
            if positive in groups and name not in groups:
                groups[name] = groups[positive]
    return groups


def permute(fact: Fact, perm: Permutation) -> Fact:
    return Fact(predicate=fact.predicate, args=tuple(fact.args[j] for j in perm))


def variants(fact: Fact, groups: SymmetryGroups) -> List[Fact]:
    """All facts equal to `fact` modulo the symmetries of its predicate, `fact` first."""
    group = groups.get(fact.predicate)
    if not group or len(group[0]) != len(fact.args):
        return [fact]
    seen: List[Fact] = []
    for perm in group:
        image = permute(fact, perm)
        if image not in seen:
            seen.append(image)
    return seen
