"""Branch scoping of linear proofs."""

from typing import List, Sequence, Set, Tuple

from proofkit.schemas.proof import Fact, Proof, ProofStep, StepKind


# Open case branches enclosing a step: (index of the splitting MP step, branch 1 or 2)
BranchPath = Tuple[Tuple[int, int], ...]

PREMISE_KINDS = frozenset(
    {StepKind.ASSUMPTION, StepKind.MP, StepKind.FIRSTCASE, StepKind.SECONDCASE}
)


def branch_paths(steps: Sequence[ProofStep]) -> List[BranchPath]:
    """Branch path of every step, read from the step kinds alone."""
    stack: List[Tuple[int, int]] = []
    paths: List[BranchPath] = []
    for s, step in enumerate(steps):
        if step.kind == StepKind.FIRSTCASE:
            stack.append((s - 1, 1))
        elif step.kind == StepKind.SECONDCASE and stack:
            origin, _ = stack.pop()
            stack.append((origin, 2))
        elif step.kind == StepKind.QEDBYCASES and stack:
            stack.pop()
        paths.append(tuple(stack))
    return paths


def is_visible(paths: Sequence[BranchPath], t: int, s: int) -> bool:
    """Whether step `t` lies on an ancestor-or-same branch of step `s`."""
    if t >= s:
        return False
    return paths[s][: len(paths[t])] == paths[t]


def usable_as_premise(step: ProofStep) -> bool:
    return step.kind in PREMISE_KINDS and not step.cases


def visible_facts(proof: Proof, s: int) -> Set[Fact]:
    """
    Facts available at step `s`.

    Assumptions and abducts, plus the contents of every earlier step on an
    ancestor-or-same branch. Case-splitting steps contribute nothing.

    Raises:
        IndexError: If `s` is not a step index
    """
    if not 0 <= s < len(proof.steps):
        raise IndexError(f"step {s} outside a proof of {len(proof.steps)} steps")
    facts: Set[Fact] = set(proof.assumptions) | set(proof.abducts)
    paths = branch_paths(proof.steps)
    for t in range(s):
        step = proof.steps[t]
        if usable_as_premise(step) and is_visible(paths, t, s):
            facts.update(step.facts())
    return facts
