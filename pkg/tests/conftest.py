"""Shared pytest fixtures for ProofKit tests."""

import tempfile
from pathlib import Path

import pytest

from proofkit.logic import build_theory
from proofkit.schemas import (
    Fact,
    PremiseRef,
    PremiseSource,
    Proof,
    ProofGoal,
    ProofStep,
    StepKind,
)
from proofkit.tptp import parse_problem, parse_problem_file
from proofkit.utils.config import reset_config
from proofkit.utils.paths import resolve_problem_path


CHAIN_PROBLEM = """
fof(ax1, axiom, (! [X] : (p(X) => q(X)))).
fof(ax2, axiom, (! [X] : (q(X) => r(X)))).
fof(goal, conjecture, (! [A] : (p(A) => r(A)))).
"""

CASES_PROBLEM = """
fof(split, axiom, (! [X] : (s(X) => (p(X) | q(X))))).
fof(pr, axiom, (! [X] : (p(X) => r(X)))).
fof(qr, axiom, (! [X] : (q(X) => r(X)))).
fof(goal, conjecture, (! [A] : (s(A) => r(A)))).
"""

ABDUCT_PROBLEM = """
fof(pqr, axiom, (! [X] : ((p(X) & q(X)) => r(X)))).
fof(goal, conjecture, (! [A] : (p(A) => r(A)))).
"""

CLASHING_ABDUCT_PROBLEM = """
fof(clash, axiom, (! [X] : ((p(X) & q(X)) => $false))).
fof(pqr, axiom, (! [X] : ((p(X) & q(X)) => r(X)))).
fof(goal, conjecture, (! [A] : (p(A) => r(A)))).
"""

DEDUCT_PROBLEM = """
fof(ax1, axiom, (! [X] : (p(X) => q(X)))).
fof(goal, conjecture, (! [A] : (p(A) => _(A)))).
"""

NEGATION_PROBLEM = """
fof(ax, axiom, (! [X] : (p(X) => ~ q(X)))).
fof(goal, conjecture, (! [A] : (p(A) => ~ q(A)))).
"""

EFQ_PROBLEM = """
fof(clash, axiom, (! [X] : ((p(X) & q(X)) => $false))).
fof(goal, conjecture, (! [A] : ((p(A) & q(A)) => r(A)))).
"""

SYMMETRY_PROBLEM = """
fof(swap, axiom, (! [X, Y] : (e(X, Y) => e(Y, X)))).
fof(reach, axiom, (! [X, Y] : ((e(X, Y) & m(X)) => r(Y)))).
fof(goal, conjecture, (! [A, B] : ((e(B, A) & m(A)) => r(B)))).
"""


def _fact(predicate, *args):
    return Fact(predicate=predicate, args=tuple(args))


@pytest.fixture(autouse=True)
def fresh_config():
    """Drop the settings singleton around every test."""
    reset_config()
    yield
    reset_config()


@pytest.fixture
def temp_dir():
    """Create a temporary directory for test outputs."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def make_theory():
    """Build a normalized theory from fof text."""
    def _make(text: str):
        return build_theory(parse_problem(text))
    return _make


@pytest.fixture
def write_problem(temp_dir):
    """Write fof text to a problem file and return its path."""
    def _write(text: str, name: str = "problem.p") -> Path:
        path = temp_dir / name
        path.write_text(text, encoding="utf-8")
        return path
    return _write


@pytest.fixture
def chain_theory(make_theory):
    return make_theory(CHAIN_PROBLEM)


@pytest.fixture
def cases_theory(make_theory):
    return make_theory(CASES_PROBLEM)


@pytest.fixture
def abduct_theory(make_theory):
    return make_theory(ABDUCT_PROBLEM)


@pytest.fixture
def clashing_abduct_theory(make_theory):
    return make_theory(CLASHING_ABDUCT_PROBLEM)


@pytest.fixture
def deduct_theory(make_theory):
    return make_theory(DEDUCT_PROBLEM)


@pytest.fixture
def negation_theory(make_theory):
    return make_theory(NEGATION_PROBLEM)


@pytest.fixture
def efq_theory(make_theory):
    return make_theory(EFQ_PROBLEM)


@pytest.fixture
def symmetry_theory(make_theory):
    return make_theory(SYMMETRY_PROBLEM)


@pytest.fixture
def chain_proof():
    """p(a) ⊢ r(a) in two MP steps and a QED."""
    return Proof(
        constants=["a"],
        assumptions=[_fact("p", "a")],
        goal=ProofGoal(disjuncts=[[_fact("r", "a")]]),
        steps=[
            ProofStep(
                kind=StepKind.MP,
                nesting=1,
                contents=[[_fact("q", "a")]],
                axiom="ax1",
                from_=[PremiseRef(source=PremiseSource.ASSUMPTION, index=0)],
                instantiation={"X": "a"},
            ),
            ProofStep(
                kind=StepKind.MP,
                nesting=1,
                contents=[[_fact("r", "a")]],
                axiom="ax2",
                from_=[PremiseRef(source=PremiseSource.STEP, index=0)],
                instantiation={"X": "a"},
            ),
            ProofStep(
                kind=StepKind.QEDBYASSUMPTION,
                nesting=1,
                contents=[[_fact("r", "a")]],
                is_goal=True,
            ),
        ],
    )


@pytest.fixture
def cases_proof():
    """s(a) ⊢ r(a) by splitting on p(a) ∨ q(a)."""
    r_a = _fact("r", "a")
    return Proof(
        constants=["a"],
        assumptions=[_fact("s", "a")],
        goal=ProofGoal(disjuncts=[[r_a]]),
        steps=[
            ProofStep(
                kind=StepKind.MP,
                nesting=1,
                cases=True,
                contents=[[_fact("p", "a")], [_fact("q", "a")]],
                axiom="split",
                from_=[PremiseRef(source=PremiseSource.ASSUMPTION, index=0)],
                instantiation={"X": "a"},
            ),
            ProofStep(kind=StepKind.FIRSTCASE, nesting=2, contents=[[_fact("p", "a")]]),
            ProofStep(
                kind=StepKind.MP,
                nesting=2,
                contents=[[r_a]],
                axiom="pr",
                from_=[PremiseRef(source=PremiseSource.STEP, index=1)],
                instantiation={"X": "a"},
            ),
            ProofStep(kind=StepKind.QEDBYASSUMPTION, nesting=2, contents=[[r_a]], is_goal=True),
            ProofStep(kind=StepKind.SECONDCASE, nesting=2, contents=[[_fact("q", "a")]]),
            ProofStep(
                kind=StepKind.MP,
                nesting=2,
                contents=[[r_a]],
                axiom="qr",
                from_=[PremiseRef(source=PremiseSource.STEP, index=4)],
                instantiation={"X": "a"},
            ),
            ProofStep(kind=StepKind.QEDBYASSUMPTION, nesting=2, contents=[[r_a]], is_goal=True),
            ProofStep(kind=StepKind.QEDBYCASES, nesting=1, contents=[[r_a]], is_goal=True),
        ],
    )


@pytest.fixture
def chain_file(write_problem):
    return write_problem(CHAIN_PROBLEM, "chain.p")


@pytest.fixture
def abduct_file(write_problem):
    return write_problem(ABDUCT_PROBLEM, "abduct.p")


@pytest.fixture
def clashing_abduct_file(write_problem):
    return write_problem(CLASHING_ABDUCT_PROBLEM, "clashing.p")


@pytest.fixture
def deduct_file(write_problem):
    return write_problem(DEDUCT_PROBLEM, "deduct.p")


@pytest.fixture
def varignon_theory():
    return build_theory(parse_problem_file(resolve_problem_path("varignon")))


@pytest.fixture
def varignon_proof(varignon_theory):
    """
    The Varignon parallelogram in eight steps.

    Four midline steps, two transitivity steps and the parallelogram
    definition; most premises are matched only up to argument symmetry.
    """
    theory = varignon_theory

    def assumption(*fact):
        index = theory.assumptions.index(_fact(*fact))
        return PremiseRef(source=PremiseSource.ASSUMPTION, index=index)

    def step(index):
        return PremiseRef(source=PremiseSource.STEP, index=index)

    def mp(axiom, conclusion, refs, **values):
        return ProofStep(
            kind=StepKind.MP,
            nesting=1,
            contents=[[conclusion]],
            axiom=axiom,
            from_=refs,
            instantiation=values,
        )

    midline = "triangle_mid_par_strict"
    goal = _fact("pG", "e", "f", "g", "h")
    steps = [
        mp(midline, _fact("par", "a", "c", "h", "g"),
           [assumption("ncol", "a", "c", "d"), assumption("midpoint", "c", "g", "d"),
            assumption("midpoint", "a", "h", "d")],
           A="a", B="c", C="d", P="g", Q="h"),
        mp(midline, _fact("par", "b", "d", "f", "g"),
           [assumption("ncol", "b", "d", "c"), assumption("midpoint", "c", "g", "d"),
            assumption("midpoint", "b", "f", "c")],
           A="b", B="d", C="c", P="g", Q="f"),
        mp(midline, _fact("par", "a", "c", "e", "f"),
           [assumption("ncol", "a", "c", "b"), assumption("midpoint", "b", "f", "c"),
            assumption("midpoint", "a", "e", "b")],
           A="a", B="c", C="b", P="f", Q="e"),
        mp(midline, _fact("par", "b", "d", "e", "h"),
           [assumption("ncol", "b", "d", "a"), assumption("midpoint", "a", "h", "d"),
            assumption("midpoint", "a", "e", "b")],
           A="b", B="d", C="a", P="h", Q="e"),
        mp("lemma_par_trans", _fact("par", "e", "f", "g", "h"),
           [step(2), step(0), assumption("ncol", "e", "f", "g")],
           A="e", B="f", C="a", D="c", E="g", F="h"),
        mp("lemma_par_trans", _fact("par", "f", "g", "e", "h"),
           [step(1), step(3), assumption("ncol", "e", "f", "g")],
           A="f", B="g", C="b", D="d", E="e", F="h"),
        mp("defparallelogram2", goal, [step(4), step(5)], A="e", B="f", C="g", D="h"),
        ProofStep(kind=StepKind.QEDBYASSUMPTION, nesting=1, contents=[[goal]], is_goal=True),
    ]
    return Proof(
        constants=list(theory.constants),
        assumptions=list(theory.assumptions),
        goal=theory.goal.to_proof_goal(),
        steps=steps,
    )
