"""Tests for coherent-logic normalization and conjecture handling."""

from itertools import product

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from proofkit.logic import Atom, Conjunct, Normalizer, Var, fol_to_cl
from proofkit.logic.goal import Hole
from proofkit.schemas import Fact
from proofkit.tptp import parse_problem
from proofkit.utils.exceptions import NormalizationError


def _axiom_formula(text: str):
    problem = parse_problem(f"fof(ax, axiom, {text}).\nfof(goal, conjecture, $true).\n")
    return problem.axioms[0].formula, problem.signature


class TestAxiomNormalization:
    def test_simple_implication(self):
        """Test a Horn-style axiom."""
        formula, signature = _axiom_formula("(! [A, B] : (p(A, B) => q(B, A)))")

        (cl,) = fol_to_cl("ax", formula, signature)

        assert cl.name == "ax"
        assert cl.univ_vars == ("A", "B")
        assert cl.premises == (Atom("p", (Var(0), Var(1))),)
        assert cl.disjuncts == (Conjunct((Atom("q", (Var(1), Var(0))),)),)
        assert not cl.is_case_split

    def test_existential_conclusion(self):
        """Test existential variables follow the universals in the variable table."""
        formula, signature = _axiom_formula("(! [A, B] : (p(A, B) => ? [M] : (mid(A, M, B) & q(M))))")

        (cl,) = fol_to_cl("ax", formula, signature)

        assert cl.exist_vars == ("M",)
        assert cl.var_names == ("A", "B", "M")
        assert cl.disjuncts[0].atoms[0] == Atom("mid", (Var(0), Var(2), Var(1)))
        assert len(cl.disjuncts[0].atoms) == 2

    def test_case_split(self):
        """Test a two-disjunct consequent."""
        formula, signature = _axiom_formula("(! [X] : (s(X) => (p(X) | q(X))))")

        (cl,) = fol_to_cl("ax", formula, signature)

        assert cl.is_case_split
        assert [c.atoms[0].predicate for c in cl.disjuncts] == ["p", "q"]

    def test_falsum_consequent(self):
        """Test that an axiom concluding $false has no disjuncts."""
        formula, signature = _axiom_formula("(! [X] : ((p(X) & q(X)) => $false))")

        (cl,) = fol_to_cl("ax", formula, signature)

        assert cl.is_falsum
        assert cl.consequent_atoms() == [Atom("$false")]

    def test_conjunctive_consequent_is_split(self):
        """Test that A => (B & C) without existentials stays one formula with a conjunct."""
        formula, signature = _axiom_formula("(! [X] : (p(X) => (q(X) & r(X))))")

        results = fol_to_cl("ax", formula, signature)

        assert len(results) == 1
        assert len(results[0].disjuncts[0].atoms) == 2

    def test_iff_gives_two_formulas(self):
        """Test that an equivalence becomes two numbered implications."""
        formula, signature = _axiom_formula("(! [X] : (p(X) <=> q(X)))")

        results = fol_to_cl("ax", formula, signature)

        assert [cl.name for cl in results] == ["ax_1", "ax_2"]

    def test_disjunctive_premise_splits(self):
        """Test that (A | B) => C becomes one formula per premise disjunct."""
        formula, signature = _axiom_formula("(! [X] : ((p(X) | q(X)) => r(X)))")

        results = fol_to_cl("ax", formula, signature)

        assert len(results) == 2
        assert {cl.premises[0].predicate for cl in results} == {"p", "q"}

    def test_three_disjuncts_rejected(self):
        """Test that consequents with more than two disjuncts have no coherent form."""
        formula, signature = _axiom_formula("(! [X] : (s(X) => (p(X) | q(X) | r(X))))")

        with pytest.raises(NormalizationError, match="at most 2"):
            fol_to_cl("ax", formula, signature)

    def test_conjunctive_branch_rejected(self):
        """Test that a split branch must be a single atom."""
        formula, signature = _axiom_formula("(! [X] : (s(X) => ((p(X) & q(X)) | r(X))))")

        with pytest.raises(NormalizationError):
            fol_to_cl("ax", formula, signature)


class TestBarPredicates:
    def test_negated_premise_uses_bar(self):
        """Test that ~col becomes ncol with two linking axioms."""
        formula, signature = _axiom_formula("(! [A, B, C] : (~ col(A, B, C) => p(A)))")
        normalizer = Normalizer(signature)

        (cl,) = normalizer.axiom("ax", formula)
        linking = normalizer.take_linking()

        assert cl.premises[0].predicate == "ncol"
        assert [f.name for f in linking] == ["ncol_exclusive", "ncol_exhaustive"]
        assert all(f.linking for f in linking)

    def test_linking_axiom_shapes(self):
        """Test exclusivity (⇒ ⊥) and exhaustiveness (⊤ ⇒ split)."""
        formula, signature = _axiom_formula("(! [X] : (p(X) => ~ q(X)))")
        normalizer = Normalizer(signature)
        normalizer.axiom("ax", formula)

        exclusive, exhaustive = normalizer.take_linking()

        assert exclusive.premises == (Atom("q", (Var(0),)), Atom("nq", (Var(0),)))
        assert exclusive.is_falsum
        assert exhaustive.premises == ()
        assert exhaustive.is_case_split

    def test_linking_axioms_taken_once(self):
        """Test that pending linking axioms are handed out once."""
        formula, signature = _axiom_formula("(! [X] : (p(X) => ~ q(X)))")
        normalizer = Normalizer(signature)
        normalizer.axiom("ax", formula)

        assert len(normalizer.take_linking()) == 2
        assert normalizer.take_linking() == []

    def test_disequality_has_no_linking(self):
        """Test that != stays the reserved neq predicate."""
        formula, signature = _axiom_formula("(! [A, B] : ((A != B) => p(A)))")
        normalizer = Normalizer(signature)

        (cl,) = normalizer.axiom("ax", formula)

        assert cl.premises[0].predicate == "neq"

    def test_negated_equality_is_not_disequality(self):
        """Test that ~(A = B) gets a bar of eq instead of the neq predicate."""
        formula, signature = _axiom_formula("(! [A, B] : ((~ (A = B)) => p(A)))")
        normalizer = Normalizer(signature)

        (cl,) = normalizer.axiom("ax", formula)
        linking = normalizer.take_linking()

        assert cl.premises[0].predicate == "not_eq"
        assert {atom.predicate for f in linking for atom in f.premises} == {"eq", "not_eq"}
        assert all(atom.predicate != "neq" for f in linking for c in f.disjuncts for atom in c.atoms)


class TestConjecture:
    def test_skolem_constants(self, chain_theory):
        """Test universal conjecture variables become lower-case constants."""
        assert chain_theory.constants == ("a",)
        assert chain_theory.skolem == {"A": "a"}
        assert chain_theory.assumptions == [Fact(predicate="p", args=("a",))]

    def test_goal_from_conclusion(self, chain_theory):
        """Test the conclusion becomes the goal."""
        goal = chain_theory.goal.to_proof_goal()

        assert str(goal) == "r(a)"

    def test_negated_assumption(self, negation_theory):
        """Test negated conjecture atoms use bar predicates."""
        assert negation_theory.goal.to_proof_goal().disjuncts == [
            [Fact(predicate="nq", args=("a",))]
        ]
        assert "nq_exclusive" in negation_theory.axiom_map

    def test_skolem_avoids_file_constants(self):
        """Test that skolem names do not clash with constants of the problem."""
        problem = parse_problem(
            "fof(ax, axiom, p(a)).\n"
            "fof(goal, conjecture, (! [A] : (q(A) => p(a)))).\n"
        )
        parts = Normalizer(problem.signature.copy()).conjecture(
            problem.conjecture.formula, problem.constants
        )

        assert parts.skolem == {"A": "a1"}

    def test_unbound_goal_variable_is_existential(self):
        """Test that free goal variables are read as existential."""
        problem = parse_problem("fof(goal, conjecture, (! [A] : (p(A) => q(A, Y)))).\n")
        parts = Normalizer(problem.signature.copy()).conjecture(
            problem.conjecture.formula, problem.constants
        )

        assert parts.goal.exist_vars == ("Y",)

    def test_explicit_existential_goal(self):
        """Test ∃ in the conclusion."""
        problem = parse_problem("fof(goal, conjecture, (! [A] : (p(A) => ? [Y] : q(A, Y)))).\n")
        parts = Normalizer(problem.signature.copy()).conjecture(
            problem.conjecture.formula, problem.constants
        )

        assert parts.goal.exist_vars == ("Y",)
        assert str(parts.goal.to_proof_goal()) == "∃ Y. q(a, Y)"

    def test_wildcard_goal(self, deduct_theory):
        """Test a wildcard predicate goal."""
        goal = deduct_theory.goal

        assert goal.has_wildcards
        assert goal.num_pred_slots == 1
        assert goal.num_holes == 0

    def test_wildcard_argument(self):
        """Test wildcard arguments become numbered holes."""
        problem = parse_problem("fof(goal, conjecture, (! [A] : (p(A) => q(A, _)))).\n")
        parts = Normalizer(problem.signature.copy()).conjecture(
            problem.conjecture.formula, problem.constants
        )

        assert parts.goal.disjuncts[0][0].args[1] == Hole(0)

    def test_no_premises_gives_no_assumptions(self):
        """Test a conjecture without an implication."""
        problem = parse_problem("fof(goal, conjecture, (! [A] : p(A))).\n")
        parts = Normalizer(problem.signature.copy()).conjecture(
            problem.conjecture.formula, problem.constants
        )

        assert parts.assumptions == []
        assert parts.constants == ["a"]

    def test_disjunctive_premise_rejected(self):
        """Test that conjecture premises must be a conjunction."""
        problem = parse_problem("fof(goal, conjecture, (! [A] : ((p(A) | q(A)) => r(A)))).\n")

        with pytest.raises(NormalizationError, match="conjunction"):
            Normalizer(problem.signature.copy()).conjecture(
                problem.conjecture.formula, problem.constants
            )


BASE = ("p", "q", "r")


def _holds(formula, value) -> bool:
    """Truth of a ground CL formula under a valuation of predicate names."""
    if not all(value(atom.predicate) for atom in formula.premises):
        return True
    return any(all(value(atom.predicate) for atom in c.atoms) for c in formula.disjuncts)


def _normalized(text: str):
    formula, signature = _axiom_formula(text)
    normalizer = Normalizer(signature)
    return normalizer.axiom("ax", formula) + normalizer.take_linking(), signature


def _agrees_on_every_row(cl_formulas, signature, original) -> bool:
    """Compare the CL set with `original` on every valuation of the base atoms."""
    for row in product([False, True], repeat=len(BASE)):
        truth = dict(zip(BASE, row))

        def value(name):
            positive = signature.positive_of(name)
            return not truth[positive] if positive else truth[name]

        if all(_holds(f, value) for f in cl_formulas) != original(truth):
            return False
    return True


def _render(tree) -> str:
    kind = tree[0]
    if kind == "atom":
        return tree[1]
    if kind == "not":
        return f"(~ {_render(tree[1])})"
    joiner = " & " if kind == "and" else " | "
    return f"({_render(tree[1])}{joiner}{_render(tree[2])})"


def _truth(tree, truth) -> bool:
    kind = tree[0]
    if kind == "atom":
        return truth[tree[1]]
    if kind == "not":
        return not _truth(tree[1], truth)
    if kind == "and":
        return _truth(tree[1], truth) and _truth(tree[2], truth)
    return _truth(tree[1], truth) or _truth(tree[2], truth)


propositions = st.recursive(
    st.sampled_from(BASE).map(lambda name: ("atom", name)),
    lambda children: st.one_of(
        children.map(lambda child: ("not", child)),
        st.tuples(st.sampled_from(["and", "or"]), children, children),
    ),
    max_leaves=3,
)


class TestTruthTables:
    def test_negated_conjunction(self):
        """Test ~(p & q) against its truth table."""
        cl_formulas, signature = _normalized("(~ (p & q))")

        assert [f.name for f in cl_formulas[:1]] == ["ax"]
        assert cl_formulas[0].is_case_split
        assert _agrees_on_every_row(cl_formulas, signature, lambda t: not (t["p"] and t["q"]))

    @settings(max_examples=150, deadline=None)
    @given(propositions, propositions)
    def test_implications_keep_their_truth_table(self, antecedent, consequent):
        """Test random propositional implications against their truth tables."""
        try:
            cl_formulas, signature = _normalized(f"({_render(antecedent)} => {_render(consequent)})")
        except NormalizationError:
            assume(False)

        def original(truth):
            return not _truth(antecedent, truth) or _truth(consequent, truth)

        assert _agrees_on_every_row(cl_formulas, signature, original)
