"""Tests for CNF lowering and DIMACS interchange."""

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from proofkit.encoder import And, ConstraintProblem, Implies, IntVar, Lin, Not, Or, evaluate
from proofkit.encoder.constraints import FALSE, OPS, TRUE, referenced_variables
from proofkit.solver import (
    BuiltinBackend,
    CDCLSolver,
    CNFInstance,
    export_dimacs,
    import_model,
    lower,
    parse_assignment,
)
from proofkit.utils.exceptions import LoweringError, MalformedInstanceError, SolverOutputError


VARIABLES = (IntVar("x", 0, 3), IntVar("y", 1, 3), IntVar("z", 0, 4))
NAMES = [v.name for v in VARIABLES]

# six variables, domains of two to five values
POOL = (
    IntVar("p", 0, 2),
    IntVar("q", 0, 3),
    IntVar("r", 1, 3),
    IntVar("s", 0, 4),
    IntVar("t", 0, 5),
    IntVar("u", 2, 5),
)


def _problem(*constraints, variables=VARIABLES):
    problem = ConstraintProblem()
    for var in variables:
        problem.new_var(var.name, var.lo, var.hi)
    problem.extend(constraints)
    return problem


def _all_models(problem, variables=VARIABLES):
    """Enumerate the projected models of a problem through blocking clauses."""
    names = [v.name for v in variables]
    instance = lower(problem)
    found = set()
    with BuiltinBackend(instance) as backend:
        while True:
            result = backend.solve()
            if not result.sat:
                return found
            found.add(tuple(result.model[name] for name in names))
            backend.add_clause(instance.blocking_clause(result.model, names))


def _brute_force(constraint, variables=VARIABLES):
    names = [v.name for v in variables]
    found = set()
    for values in product(*(v.domain for v in variables)):
        if evaluate(constraint, dict(zip(names, values))):
            found.add(values)
    return found


def constraints_over(variables):
    """Random constraint trees over linear atoms of one or two variables."""
    unary = st.builds(
        lambda var, coef, op, rhs: Lin(((coef, var),), op, rhs),
        st.sampled_from(variables),
        st.sampled_from([-2, -1, 1, 2, 3]),
        st.sampled_from(OPS),
        st.integers(-4, 6),
    )
    binary = st.builds(
        lambda pair, c1, c2, op, rhs: Lin(((c1, pair[0]), (c2, pair[1])), op, rhs),
        st.permutations(variables).map(lambda vs: vs[:2]),
        st.sampled_from([-2, -1, 1, 2]),
        st.sampled_from([-1, 1, 3]),
        st.sampled_from(OPS),
        st.integers(-4, 6),
    )
    return st.recursive(
        st.one_of(unary, binary, st.sampled_from([TRUE, FALSE])),
        lambda children: st.one_of(
            st.lists(children, max_size=3).map(lambda items: And(tuple(items))),
            st.lists(children, max_size=3).map(lambda items: Or(tuple(items))),
            children.map(Not),
            st.tuples(children, children).map(lambda pair: Implies(*pair)),
        ),
        max_leaves=8,
    )


constraints = constraints_over(VARIABLES)


def _read_dimacs(text: bytes):
    """Header and clauses of a DIMACS file."""
    lines = text.decode("ascii").splitlines()
    _, _, num_vars, num_clauses = lines[0].split()
    clauses = [[int(token) for token in line.split()[:-1]] for line in lines[1:]]
    assert len(clauses) == int(num_clauses)
    return int(num_vars), clauses


class TestLowering:
    @settings(max_examples=100, deadline=None)
    @given(constraints)
    def test_models_match_brute_force(self, constraint):
        """Test that the CNF has exactly the models of the constraint."""
        assert _all_models(_problem(constraint)) == _brute_force(constraint)

    @settings(max_examples=100, deadline=None)
    @given(constraints_over(POOL))
    def test_six_variable_pool(self, constraint):
        """Test model equality over up to six variables with domains of at most five values."""
        used = [v for v in POOL if v in referenced_variables(constraint)]
        problem = _problem(constraint, variables=used)

        assert _all_models(problem, used) == _brute_force(constraint, used)

    def test_exactly_one_value_per_variable(self):
        """Test one-hot groups, including the large-domain cardinality encoding."""
        problem = ConstraintProblem()
        problem.new_var("big", 0, 10)
        instance = lower(problem)

        found = set()
        with BuiltinBackend(instance) as backend:
            while True:
                result = backend.solve()
                if not result.sat:
                    break
                found.add(result.model["big"])
                backend.add_clause(instance.blocking_clause(result.model, ["big"]))

        assert found == set(range(10))
        assert instance.num_vars > 10

    def test_wide_linear_atom_rejected(self):
        """Test that atoms over three variables have no lowering."""
        x, y, z = VARIABLES
        problem = _problem(Lin(((1, x), (1, y), (1, z)), "=", 2))

        with pytest.raises(LoweringError, match="3 variables"):
            lower(problem)

    def test_undeclared_variable_rejected(self):
        """Test atoms over variables outside the problem."""
        problem = _problem()
        problem.constraints.append(Lin(((1, IntVar("w", 0, 2)),), "=", 1))

        with pytest.raises(LoweringError, match="undeclared"):
            lower(problem)

    def test_false_constraint_gives_empty_clause(self):
        """Test that an unsatisfiable constraint lowers to the empty clause."""
        x = VARIABLES[0]
        instance = lower(_problem(Lin(((1, x),), "=", 9)))

        assert [] in instance.clauses
        assert _all_models(_problem(Lin(((1, x),), "=", 9))) == set()


class TestCNFInstance:
    def test_add_clause_checks_literals(self):
        """Test malformed literals."""
        instance = CNFInstance()
        instance.new_var()

        with pytest.raises(MalformedInstanceError):
            instance.add_clause([0])
        with pytest.raises(MalformedInstanceError):
            instance.add_clause([2])

    def test_tautologies_dropped(self):
        """Test that p ∨ ¬p is not stored."""
        instance = CNFInstance()
        instance.new_var()
        instance.add_clause([1, -1])

        assert instance.clauses == []

    def test_decode(self):
        """Test reading values off literals."""
        instance = CNFInstance()
        instance.add_group(IntVar("v", 0, 2))

        assert instance.decode([-1, 2]) == {"v": 1}
        with pytest.raises(SolverOutputError, match="sets 0 values"):
            instance.decode([-1, -2])
        with pytest.raises(SolverOutputError, match="sets 2 values"):
            instance.decode([1, 2])

    def test_literal_lookup(self):
        """Test the one-hot map."""
        instance = CNFInstance()
        instance.add_group(IntVar("v", 3, 5))

        assert instance.literal("v", 4) == 2
        assert instance.blocking_clause({"v": 3}, ["v"]) == [-1]
        with pytest.raises(LoweringError):
            instance.literal("v", 5)


class TestDimacs:
    def test_export(self):
        """Test the DIMACS text."""
        instance = CNFInstance()
        instance.new_var()
        instance.add_clause([1])

        assert export_dimacs(instance) == b"p cnf 1 1\n1 0\n"

    def test_export_empty_clause(self):
        """Test that the empty clause is written as a bare 0."""
        instance = CNFInstance()
        instance.new_var()
        instance.add_clause([-1])
        instance.clauses.append([])

        assert export_dimacs(instance) == b"p cnf 1 2\n-1 0\n0\n"

    @settings(max_examples=50, deadline=None)
    @given(constraints_over(POOL))
    def test_round_trip_through_text(self, constraint):
        """Test solving the exported file and importing the assignment back."""
        instance = lower(_problem(constraint, variables=POOL))
        num_vars, clauses = _read_dimacs(export_dimacs(instance))

        assert num_vars == instance.num_vars
        assert clauses == instance.clauses

        solver = CDCLSolver(num_vars, clauses)
        if solver.solve():
            literals = " ".join(str(lit) for lit in solver.model())
            model = import_model(instance, f"s SATISFIABLE\nv {literals} 0\n".encode("ascii"))
            assert evaluate(constraint, model)
        else:
            assert import_model(instance, b"s UNSATISFIABLE\n") is None
            with BuiltinBackend(instance) as backend:
                assert not backend.solve().sat

    @pytest.mark.parametrize(
        "output, expected",
        [
            (b"s SATISFIABLE\nv 1 -2\nv 3 0\n", [1, -2, 3]),
            (b"SAT\n1 -2 0\n", [1, -2]),
            (b"c solver banner\n-1 2 0\n", [-1, 2]),
            (b"s UNSATISFIABLE\n", None),
            (b"UNSAT\n", None),
        ],
    )
    def test_parse_assignment(self, output, expected):
        """Test the accepted solver output formats."""
        assert parse_assignment(output) == expected

    @pytest.mark.parametrize("output", [b"", b"c nothing\n", b"s SATISFIABLE\nv 1 x 0\n", b"\xff\xfe"])
    def test_parse_assignment_errors(self, output):
        """Test output carrying no usable verdict."""
        with pytest.raises(SolverOutputError):
            parse_assignment(output)

    def test_import_model(self):
        """Test mapping solver output back to integer values."""
        instance = CNFInstance()
        instance.add_group(IntVar("v", 0, 3))

        assert import_model(instance, b"s SATISFIABLE\nv -1 -2 3 0\n") == {"v": 2}
        assert import_model(instance, b"s UNSATISFIABLE\n") is None
        with pytest.raises(SolverOutputError, match="outside"):
            import_model(instance, b"SAT\n1 -2 -3 4 0\n")
