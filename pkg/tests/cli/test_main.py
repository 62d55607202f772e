"""Tests for the command line."""

import json

from proofkit import __version__
from proofkit.cli.main import (
    EXIT_INPUT_ERROR,
    EXIT_PROVED,
    EXIT_TIMEOUT,
    EXIT_UNPROVABLE,
    run_cli,
)

BUILTIN = ["--solver", "builtin"]


class TestExitCodes:
    def test_version(self, capsys):
        """Test the version flag."""
        assert run_cli(["--version"]) == EXIT_PROVED
        assert f"ProofKit v{__version__}" in capsys.readouterr().out

    def test_missing_problem(self, capsys):
        """Test a problem argument that names nothing."""
        assert run_cli(["no_such_problem"]) == EXIT_INPUT_ERROR
        assert "Problem file not found" in capsys.readouterr().err

    def test_unknown_option(self, chain_file):
        """Test that usage errors are input errors."""
        assert run_cli([str(chain_file), "--bogus"]) == EXIT_INPUT_ERROR

    def test_invalid_bound(self, chain_file, capsys):
        """Test that option values are validated."""
        assert run_cli([str(chain_file), "-m", "0"]) == EXIT_INPUT_ERROR
        assert "Invalid options" in capsys.readouterr().err

    def test_malformed_environment(self, chain_file, capsys):
        """Test that an unparsable environment setting is an input error."""
        assert run_cli([str(chain_file)], env={"PROOFKIT_MAX_LEN": "eight"}) == EXIT_INPUT_ERROR
        assert "Invalid PROOFKIT_* setting" in capsys.readouterr().err

    def test_syntax_error(self, write_problem, capsys):
        """Test that a malformed problem is an input error."""
        path = write_problem("fof(goal, conjecture, p(a) & & q(a)).\n")

        assert run_cli([str(path)]) == EXIT_INPUT_ERROR
        assert "Error" in capsys.readouterr().err

    def test_unprovable(self, chain_file, capsys):
        """Test exhausting the length bound."""
        assert run_cli([str(chain_file), "-m", "2", *BUILTIN]) == EXIT_UNPROVABLE
        assert "No proof of length at most 2" in capsys.readouterr().err

    def test_timeout(self, chain_file):
        """Test an exhausted time limit."""
        assert run_cli([str(chain_file), "-l", "1e-9", *BUILTIN]) == EXIT_TIMEOUT


class TestProve:
    def test_text_proof(self, chain_file, capsys):
        """Test printing a proof as text."""
        code = run_cli([str(chain_file), "-m", "3", *BUILTIN])

        out = capsys.readouterr().out
        assert code == EXIT_PROVED
        assert out.startswith("Consider arbitrary a such that:\n")
        assert "It should be proved that r(a)." in out
        assert out.endswith("3. Proved by assumption! (by QEDas)\n")

    def test_settings_from_environment(self, chain_file, capsys):
        """Test that bounds and backend can come from the environment."""
        code = run_cli([str(chain_file)], env={"PROOFKIT_MAX_LEN": "3", "PROOFKIT_SOLVER": "builtin"})

        assert code == EXIT_PROVED
        assert "Proved by assumption!" in capsys.readouterr().out

    def test_statistics(self, chain_file, capsys):
        """Test the statistics table on stderr."""
        run_cli([str(chain_file), "-m", "3", "--stats", *BUILTIN])

        err = capsys.readouterr().err
        assert "Search statistics" in err
        assert "unsat" in err

    def test_abducts(self, abduct_file, capsys):
        """Test the abduct listing."""
        code = run_cli([str(abduct_file), "-m", "3", "-b", "1", *BUILTIN])

        out = capsys.readouterr().out
        assert code == EXIT_PROVED
        assert "Abduct tuples:\nq(a) (consistent)\n" in out
        assert "q(a) [abduct]" in out

    def test_only_inconsistent_abducts(self, clashing_abduct_file, capsys):
        """Test that rejected abducts are listed and the run fails."""
        code = run_cli([str(clashing_abduct_file), "-m", "3", "-b", "1", *BUILTIN])

        captured = capsys.readouterr()
        assert code == EXIT_UNPROVABLE
        assert "Rejected abduct tuples:\nq(a) (inconsistent)\n" in captured.out
        assert "[abduct]" not in captured.out
        assert "No abduct passed the consistency check" in captured.err

    def test_deducts(self, deduct_file, capsys):
        """Test the deduct listing."""
        code = run_cli([str(deduct_file), "-m", "3", "--deduct-all", *BUILTIN])

        out = capsys.readouterr().out
        assert code == EXIT_PROVED
        assert out.endswith("Deducts found:\nq(a)\n")

    def test_dump_files(self, chain_file, temp_dir):
        """Test the CNF and constraint dumps."""
        cnf = temp_dir / "out.cnf"
        constraints = temp_dir / "out.txt"

        run_cli([
            str(chain_file), "-m", "3", *BUILTIN,
            "--dump-cnf", str(cnf), "--dump-constraints", str(constraints),
        ])

        assert cnf.read_text(encoding="ascii").startswith("p cnf")
        assert "StepKind[0]" in constraints.read_text(encoding="utf-8")


class TestCheck:
    def _structured_proof(self, chain_file, temp_dir, capsys):
        assert run_cli([str(chain_file), "-m", "3", "--format", "structured", *BUILTIN]) == EXIT_PROVED
        path = temp_dir / "proof.json"
        path.write_text(capsys.readouterr().out, encoding="utf-8")
        return path

    def test_structured_round_trip(self, chain_file, temp_dir, capsys):
        """Test that a printed structured proof is accepted by --check."""
        proof_file = self._structured_proof(chain_file, temp_dir, capsys)

        assert json.loads(proof_file.read_text(encoding="utf-8"))["outcome"] == "proved"
        assert run_cli([str(chain_file), "--check", str(proof_file)]) == EXIT_PROVED
        assert capsys.readouterr().out == "Proof accepted.\n"

    def test_tampered_proof_rejected(self, chain_file, temp_dir, capsys):
        """Test that a proof using the wrong axiom is rejected."""
        proof_file = self._structured_proof(chain_file, temp_dir, capsys)
        raw = json.loads(proof_file.read_text(encoding="utf-8"))
        raw["steps"][0]["axiom"] = "ax2"
        proof_file.write_text(json.dumps(raw), encoding="utf-8")

        assert run_cli([str(chain_file), "--check", str(proof_file)]) == EXIT_UNPROVABLE
        assert "Proof rejected" in capsys.readouterr().err

    def test_malformed_document(self, chain_file, temp_dir, capsys):
        """Test that a file that is not a proof document is an input error."""
        proof_file = temp_dir / "proof.json"
        proof_file.write_text("not json", encoding="utf-8")

        assert run_cli([str(chain_file), "--check", str(proof_file)]) == EXIT_INPUT_ERROR
        assert "StructuredFormatError" in capsys.readouterr().err
