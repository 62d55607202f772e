"""python -m proofkit: same arguments and exit codes as the proofkit command."""
import sys

from proofkit.cli import run_cli

if __name__ == "__main__":
    sys.exit(run_cli(sys.argv[1:]))
