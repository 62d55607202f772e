"""Command line for ProofKit."""


# Lazy import of the typer app
def run_cli(argv, env=None) -> int:
    """Run the command line and return its exit code."""
    from .main import run_cli as _run_cli
    return _run_cli(argv, env)


__all__ = ["run_cli"]
