"""Path utilities for ProofKit."""

from pathlib import Path
from typing import List


CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"


def get_corpus_dir() -> Path:
    """Return the directory holding the bundled problem files."""
    return CORPUS_DIR


def list_corpus_problems() -> List[Path]:
    """
    List the bundled problem files.

    Returns:
        Sorted list of `.p` files in the corpus directory
    """
    return sorted(CORPUS_DIR.glob("*.p"))


def resolve_problem_path(name: str) -> Path:
    """
    Resolve a problem argument to a file.

    A path that exists is returned unchanged; otherwise a bare name such as
    `varignon` or `varignon.p` is looked up in the corpus.

    Args:
        name: Path or corpus problem name

    Returns:
        Path to the problem file (may not exist if nothing matched)
    """
    path = Path(name)
    if path.exists():
        return path

    stem = path.name if path.suffix == ".p" else f"{path.name}.p"
    candidate = CORPUS_DIR / stem
    if candidate.exists():
        return candidate
    return path


def get_output_path(path: Path) -> Path:
    """
    Prepare an output file location.

    Args:
        path: Requested output file

    Returns:
        The same path, with its parent directory created
    """
    path.parent.mkdir(parents=True, exist_ok=True)
    return path
