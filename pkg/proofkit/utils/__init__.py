"""Utility modules for ProofKit."""

from .config import get_config, ProofKitSettings, reset_config
from .logger import setup_logger, logger
from .exceptions import ProofKitError
from .paths import get_corpus_dir, list_corpus_problems, resolve_problem_path

__all__ = [
    "get_config",
    "ProofKitSettings",
    "reset_config",
    "setup_logger",
    "logger",
    "ProofKitError",
    "get_corpus_dir",
    "list_corpus_problems",
    "resolve_problem_path",
]
