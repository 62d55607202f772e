"""Independent proof checker."""

from .checker import CheckOk, CheckResult, ProofChecker, Violation, check_proof
from .scope import branch_paths, is_visible, visible_facts

__all__ = [
    "CheckOk",
    "CheckResult",
    "ProofChecker",
    "Violation",
    "check_proof",
    "branch_paths",
    "is_visible",
    "visible_facts",
]
