"""Core orchestration for ProofKit."""

from .runner import ProofRunner, load_theory

__all__ = ["ProofRunner", "load_theory"]
