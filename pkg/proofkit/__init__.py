"""ProofKit - coherent-logic proof search by constraint solving."""

__version__ = "0.1.0"
