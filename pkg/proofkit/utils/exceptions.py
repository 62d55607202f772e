"""Custom exceptions for ProofKit."""

from typing import Optional


class ProofKitError(Exception):
    """Base exception for ProofKit."""
    pass


# TPTP frontend exceptions
class TptpError(ProofKitError):
    """Base exception for the problem-file frontend."""
    pass


class TptpSyntaxError(TptpError):
    """Problem text does not match the supported fof grammar."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class SignatureError(TptpError):
    """Arity clash or function symbol in a problem file."""
    pass


class ProblemStructureError(TptpError):
    """Missing or duplicated conjecture, unknown formula role."""
    pass


class HintSyntaxError(TptpError):
    """Hint clause with a malformed payload."""
    pass


# Logic exceptions
class NormalizationError(ProofKitError):
    """Formula cannot be brought into coherent form."""
    pass


class HintResolutionError(ProofKitError):
    """Hint refers to an unknown axiom or constant."""
    pass


class InstantiationError(ProofKitError):
    """Substitution does not cover every variable of a formula."""
    pass


# Encoder exceptions
class EncodingError(ProofKitError):
    """Problem exceeds encoding limits or carries inconsistent parameters."""
    pass


# Solver exceptions
class SolverError(ProofKitError):
    """Base exception for solver backends."""
    pass


class LoweringError(SolverError):
    """Constraint outside the fragment the one-hot lowering supports."""
    pass


class MalformedInstanceError(SolverError):
    """CNF instance with an empty one-hot group or invalid literal."""
    pass


class SolverOutputError(SolverError):
    """External solver output is neither an assignment nor an UNSAT marker."""
    pass


class ExternalSolverError(SolverError):
    """External solver executable missing or crashed."""
    pass


# Proof exceptions
class ProofCheckError(ProofKitError):
    """A proof produced by the engine was rejected by the checker."""
    pass


class StructuredFormatError(ProofKitError):
    """Structured proof document has the wrong version or shape."""
    pass


# Configuration exceptions
class ConfigError(ProofKitError):
    """Configuration error."""
    pass
