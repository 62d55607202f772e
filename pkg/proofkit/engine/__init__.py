"""Proof search, model decoding, abduct and deduct enumeration."""

from .abducts import AbductSearch, ModelEnumerator, classify_abducts, enumerate_abducts, enumerate_deducts
from .decode import ProofDecoder, filled_goal, reconstruct_proof
from .prover import Prover, prove
from .saturation import Branch, ChainResult, Saturator, check_consistency_bounded, forward_chain, goal_holds
from .search import BoundedSearch, LengthRound

__all__ = [
    "AbductSearch",
    "ModelEnumerator",
    "classify_abducts",
    "enumerate_abducts",
    "enumerate_deducts",
    "ProofDecoder",
    "filled_goal",
    "reconstruct_proof",
    "Prover",
    "prove",
    "Branch",
    "ChainResult",
    "Saturator",
    "check_consistency_bounded",
    "forward_chain",
    "goal_holds",
    "BoundedSearch",
    "LengthRound",
]
