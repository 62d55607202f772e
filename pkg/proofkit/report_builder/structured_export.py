"""
Structured proof documents.

The proof schema's fields plus `format` and `version` at the top level,
serialized as JSON for other tools. Prover runs may add their outcome,
filled goal, abduct verdicts and deducts. The layout is described in
docs/structured_proof_format.md.
"""

import json
from typing import List, Literal, Optional, Union

from pydantic import BaseModel, Field, ValidationError

from proofkit.schemas.proof import Proof, ProofGoal
from proofkit.schemas.prover import AbductVerdict, Outcome, ProverResult
from proofkit.utils.exceptions import StructuredFormatError


FORMAT_NAME = "proofkit-proof"
FORMAT_VERSION = 1


class AbductEntry(BaseModel):
    """An abduct tuple with its verdict (proof omitted)."""
    abducts: List[str]
    verdict: AbductVerdict


class StructuredProofDocument(Proof):
    """Document written by `render_structured`."""
    format: Literal["proofkit-proof"] = FORMAT_NAME
    version: int = FORMAT_VERSION
    outcome: Optional[Outcome] = None
    filled_goal: Optional[ProofGoal] = None
    abduct_verdicts: List[AbductEntry] = Field(default_factory=list)
    deducts: List[ProofGoal] = Field(default_factory=list)

    def proof(self) -> Proof:
        return Proof.model_validate(
            self.model_dump(by_alias=True, include=set(Proof.model_fields))
        )


def render_structured(
    source: Union[Proof, ProverResult],
    indent: Optional[int] = 2,
) -> str:
    """
    Serialize a proof, or a prover result that carries one, to JSON.

    Raises:
        StructuredFormatError: If a result has no proof to serialize
    """
    extra = {}
    if isinstance(source, ProverResult):
        if source.proof is None:
            raise StructuredFormatError(f"no proof to serialize ({source.outcome.value})")
        extra = {
            "outcome": source.outcome,
            "filled_goal": source.filled_goal,
            "abduct_verdicts": [
                AbductEntry(abducts=[str(f) for f in finding.abducts], verdict=finding.verdict)
                for finding in source.abducts
            ],
            "deducts": [d.goal for d in source.deducts],
        }
        source = source.proof
    document = StructuredProofDocument(**source.model_dump(by_alias=True), **extra)
    return document.model_dump_json(by_alias=True, indent=indent, exclude_none=True) + "\n"


def parse_document(text: Union[str, bytes]) -> StructuredProofDocument:
    """
    Read a structured proof document.

    Raises:
        StructuredFormatError: On bad JSON, an unknown format or version,
            or fields that do not match the schema
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise StructuredFormatError(f"not JSON: {e}") from e
    if not isinstance(raw, dict):
        raise StructuredFormatError("document must be a JSON object")
    if raw.get("format") != FORMAT_NAME:
        raise StructuredFormatError(f"unknown format {raw.get('format')!r}")
    if raw.get("version") != FORMAT_VERSION:
        raise StructuredFormatError(
            f"unsupported version {raw.get('version')!r} (expected {FORMAT_VERSION})"
        )
    try:
        return StructuredProofDocument.model_validate(raw)
    except ValidationError as e:
        raise StructuredFormatError(f"schema mismatch ({e.error_count()} errors): {e}") from e


def parse_structured(text: Union[str, bytes]) -> Proof:
    """Proof carried by a structured document; see `parse_document`."""
    return parse_document(text).proof()
