"""Proof renderers: readable text and structured JSON."""

from .structured_export import (
    FORMAT_NAME,
    FORMAT_VERSION,
    StructuredProofDocument,
    parse_document,
    parse_structured,
    render_structured,
)
from .text_export import TextRenderer, render_abducts, render_deducts, render_text

__all__ = [
    "FORMAT_NAME",
    "FORMAT_VERSION",
    "StructuredProofDocument",
    "parse_document",
    "parse_structured",
    "render_structured",
    "TextRenderer",
    "render_abducts",
    "render_deducts",
    "render_text",
]
