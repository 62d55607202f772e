"""Tests for ProofKit."""
