"""Tests for report builder module."""
