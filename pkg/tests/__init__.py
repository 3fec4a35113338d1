"""Tests for the Selfselect Verifier."""
