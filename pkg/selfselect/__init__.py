"""
Selfselect Verifier Package.

Exhaustive verification of binary and universal self-selectivity of
voting rules on truncated universes, with the axiom checkers and
verification campaigns built around it.
"""

__version__ = "0.1.0"
__author__ = "Selfselect Verifier Team"

from selfselect.core.config import get_settings

__all__ = ["__version__", "__author__", "get_settings"]
