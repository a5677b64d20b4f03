"""Exact toolkit for ass-decomposable monomial ideals."""

__version__ = "0.1.0"
