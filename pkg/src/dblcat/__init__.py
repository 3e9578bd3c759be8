"""Finite double categories: spans, relations, matrices and profunctors over
finite sets, with enumerative checkers for their laws and universal
properties."""

__version__ = "0.1.0"
