"""Commensurizer growth sequences and zeta functions."""

__version__ = "0.1.0"
