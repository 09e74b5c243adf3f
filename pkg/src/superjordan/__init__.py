"""Exact-arithmetic verification of the classification of complex
4-dimensional Jordan superalgebras: identities, orbit dimensions,
degeneration witnesses, and non-degeneration certificates."""

__version__ = "0.1.0"
