"""Spectral determinants and trace-identity expansions for one-dimensional
Schrodinger operators with rapidly growing potentials."""

__version__ = "0.1.0"
