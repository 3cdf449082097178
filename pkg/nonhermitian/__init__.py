"""Time-dependent Schrodinger solvers for two non-Hermitian model systems."""

__version__ = "0.1.0"
