"""Exact lattice computations for Coble surfaces and their Q-Gorenstein degenerations."""

__version__ = "0.1.0"
