"""Exact tools for h*-vectors of lattice simplices and their linear inequalities."""

__version__ = "0.1.0"
