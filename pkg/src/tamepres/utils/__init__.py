"""Utility functions for tamepres."""

from .helpers import format_fraction, lattice_ball, sqrt_upper

__all__ = [
    "format_fraction",
    "lattice_ball",
    "sqrt_upper",
]
