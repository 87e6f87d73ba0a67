"""Helper functions for tamepres."""

import itertools
import math
from collections.abc import Iterator
from fractions import Fraction

from ..constants import SQRT_PRECISION


def format_fraction(value: Fraction | int | float) -> str:
    """
    Format an exact rational as ``p/q`` (or ``p`` when integral).

    Args:
        value: Rational value; ``math.inf`` renders as ``inf``

    Returns:
        Formatted string
    """
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        value = Fraction(value)
    return str(Fraction(value))


def sqrt_upper(value: Fraction | int, precision: int = SQRT_PRECISION) -> Fraction:
    """
    Rational upper bound for a square root.

    Exact when ``value`` is the square of a rational.

    Args:
        value: Nonnegative rational
        precision: Denominator scale of the bound

    Returns:
        Rational ``r`` with ``r >= sqrt(value)``

    Raises:
        ValueError: If value is negative
    """
    value = Fraction(value)
    if value < 0:
        raise ValueError("Square root of a negative value")
    a, b = value.numerator, value.denominator
    root_a, root_b = math.isqrt(a), math.isqrt(b)
    if root_a * root_a == a and root_b * root_b == b:
        return Fraction(root_a, root_b)
    # sqrt(a/b) = sqrt(ab)/b
    return Fraction(math.isqrt(a * b * precision * precision) + 1, b * precision)


def iter_lattice_ball(dimension: int, radius_sq: int) -> Iterator[tuple[int, ...]]:
    """Integer vectors with squared norm at most ``radius_sq``, lexicographic order."""
    bound = math.isqrt(max(radius_sq, 0))
    for point in itertools.product(range(-bound, bound + 1), repeat=dimension):
        if sum(coordinate * coordinate for coordinate in point) <= radius_sq:
            yield point


def lattice_ball(dimension: int, radius_sq: int) -> list[tuple[int, ...]]:
    """
    List the integer points of a closed ball around the origin.

    Args:
        dimension: Ambient dimension
        radius_sq: Squared radius; negative gives an empty list

    Returns:
        Points in lexicographic order of their coordinates

    Example:
        >>> lattice_ball(2, 1)
        [(-1, 0), (0, -1), (0, 0), (0, 1), (1, 0)]
    """
    if radius_sq < 0:
        return []
    return list(iter_lattice_ball(dimension, radius_sq))
