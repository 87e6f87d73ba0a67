"""Layer characters, open cones of lattice sets, and the antipodal cover decision."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .exceptions import DimensionMismatchError, InvalidSpecError, ZeroDirectionError
from .lp import nonzero_solution
from .models.base import format_vector

logger = logging.getLogger(__name__)

Point = tuple[int, ...]


def _dot(u: Sequence[Fraction | int], y: Sequence[int]) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(u, y)), Fraction(0))


@dataclass(frozen=True)
class LayerCharacter:
    """
    Character χ = ⟨vector, ϑ_i(·)⟩ on Q_i, vanishing on Q_{i+1}.

    Represents a point of the layer sphere S(Q_i, Q_{i+1}).
    """

    layer: int
    vector: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.layer < 1:
            raise ValueError(f"Layer must be positive, got {self.layer}")
        values = tuple(Fraction(v) for v in self.vector)
        if not any(values):
            raise ZeroDirectionError("Character vector must be nonzero")
        object.__setattr__(self, "vector", values)

    @property
    def dimension(self) -> int:
        """Rank n_i of the layer."""
        return len(self.vector)

    def pair(self, theta: Sequence[int]) -> Fraction:
        """Value ⟨vector, theta⟩."""
        if len(theta) != self.dimension:
            raise DimensionMismatchError(self.dimension, len(theta))
        return _dot(self.vector, theta)

    def __neg__(self) -> "LayerCharacter":
        return LayerCharacter(self.layer, tuple(-v for v in self.vector))


@dataclass(frozen=True)
class LatticeSet:
    """Finite nonempty set of lattice points with the certificate it came from."""

    points: tuple[Point, ...]
    provenance: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        points = tuple(sorted({tuple(int(c) for c in point) for point in self.points}))
        if not points:
            raise InvalidSpecError("Lattice set must be nonempty")
        dimensions = {len(point) for point in points}
        if len(dimensions) != 1:
            raise DimensionMismatchError(len(points[0]), min(dimensions ^ {len(points[0])}))
        object.__setattr__(self, "points", points)

    @property
    def dimension(self) -> int:
        """Ambient dimension."""
        return len(self.points[0])

    def negated(self) -> "LatticeSet":
        """The set −L."""
        label = f"-{self.provenance}" if self.provenance else ""
        return LatticeSet(tuple(tuple(-c for c in p) for p in self.points), label)

    def scaled(self, factor: int) -> "LatticeSet":
        """The set {factor · y}; positive factors leave the cone unchanged."""
        return LatticeSet(tuple(tuple(factor * c for c in p) for p in self.points), self.provenance)

    def max_norm_sq(self) -> int:
        """Largest squared Euclidean norm of a point."""
        return max(sum(c * c for c in point) for point in self.points)

    def render(self) -> str:
        """``{(a, b), ...}``"""
        return "{" + ", ".join(format_vector(point) for point in self.points) + "}"


@dataclass(frozen=True)
class CoverResult:
    """Outcome of an antipodal cover decision."""

    covered: bool
    witness: tuple[Fraction, ...] | None = None

    def render(self) -> str:
        """``covered`` or ``witness: (p/q, ...)``."""
        if self.covered:
            return "covered"
        assert self.witness is not None
        return f"witness: {format_vector(self.witness)}"


def _check_direction(dimension: int, u: Sequence[Fraction | int]) -> None:
    if len(u) != dimension:
        raise DimensionMismatchError(dimension, len(u))
    if not any(u):
        raise ZeroDirectionError("Direction must be nonzero")


def cone_contains(lattice_set: LatticeSet, u: Sequence[Fraction | int]) -> bool:
    """
    Test membership of ``u`` in the open cone O_L.

    Args:
        lattice_set: The set L
        u: Nonzero rational direction

    Returns:
        True iff ⟨u, y⟩ > 0 for every y in L

    Raises:
        DimensionMismatchError: If dimensions differ
        ZeroDirectionError: If u is zero
    """
    _check_direction(lattice_set.dimension, u)
    return all(_dot(u, y) > 0 for y in lattice_set.points)


def close_under_negation(family: Sequence[LatticeSet]) -> list[LatticeSet]:
    """The family followed by the negations not already present."""
    closed = list(family)
    seen = {lattice_set.points for lattice_set in closed}
    for lattice_set in family:
        negative = lattice_set.negated()
        if negative.points not in seen:
            seen.add(negative.points)
            closed.append(negative)
    return closed


def antipodal_cover(family: Sequence[LatticeSet], dimension: int) -> CoverResult:
    """
    Decide whether the cones O_L and −O_L of a family cover the unit sphere.

    A direction u escapes the cover iff every set of the negation-closed family
    has a point y with ⟨u, y⟩ <= 0. Choices of such points are enumerated depth
    first and each partial choice is tested for a nonzero solution by exact
    elimination; infeasible partial choices are pruned.

    Args:
        family: Lattice sets in ``dimension``
        dimension: Sphere dimension plus one

    Returns:
        CoverResult, with an exact rational witness when not covered

    Raises:
        DimensionMismatchError: If a set has another dimension
    """
    for lattice_set in family:
        if lattice_set.dimension != dimension:
            raise DimensionMismatchError(dimension, lattice_set.dimension)

    closed = close_under_negation(family)
    if not closed:
        witness = tuple(Fraction(int(i == 0)) for i in range(dimension))
        return CoverResult(covered=False, witness=witness)

    zero = (0,) * dimension
    explored = 0

    def search(position: int, chosen: list[Point]) -> tuple[Fraction, ...] | None:
        nonlocal explored
        explored += 1
        if position == len(closed):
            return nonzero_solution(chosen, dimension)
        points = closed[position].points
        if zero in points or any(point in chosen for point in points):
            return search(position + 1, chosen)
        for point in points:
            chosen.append(point)
            if nonzero_solution(chosen, dimension) is not None:
                found = search(position + 1, chosen)
                if found is not None:
                    return found
            chosen.pop()
        return None

    witness = search(0, [])
    logger.debug("cover search over %d sets explored %d nodes", len(closed), explored)
    if witness is None:
        return CoverResult(covered=True)
    return CoverResult(covered=False, witness=witness)
