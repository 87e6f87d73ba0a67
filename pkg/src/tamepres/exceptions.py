"""Exceptions for tamepres."""

from fractions import Fraction
from typing import Any


class TamePresError(Exception):
    """Base exception for tamepres errors."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        self.message = message
        self.details = details
        super().__init__(self.message)

    def __str__(self) -> str:
        if self.details:
            extra = ", ".join(f"{key}={value}" for key, value in self.details.items())
            return f"{self.message} ({extra})"
        return self.message


class InvalidSpecError(TamePresError):
    """Group or module description violates an invariant."""

    pass


class SpecParseError(InvalidSpecError):
    """Spec or presentation text could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line

    def __str__(self) -> str:
        if self.line is not None:
            return f"line {self.line}: {self.message}"
        return self.message


class NonTerminatingCollectionError(TamePresError):
    """Collection exceeded its fuel; the commutator table is malformed."""

    def __init__(self, fuel: int):
        self.fuel = fuel
        super().__init__(f"Collection did not terminate within {fuel} steps")


class NotInLayerError(TamePresError):
    """Group element lies outside the requested layer subgroup."""

    def __init__(self, layer: int, actual: int):
        self.layer = layer
        self.actual = actual
        super().__init__(f"Element lies in layer {actual}, outside Q_{layer}")


class ZeroDirectionError(TamePresError):
    """A direction or character vector is zero."""

    pass


class DimensionMismatchError(TamePresError):
    """Vectors or lattice sets of different dimensions were combined."""

    def __init__(self, expected: int, actual: int):
        self.expected = expected
        self.actual = actual
        super().__init__(f"Dimension mismatch: expected {expected}, got {actual}")


class ZeroAnnihilatorError(TamePresError):
    """A zero ring element was supplied as an annihilator."""

    pass


class MissingGeneratorError(TamePresError):
    """Some module generator has no certificate."""

    def __init__(self, generator: str):
        self.generator = generator
        super().__init__(f"No certificate for generator {generator!r}")


class NotCoveredError(TamePresError):
    """A cone family does not cover the sphere."""

    def __init__(self, witness: tuple[Fraction, ...]):
        self.witness = witness
        rendered = ", ".join(str(c) for c in witness)
        super().__init__(f"Family does not cover the sphere; witness ({rendered})")


class NeedSmallerBoxesError(TamePresError):
    """Margin subdivision reached its depth cap without certifying a box."""

    def __init__(self, depth: int):
        self.depth = depth
        super().__init__(f"Subdivision depth {depth} exhausted")


class NotTameError(TamePresError):
    """The module is not certified tame; no presentation can be assembled."""

    pass


class NonLinearTailsError(TamePresError):
    """Exponent reduction does not define a quotient for this group."""

    pass


class ModelParameterError(TamePresError):
    """Finite-model parameters are invalid."""

    pass


class RelatorFailsError(TamePresError):
    """A relator does not evaluate to the identity in the finite model."""

    def __init__(self, relator: str, origin: str, residue: str):
        self.relator = relator
        self.origin = origin
        self.residue = residue
        super().__init__(f"{origin} relator fails: {relator}", {"residue": residue})
