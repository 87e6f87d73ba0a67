"""Base models for tamepres."""

from fractions import Fraction

from pydantic import BaseModel, ConfigDict

from ..utils.helpers import format_fraction


class TameBaseModel(BaseModel):
    """Base model for all tamepres records."""

    model_config = ConfigDict(
        frozen=True,
        arbitrary_types_allowed=True,
        str_strip_whitespace=True,
    )


def format_vector(vector: tuple[Fraction, ...] | tuple[int, ...]) -> str:
    """Render ``(p/q, ...)`` with exact rationals."""
    return "(" + ", ".join(format_fraction(component) for component in vector) + ")"
