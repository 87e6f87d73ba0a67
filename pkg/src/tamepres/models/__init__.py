"""Pydantic models for tamepres."""

from .base import (
    TameBaseModel,
)
from .group import GroupSpec

__all__ = [
    "TameBaseModel",
    "GroupSpec",
]
