"""Engines of the presentation pipeline."""

from .base import BaseEngine
from .presenter import PresenterEngine
from .radius import RadiusEngine
from .tameness import TamenessEngine
from .verifier import FiniteModel, VerifierEngine

__all__ = [
    "BaseEngine",
    "TamenessEngine",
    "RadiusEngine",
    "PresenterEngine",
    "VerifierEngine",
    "FiniteModel",
]
