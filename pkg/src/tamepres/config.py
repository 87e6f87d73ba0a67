"""Configuration module for tamepres."""

from collections.abc import Mapping
from dataclasses import dataclass, replace

from .constants import (
    DEFAULT_CERT_CAP,
    DEFAULT_COLLECTION_FUEL,
    DEFAULT_MODEL_MODULUS,
    DEFAULT_MODEL_QUOTIENT,
    DEFAULT_REFINE_DEPTH,
    DEFAULT_SUBDIVISION_DEPTH,
    DEFAULT_TAIL_SAMPLES,
)


@dataclass(frozen=True)
class PresenterConfig:
    """Configuration for the presentation pipeline."""

    collection_fuel: int = DEFAULT_COLLECTION_FUEL
    cert_cap: int = DEFAULT_CERT_CAP
    subdivision_depth: int = DEFAULT_SUBDIVISION_DEPTH
    refine_depth: int = DEFAULT_REFINE_DEPTH
    model_modulus: int = DEFAULT_MODEL_MODULUS
    model_quotient: int = DEFAULT_MODEL_QUOTIENT
    tail_samples: int = DEFAULT_TAIL_SAMPLES

    def __post_init__(self) -> None:
        """Validate configuration after initialization."""
        if self.collection_fuel <= 0:
            raise ValueError("Collection fuel must be positive")
        if self.cert_cap <= 0:
            raise ValueError("Certificate cap must be positive")
        if self.subdivision_depth <= 0:
            raise ValueError("Subdivision depth must be positive")
        if self.refine_depth < 0:
            raise ValueError("Refine depth cannot be negative")
        if self.model_modulus < 2:
            raise ValueError("Model modulus must be at least 2")
        if self.model_quotient < 2:
            raise ValueError("Model quotient must be at least 2")
        if self.tail_samples < 0:
            raise ValueError("Tail samples cannot be negative")

    def with_options(self, options: Mapping[str, int | None]) -> "PresenterConfig":
        """
        Return a copy with the given options applied.

        Args:
            options: Field overrides; ``None`` values are ignored

        Returns:
            New PresenterConfig
        """
        overrides = {key: value for key, value in options.items() if value is not None}
        return replace(self, **overrides)
