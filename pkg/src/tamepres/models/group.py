"""Model for polycyclic group specifications."""

import re
from typing import Any

from pydantic import Field, field_validator, model_validator

from .base import TameBaseModel

_IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class GroupSpec(TameBaseModel):
    """
    Polycyclic presentation of Q along a central series with free-abelian factors.

    ``layers[i-1]`` lists the generator names of the i-th factor Q_i/Q_{i+1}.
    ``tails[(a, b)]`` for generator indices ``a < b`` is the exponent vector of
    τ(t_a, t_b), defined by ``t_b t_a = t_a t_b τ(t_a, t_b)``. Missing pairs commute.
    """

    layers: tuple[tuple[str, ...], ...]
    tails: dict[tuple[int, int], tuple[int, ...]] = Field(default_factory=dict)

    @field_validator("layers")
    @classmethod
    def _check_layers(cls, layers: tuple[tuple[str, ...], ...]) -> tuple[tuple[str, ...], ...]:
        if not layers:
            raise ValueError("At least one layer is required")
        seen: set[str] = set()
        for position, names in enumerate(layers, start=1):
            if not names:
                raise ValueError(f"Layer {position} has rank 0")
            for name in names:
                if not _IDENTIFIER.match(name):
                    raise ValueError(f"Invalid generator name {name!r}")
                if name in seen:
                    raise ValueError(f"Duplicate generator name {name!r}")
                seen.add(name)
        return layers

    @model_validator(mode="before")
    @classmethod
    def _drop_trivial_tails(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("tails"):
            data = dict(data)
            data["tails"] = {
                key: tuple(vector) for key, vector in data["tails"].items() if any(vector)
            }
        return data

    @model_validator(mode="after")
    def _check_tails(self) -> "GroupSpec":
        count = self.generator_count
        layer_of = self.layer_of_index
        for (a, b), vector in self.tails.items():
            if not 0 <= a < b < count:
                raise ValueError(f"Tail key {(a, b)} is not an ordered generator pair")
            if len(vector) != count:
                raise ValueError(f"Tail {(a, b)} has length {len(vector)}, expected {count}")
            floor = max(layer_of[a], layer_of[b])
            for index, exponent in enumerate(vector):
                if exponent and layer_of[index] <= floor:
                    raise ValueError(
                        f"Tail of ({self.generators[a]}, {self.generators[b]}) "
                        f"must lie strictly below layer {floor}"
                    )
        return self

    @property
    def k(self) -> int:
        """Number of central-series layers."""
        return len(self.layers)

    @property
    def ranks(self) -> tuple[int, ...]:
        """Ranks n_1..n_k of the layer factors."""
        return tuple(len(names) for names in self.layers)

    @property
    def generators(self) -> tuple[str, ...]:
        """All generator names, layer 1 first."""
        return tuple(name for names in self.layers for name in names)

    @property
    def generator_count(self) -> int:
        """Total number N of polycyclic generators."""
        return sum(self.ranks)

    @property
    def layer_of_index(self) -> tuple[int, ...]:
        """1-based layer of each generator index."""
        return tuple(
            position for position, names in enumerate(self.layers, start=1) for _ in names
        )

    def layer_slice(self, layer: int) -> slice:
        """Index range of the generators of ``layer``."""
        start = sum(self.ranks[: layer - 1])
        return slice(start, start + self.ranks[layer - 1])

    def tail(self, a: int, b: int) -> tuple[int, ...]:
        """Exponent vector of τ(t_a, t_b); zero when the pair commutes."""
        return self.tails.get((a, b), (0,) * self.generator_count)
