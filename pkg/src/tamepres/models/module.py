"""Models for finitely generated ℤQ-modules given by generators and relations."""

import re

from pydantic import Field, field_validator, model_validator

from ..exceptions import InvalidSpecError, ZeroAnnihilatorError
from ..group_ring import RingElement
from ..nilpotent import NilpotentGroup
from .base import TameBaseModel

_IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class Annihilator(TameBaseModel):
    """Relation ``a · μ = 0`` with μ supported in Q_layer."""

    generator: str
    layer: int = Field(ge=1)
    element: RingElement


class ModuleRelator(TameBaseModel):
    """Global defining relation ``a · μ = 0`` with μ over the whole of Q."""

    generator: str
    element: RingElement


class ModuleSpec(TameBaseModel):
    """
    Module A given by generators 𝒜, layer annihilators and global relators ℛ_A.

    Ring elements refer to a particular group; call :meth:`validate_against`
    before using a spec with a group.
    """

    generators: tuple[str, ...]
    annihilators: tuple[Annihilator, ...] = ()
    relators: tuple[ModuleRelator, ...] = ()

    @field_validator("generators")
    @classmethod
    def _check_generators(cls, generators: tuple[str, ...]) -> tuple[str, ...]:
        if not generators:
            raise ValueError("At least one module generator is required")
        for name in generators:
            if not _IDENTIFIER.match(name):
                raise ValueError(f"Invalid module generator name {name!r}")
        if len(set(generators)) != len(generators):
            raise ValueError("Duplicate module generator names")
        return generators

    @model_validator(mode="after")
    def _check_references(self) -> "ModuleSpec":
        known = set(self.generators)
        for relation in (*self.annihilators, *self.relators):
            if relation.generator not in known:
                raise ValueError(f"Unknown module generator {relation.generator!r}")
        return self

    def annihilators_for(self, layer: int) -> list[Annihilator]:
        """Annihilators tagged with ``layer``, in input order."""
        return [ann for ann in self.annihilators if ann.layer == layer]

    def validate_against(self, group: NilpotentGroup) -> None:
        """
        Check the spec against a group.

        Raises:
            InvalidSpecError: On name clashes, layers beyond k, or annihilators
                supported outside their layer
            ZeroAnnihilatorError: If an annihilator is zero
        """
        clash = set(self.generators) & set(group.generators)
        if clash:
            raise InvalidSpecError(f"Names used for both group and module: {sorted(clash)}")
        for ann in self.annihilators:
            if ann.layer > group.k:
                raise InvalidSpecError(f"Annihilator layer {ann.layer} exceeds k = {group.k}")
            if ann.element.is_zero():
                raise ZeroAnnihilatorError(f"Zero annihilator for {ann.generator!r}")
            for g in ann.element:
                if group.layer_of(g) < ann.layer:
                    raise InvalidSpecError(
                        f"Annihilator of {ann.generator!r} leaves Q_{ann.layer}: "
                        f"{group.render(g)} lies in layer {group.layer_of(g)}"
                    )
