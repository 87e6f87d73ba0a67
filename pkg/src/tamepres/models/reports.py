"""Report models produced by the tameness, radius and verification engines."""

from fractions import Fraction

from pydantic import Field, InstanceOf, field_validator

from ..exceptions import RelatorFailsError
from ..geometry import CoverResult, LatticeSet
from ..group_ring import GroupRing, RingElement
from ..nilpotent import GroupElement
from ..utils.helpers import format_fraction
from .base import TameBaseModel, format_vector
from .presentation import RelatorOrigin


class SelfExpression(TameBaseModel):
    """
    Certified identity ``a = a · λ`` with λ in ℤQ_layer.

    Obtained from the annihilator μ by pivoting at ``pivot`` with unit
    coefficient ``pivot_sign``; the stored data satisfy
    ``(1 − λ) · pivot = pivot_sign · μ``.
    """

    generator: str
    layer: int = Field(ge=1)
    lam: RingElement
    pivot: InstanceOf[GroupElement]
    pivot_sign: int
    annihilator: RingElement
    source: int = Field(ge=0)

    @field_validator("pivot_sign")
    @classmethod
    def _check_sign(cls, value: int) -> int:
        if value not in (1, -1):
            raise ValueError("Pivot coefficient must be +1 or -1")
        return value

    def describe(self, ring: GroupRing) -> str:
        """One-line text: generator, pivot and λ."""
        return (
            f"{self.generator} = {self.generator}*({ring.render(self.lam)}) "
            f"[pivot {ring.group.render(self.pivot)}]"
        )


class DiagonalCertificate(TameBaseModel):
    """One self-expression per module generator, and the union of their ϑ_i-supports."""

    layer: int
    index: int
    expressions: tuple[SelfExpression, ...]
    lattice_set: InstanceOf[LatticeSet]

    def expression_for(self, generator: str) -> SelfExpression:
        """The self-expression chosen for ``generator``."""
        for expression in self.expressions:
            if expression.generator == generator:
                return expression
        raise KeyError(generator)

    def describe(self, ring: GroupRing) -> str:
        """``a=λ_a, b=λ_b L={...}``"""
        chosen = ", ".join(f"{e.generator}={ring.render(e.lam)}" for e in self.expressions)
        return f"{chosen} L={self.lattice_set.render()}"


class LayerReport(TameBaseModel):
    """Tameness evidence for one layer sphere."""

    layer: int
    rank: int
    expressions: tuple[SelfExpression, ...] = ()
    skipped: tuple[RingElement, ...] = ()
    missing: tuple[str, ...] = ()
    candidates: int = 0
    truncated: bool = False
    cover: InstanceOf[CoverResult]
    certificates: tuple[DiagonalCertificate, ...] = ()

    @property
    def covered(self) -> bool:
        return self.cover.covered

    @property
    def family(self) -> list[LatticeSet]:
        """Lattice sets of the selected certificates."""
        return [certificate.lattice_set for certificate in self.certificates]


class TamenessReport(TameBaseModel):
    """Per-layer evidence and the overall verdict."""

    layers: tuple[LayerReport, ...]

    @property
    def is_tame(self) -> bool:
        """True iff every layer sphere is covered."""
        return all(layer.covered for layer in self.layers)

    def layer(self, index: int) -> LayerReport:
        """Report of layer ``index`` (1-based)."""
        return self.layers[index - 1]

    def render(self, ring: GroupRing) -> str:
        """
        Structured text report with a stable field order.

        Args:
            ring: Group ring used to render ring elements

        Returns:
            Report text ending with a newline
        """
        lines = []
        for layer in self.layers:
            lines.append(f"layer {layer.layer} rank {layer.rank}")
            for expression in layer.expressions:
                lines.append(f"  expression {expression.describe(ring)}")
            for element in layer.skipped:
                lines.append(f"  skipped {ring.render(element)} (no unit coefficient)")
            for generator in layer.missing:
                lines.append(f"  missing {generator}")
            capped = " (capped)" if layer.truncated else ""
            lines.append(f"  candidates {layer.candidates}{capped}")
            lines.append(f"  cover {layer.cover.render()}")
            if layer.covered:
                for certificate in layer.certificates:
                    lines.append(f"  certificate {certificate.index}: {certificate.describe(ring)}")
        lines.append("verdict " + ("certified tame" if self.is_tame else "not certified"))
        return "\n".join(lines) + "\n"


class RadiusCert(TameBaseModel):
    """
    Certificate for the radius constant p0 of one layer.

    Every lattice x with ``p0 < |x|^2 <= scan_radius_sq`` moves strictly inward
    under some set of ``family``; beyond ``tail_bound`` the margin bound applies.
    """

    layer: int
    p0: int = Field(ge=0)
    margin: Fraction
    tail_bound: Fraction
    max_norm_sq: int
    scan_radius_sq: int
    bad_points: tuple[tuple[int, ...], ...]
    family: tuple[InstanceOf[LatticeSet], ...]

    @field_validator("margin")
    @classmethod
    def _check_margin(cls, value: Fraction) -> Fraction:
        if value <= 0:
            raise ValueError("Positivity margin must be positive")
        return value

    def render(self) -> str:
        """Audit text for the certificate."""
        lines = [
            f"radius layer {self.layer}",
            f"  p0 {self.p0}",
            f"  margin {format_fraction(self.margin)}",
            f"  max_norm_sq {self.max_norm_sq}",
            f"  tail_bound {format_fraction(self.tail_bound)}",
            f"  scan_radius_sq {self.scan_radius_sq}",
            f"  family {len(self.family)}",
        ]
        lines.extend(f"  set {lattice_set.render()}" for lattice_set in self.family)
        lines.extend(f"  bad {format_vector(point)}" for point in self.bad_points)
        return "\n".join(lines) + "\n"


class RelatorFailure(TameBaseModel):
    """A relator that does not evaluate to the identity in a finite model."""

    origin: RelatorOrigin
    position: int
    relator: str
    group_residue: tuple[int, ...]
    module_residue: tuple[int, ...]

    def render(self) -> str:
        return (
            f"FAIL {self.origin.value} #{self.position}: {self.relator} "
            f"group {format_vector(self.group_residue)} "
            f"module {format_vector(self.module_residue)}"
        )


class VerificationReport(TameBaseModel):
    """Outcome of evaluating a presentation in a finite model."""

    modulus: int
    quotient: int
    group_order: int
    module_dimension: int
    totals: dict[RelatorOrigin, int]
    failures: tuple[RelatorFailure, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def passes(self, origin: RelatorOrigin) -> int:
        """Number of passing relators of one origin."""
        failed = sum(1 for failure in self.failures if failure.origin == origin)
        return self.totals.get(origin, 0) - failed

    def raise_for_failures(self) -> None:
        """
        Raise on the first failing relator.

        Raises:
            RelatorFailsError: If some relator failed
        """
        if self.failures:
            first = self.failures[0]
            raise RelatorFailsError(
                first.relator, first.origin.value, format_vector(first.module_residue)
            )

    def render(self) -> str:
        """One line per relator family with pass counts, then failures."""
        lines = [
            f"model m={self.modulus} N={self.quotient} "
            f"group_order {self.group_order} module_dim {self.module_dimension}"
        ]
        for origin in RelatorOrigin:
            lines.append(f"{origin.value} {self.passes(origin)}/{self.totals.get(origin, 0)} pass")
        lines.extend(failure.render() for failure in self.failures)
        lines.append("result " + ("pass" if self.passed else "fail"))
        return "\n".join(lines) + "\n"
