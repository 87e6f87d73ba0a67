"""Self-expressions, certificate-based Σ⁰ membership and the tameness verdict."""

import itertools
import logging
from collections.abc import Sequence

from ..exceptions import MissingGeneratorError, ZeroAnnihilatorError
from ..geometry import LatticeSet, LayerCharacter, antipodal_cover
from ..group_ring import RingElement
from ..models.module import ModuleSpec
from ..models.reports import (
    DiagonalCertificate,
    LayerReport,
    SelfExpression,
    TamenessReport,
)
from .base import BaseEngine

logger = logging.getLogger(__name__)


class TamenessEngine(BaseEngine):
    """Engine deciding tameness from layer annihilators."""

    # === Self-expressions ===

    def derive_self_expressions(
        self,
        generator: str,
        layer: int,
        annihilator: RingElement,
        source: int = 0,
    ) -> list[SelfExpression]:
        """
        Rewrite ``a · μ = 0`` as ``a = a · λ`` at every unit-coefficient pivot.

        For a pivot q₀ with coefficient ε = ±1 the result is
        ``λ = −ε · (μ − ε q₀) · q₀⁻¹``. Pivots that would give λ = 0 (μ a single
        monomial) are skipped.

        Args:
            generator: Module generator a
            layer: Layer i of the annihilator
            annihilator: μ, supported in Q_i
            source: Position of μ in the module's annihilator list

        Returns:
            Self-expressions in canonical pivot order

        Raises:
            ZeroAnnihilatorError: If μ is zero

        Example:
            >>> engine.derive_self_expressions("a", 1, one + x - y)  # pivots 1, x, y
        """
        if annihilator.is_zero():
            raise ZeroAnnihilatorError(f"Zero annihilator for {generator!r}")

        expressions = []
        for pivot, coefficient in annihilator.sorted_terms():
            if abs(coefficient) != 1:
                continue
            rest = annihilator - self._ring.monomial(pivot, coefficient)
            if rest.is_zero():
                continue
            shifted = self._ring.scale_right(rest, self._group.inverse(pivot))
            lam = self._ring.scale(shifted, -coefficient)
            expressions.append(
                SelfExpression(
                    generator=generator,
                    layer=layer,
                    lam=lam,
                    pivot=pivot,
                    pivot_sign=coefficient,
                    annihilator=annihilator,
                    source=source,
                )
            )
        if not expressions:
            logger.warning(
                "annihilator %s of %s has no unit pivot", self._ring.render(annihilator), generator
            )
        return expressions

    def layer_expressions(
        self, module: ModuleSpec, layer: int
    ) -> tuple[list[SelfExpression], list[RingElement]]:
        """Self-expressions from the layer's annihilators, and the annihilators giving none."""
        expressions: list[SelfExpression] = []
        skipped: list[RingElement] = []
        for source, ann in enumerate(module.annihilators):
            if ann.layer != layer:
                continue
            derived = self.derive_self_expressions(ann.generator, layer, ann.element, source)
            if derived:
                expressions.extend(derived)
            else:
                skipped.append(ann.element)
        return expressions, skipped

    # === Σ⁰ membership ===

    def sigma0_member(
        self,
        chi: LayerCharacter,
        certificates: Sequence[SelfExpression],
        generators: Sequence[str],
    ) -> bool:
        """
        Sufficient test for [χ] ∈ Σ⁰.

        Args:
            chi: Layer character
            certificates: Self-expressions, any number per generator
            generators: Module generators 𝒜

        Returns:
            True iff every generator has a certificate λ with v_χ(λ) > 0

        Raises:
            MissingGeneratorError: If some generator has no certificate
        """
        for generator in generators:
            own = [c for c in certificates if c.generator == generator]
            if not own:
                raise MissingGeneratorError(generator)
            if not any(self._ring.v_chi(c.lam, chi) > 0 for c in own):
                return False
        return True

    # === Verdict ===

    def _lattice_set(
        self, layer: int, expressions: Sequence[SelfExpression], label: str
    ) -> LatticeSet:
        support = [g for expression in expressions for g in expression.lam]
        return LatticeSet(tuple(self._theta_points(layer, support)), label)

    def _preference(self, expression: SelfExpression) -> tuple[int, list]:
        return (len(expression.lam), sorted(g.word_key() for g in expression.lam))

    def check_layer(self, module: ModuleSpec, layer: int) -> LayerReport:
        """
        Decide the antipodal cover for one layer sphere.

        Diagonal certificates pick one self-expression per generator, smaller
        supports first, up to ``cert_cap``. When the cones cover, certificates are
        dropped last to first while the cover survives.
        """
        rank = self._group.spec.ranks[layer - 1]
        expressions, skipped = self.layer_expressions(module, layer)
        per_generator = {
            generator: sorted(
                (e for e in expressions if e.generator == generator), key=self._preference
            )
            for generator in module.generators
        }
        missing = tuple(g for g, own in per_generator.items() if not own)
        if missing:
            logger.info("layer %d: no certificates for %s", layer, ", ".join(missing))
            return LayerReport(
                layer=layer,
                rank=rank,
                expressions=tuple(expressions),
                skipped=tuple(skipped),
                missing=missing,
                cover=antipodal_cover([], rank),
            )

        cap = self._config.cert_cap
        choices = list(
            itertools.islice(
                itertools.product(*(per_generator[g] for g in module.generators)), cap + 1
            )
        )
        truncated = len(choices) > cap
        if truncated:
            logger.warning("layer %d: diagonal certificates capped at %d", layer, cap)
            choices = choices[:cap]

        candidates = [
            (choice, self._lattice_set(layer, choice, f"layer {layer} candidate {j}"))
            for j, choice in enumerate(choices, start=1)
        ]
        cover = antipodal_cover([lattice_set for _, lattice_set in candidates], rank)
        selected = candidates
        if cover.covered:
            for position in reversed(range(len(candidates))):
                trial = [c for c in selected if c is not candidates[position]]
                if trial and antipodal_cover([s for _, s in trial], rank).covered:
                    selected = trial
            logger.debug("layer %d: pruned %d -> %d", layer, len(candidates), len(selected))

        certificates = tuple(
            DiagonalCertificate(
                layer=layer,
                index=j,
                expressions=tuple(choice),
                lattice_set=LatticeSet(lattice_set.points, f"layer {layer} certificate {j}"),
            )
            for j, (choice, lattice_set) in enumerate(selected, start=1)
        )
        logger.info("layer %d: %s with %d certificates", layer, cover.render(), len(certificates))
        return LayerReport(
            layer=layer,
            rank=rank,
            expressions=tuple(expressions),
            skipped=tuple(skipped),
            candidates=len(candidates),
            truncated=truncated,
            cover=cover,
            certificates=certificates,
        )

    def check_tame(self, module: ModuleSpec) -> TamenessReport:
        """
        Check that a module is tame with respect to the group's central series.

        Args:
            module: Module spec validated against the group

        Returns:
            TamenessReport; the verdict is certified tame iff every layer is covered
        """
        module.validate_against(self._group)
        layers = tuple(self.check_layer(module, layer) for layer in range(1, self._group.k + 1))
        report = TamenessReport(layers=layers)
        logger.info("tameness verdict: %s", "tame" if report.is_tame else "not certified")
        return report
