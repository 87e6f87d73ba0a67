"""Assembly of the finite presentation of Q ⋉ A."""

import itertools
import logging
from collections.abc import Sequence

from ..exceptions import NotTameError
from ..group_ring import RingElement
from ..models.module import ModuleSpec
from ..models.presentation import (
    Presentation,
    PresentationMetadata,
    RelatorOrigin,
    TaggedRelator,
)
from ..models.reports import DiagonalCertificate, RadiusCert, TamenessReport
from ..utils.helpers import lattice_ball
from ..words import Word, commutator, conjugate
from .base import BaseEngine

logger = logging.getLogger(__name__)


def _dedupe(words: list[Word]) -> list[Word]:
    """Drop empty and repeated words, keeping first occurrences."""
    seen: set[Word] = set()
    kept = []
    for word in words:
        if word and word not in seen:
            seen.add(word)
            kept.append(word)
    return kept


class PresenterEngine(BaseEngine):
    """Engine building the four relator families."""

    # === Conjugator sets ===

    def build_vi(self, p0: int, layer: int) -> list[Word]:
        """
        Ordered words of layer ``layer`` with exponent vector in the ball of radius² p0.

        Args:
            p0: Squared radius, nonnegative
            layer: Layer index

        Returns:
            Words in lexicographic order of their exponent vectors

        Raises:
            ValueError: If p0 is negative
        """
        if p0 < 0:
            raise ValueError("p0 must be nonnegative")
        names = self._group.spec.layers[layer - 1]
        return [
            Word.reduce(zip(names, exponents))
            for exponents in lattice_ball(len(names), p0)
        ]

    def build_w(self, vs: Sequence[Sequence[Word]]) -> list[Word]:
        """All products v_1 v_2 ... v_k, lexicographic product order."""
        return [
            Word.reduce(letter for word in choice for letter in word)
            for choice in itertools.product(*vs)
        ]

    # === Relator families ===

    def relators_k0(self, generators: Sequence[str], w: Sequence[Word]) -> list[Word]:
        """
        Commutators ``[a, b^w]`` for module generators a, b and conjugators w.

        Empty and repeated words are dropped.
        """
        words = [
            commutator(Word.symbol(a), conjugate(Word.symbol(b), conjugator))
            for conjugator in w
            for a in generators
            for b in generators
        ]
        return _dedupe(words)

    def _module_product(self, generator: str, element: RingElement) -> Word:
        """∏ u⁻¹ a^c u over the terms c·π(u) in canonical order."""
        letters = []
        for g, coefficient in element.sorted_terms():
            power = Word.symbol(generator, coefficient)
            letters.extend(conjugate(power, self._group.ordered_word(g)))
        return Word.reduce(letters)

    def relators_c(self, certificates: Sequence[DiagonalCertificate]) -> list[Word]:
        """
        Relators ``a⁻¹ · ∏ u⁻¹ a^{λ(u)} u`` mimicking a = a·λ.

        One per module generator and certificate, in the given certificate order.
        """
        relators = []
        for certificate in certificates:
            for expression in certificate.expressions:
                a = expression.generator
                relators.append(Word.symbol(a, -1) * self._module_product(a, expression.lam))
        return relators

    def relators_ra(self, module: ModuleSpec) -> list[Word]:
        """Lifts ``∏ w_q⁻¹ a^{c_q} w_q`` of the global relators; empty ones dropped."""
        words = [self._module_product(r.generator, r.element) for r in module.relators]
        return [word for word in words if word]

    # === Assembly ===

    def assemble(
        self,
        module: ModuleSpec,
        report: TamenessReport,
        radii: Sequence[RadiusCert],
    ) -> Presentation:
        """
        Assemble ⟨𝒜 ∪ 𝒳 | ℛ_A ∪ 𝒦₀ ∪ 𝒞 ∪ ℛ_Q⟩.

        Args:
            module: Module spec
            report: Certified-tame report
            radii: One RadiusCert per layer, computed from the report

        Returns:
            Presentation with metadata

        Raises:
            NotTameError: If the report verdict is negative
        """
        if not report.is_tame:
            raise NotTameError("Module is not certified tame; no presentation")
        if len(radii) != self._group.k:
            raise ValueError(f"Expected {self._group.k} radius certificates, got {len(radii)}")

        p0s = tuple(cert.p0 for cert in radii)
        vs = [self.build_vi(cert.p0, cert.layer) for cert in radii]
        w = self.build_w(vs)
        certificates = [c for layer in report.layers for c in layer.certificates]

        families = {
            RelatorOrigin.RA: self.relators_ra(module),
            RelatorOrigin.K0: self.relators_k0(module.generators, w),
            RelatorOrigin.C: self.relators_c(certificates),
            RelatorOrigin.RQ: self._group.relators(),
        }
        relators = tuple(
            TaggedRelator(origin=origin, word=word)
            for origin in RelatorOrigin
            for word in families[origin]
            if word
        )

        ell = tuple(len(layer.certificates) for layer in report.layers)
        count = len(module.generators)
        metadata = PresentationMetadata(
            p0=p0s,
            v_sizes=tuple(len(v) for v in vs),
            w_size=len(w),
            k0_formal=count * count * len(w),
            c_formal=count * sum(ell),
            ell=ell,
            certificates=tuple(
                f"layer {c.layer} #{c.index}: {c.describe(self._ring)}" for c in certificates
            ),
        )
        presentation = Presentation(
            generators=(*module.generators, *self._group.generators),
            relators=relators,
            metadata=metadata,
        )
        logger.info(
            "presentation: %s",
            ", ".join(f"{o.value}={n}" for o, n in presentation.counts().items()),
        )
        return presentation
