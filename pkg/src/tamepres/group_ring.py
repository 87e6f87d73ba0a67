"""Exact arithmetic in the integral group ring ℤQ and the naive valuation."""

import logging
import math
from collections.abc import Iterator, Mapping
from fractions import Fraction
from types import MappingProxyType

from .geometry import LayerCharacter
from .nilpotent import GroupElement, NilpotentGroup

logger = logging.getLogger(__name__)


class RingElement:
    """
    Finite-support map from group elements to nonzero integers.

    Immutable; zero coefficients are never stored, so the zero element has an
    empty term map and equality is equality of term maps.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[GroupElement, int] | None = None):
        cleaned: dict[GroupElement, int] = {}
        for g, coefficient in (terms or {}).items():
            if coefficient:
                cleaned[g] = int(coefficient)
        self._terms = cleaned
        self._hash: int | None = None

    @property
    def terms(self) -> Mapping[GroupElement, int]:
        """Read-only view of the term map."""
        return MappingProxyType(self._terms)

    def support(self) -> frozenset[GroupElement]:
        """Group elements with nonzero coefficient."""
        return frozenset(self._terms)

    def coefficient(self, g: GroupElement) -> int:
        """Coefficient at ``g`` (0 outside the support)."""
        return self._terms.get(g, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def sorted_terms(self) -> list[tuple[GroupElement, int]]:
        """Terms ordered lexicographically by the letters of their ordered words."""
        return sorted(self._terms.items(), key=lambda item: item[0].word_key())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "RingElement") -> "RingElement":
        terms = dict(self._terms)
        for g, coefficient in other._terms.items():
            terms[g] = terms.get(g, 0) + coefficient
        return RingElement(terms)

    def __neg__(self) -> "RingElement":
        return RingElement({g: -c for g, c in self._terms.items()})

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def __repr__(self) -> str:
        body = ", ".join(f"{g.exponents}: {c}" for g, c in self.sorted_terms())
        return f"RingElement({{{body}}})"


class GroupRing:
    """
    The integral group ring of a nilpotent group.

    Example:
        >>> ring = GroupRing(group)
        >>> x, y = ring.monomial(group.generator("x")), ring.monomial(group.generator("y"))
        >>> ring.render(ring.one + x - y)
        '1 + x - y'
    """

    def __init__(self, group: NilpotentGroup):
        self.group = group

    @property
    def zero(self) -> RingElement:
        return RingElement()

    @property
    def one(self) -> RingElement:
        return RingElement({self.group.identity: 1})

    def monomial(self, g: GroupElement, coefficient: int = 1) -> RingElement:
        """``coefficient · g``."""
        return RingElement({g: coefficient})

    def element(self, terms: Mapping[GroupElement, int]) -> RingElement:
        """Element with the given terms; zero coefficients are dropped."""
        return RingElement(terms)

    def add(self, left: RingElement, right: RingElement) -> RingElement:
        return left + right

    def negate(self, value: RingElement) -> RingElement:
        return -value

    def scale(self, value: RingElement, factor: int) -> RingElement:
        """Integer multiple."""
        return RingElement({g: factor * c for g, c in value.terms.items()})

    def mul(self, left: RingElement, right: RingElement) -> RingElement:
        """
        Convolution product.

        Args:
            left: Left factor
            right: Right factor

        Returns:
            ``left · right`` with supports multiplied in Q
        """
        terms: dict[GroupElement, int] = {}
        for g, a in left.terms.items():
            for h, b in right.terms.items():
                product = self.group.multiply(g, h)
                terms[product] = terms.get(product, 0) + a * b
        return RingElement(terms)

    def scale_right(self, value: RingElement, q: GroupElement) -> RingElement:
        """Right translate ``value · q``."""
        return RingElement({self.group.multiply(g, q): c for g, c in value.terms.items()})

    def scale_left(self, q: GroupElement, value: RingElement) -> RingElement:
        """Left translate ``q · value``."""
        return RingElement({self.group.multiply(q, g): c for g, c in value.terms.items()})

    def v_chi(self, value: RingElement, chi: LayerCharacter) -> Fraction | float:
        """
        Naive valuation: minimum of χ over the support.

        Args:
            value: Ring element supported in Q_i for i = ``chi.layer``
            chi: Layer character

        Returns:
            Exact minimum, or ``math.inf`` for the zero element

        Raises:
            NotInLayerError: If some support element lies outside Q_i
        """
        if value.is_zero():
            return math.inf
        return min(chi.pair(self.group.theta(g, chi.layer)) for g in value)

    def render(self, value: RingElement) -> str:
        """
        Text form such as ``1 + x1 - y1`` or ``2*z^-1``.

        Terms appear in canonical order; unit coefficients are omitted on
        non-identity monomials.
        """
        if value.is_zero():
            return "0"
        parts: list[str] = []
        for g, coefficient in value.sorted_terms():
            monomial = self.group.render(g)
            size = abs(coefficient)
            if monomial == "1":
                body = str(size)
            elif size == 1:
                body = monomial
            else:
                body = f"{size}*{monomial}"
            if not parts:
                parts.append(f"-{body}" if coefficient < 0 else body)
            else:
                parts.append(f"- {body}" if coefficient < 0 else f"+ {body}")
        return " ".join(parts)
