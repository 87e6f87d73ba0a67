"""Nilpotent groups given by polycyclic presentations along a central series."""

import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

from pydantic import ValidationError

from .constants import DEFAULT_COLLECTION_FUEL
from .exceptions import InvalidSpecError, NonTerminatingCollectionError, NotInLayerError
from .models.group import GroupSpec
from .words import Word

logger = logging.getLogger(__name__)

# (generator index, +1 or -1)
_Step = tuple[int, int]

_IN_PROGRESS = object()


@dataclass(frozen=True, order=True)
class GroupElement:
    """Normal-form exponent vector over the ordered generators, layer 1 first."""

    exponents: tuple[int, ...]

    def is_identity(self) -> bool:
        """True for the identity element."""
        return not any(self.exponents)

    def word_key(self) -> tuple[tuple[int, int], ...]:
        """Letters ``(generator index, exponent)`` of the ordered word; sorts lexicographically."""
        return tuple((index, exponent) for index, exponent in enumerate(self.exponents) if exponent)


def _steps(exponents: Sequence[int]) -> list[_Step]:
    """Unit steps spelling the ordered word of an exponent vector."""
    steps: list[_Step] = []
    for index, exponent in enumerate(exponents):
        if exponent:
            sign = 1 if exponent > 0 else -1
            steps.extend([(index, sign)] * abs(exponent))
    return steps


def _inverse_steps(exponents: Sequence[int]) -> list[_Step]:
    """Unit steps spelling the formal inverse of the ordered word."""
    return [(index, -sign) for index, sign in reversed(_steps(exponents))]


class NilpotentGroup:
    """
    Collection arithmetic in Q.

    Elements are kept in the normal form t_1^{m_1} ... t_N^{m_N}; products are
    computed by collection from the left. Conjugates of generators are memoized,
    so an instance is cheap to reuse across many multiplications.

    Example:
        >>> spec = build_group_spec([["x1", "y1"], ["z"]], {("x1", "y1"): Word.parse("z^1")})
        >>> group = NilpotentGroup(spec)
        >>> group.normalize(Word.parse("y1^1 x1^1")).exponents
        (1, 1, -1)
    """

    def __init__(self, spec: GroupSpec, fuel: int = DEFAULT_COLLECTION_FUEL):
        """
        Initialize the group.

        Args:
            spec: Polycyclic presentation
            fuel: Maximum number of collection steps per product
        """
        self.spec = spec
        self.fuel = fuel
        self._n = spec.generator_count
        self._names = spec.generators
        self._index = {name: position for position, name in enumerate(self._names)}
        self._layer_of = spec.layer_of_index
        self._tails = dict(spec.tails)
        touched = {index for pair in self._tails for index in pair}
        self._central = tuple(index not in touched for index in range(self._n))
        self._conjugates: dict[tuple[int, int, int, int], object] = {}

    # === Elements ===

    @property
    def generators(self) -> tuple[str, ...]:
        """Generator names in collection order."""
        return self._names

    @property
    def k(self) -> int:
        """Number of layers."""
        return self.spec.k

    @property
    def identity(self) -> GroupElement:
        """Identity element."""
        return GroupElement((0,) * self._n)

    def index_of(self, name: str) -> int:
        """Position of a generator name."""
        try:
            return self._index[name]
        except KeyError:
            raise InvalidSpecError(f"Unknown group generator {name!r}") from None

    def generator(self, name: str | int) -> GroupElement:
        """Generator by name or index."""
        index = name if isinstance(name, int) else self.index_of(name)
        exponents = [0] * self._n
        exponents[index] = 1
        return GroupElement(tuple(exponents))

    def element(self, exponents: Sequence[int]) -> GroupElement:
        """
        Element with the given normal-form exponents.

        Raises:
            InvalidSpecError: If the vector has the wrong length
        """
        if len(exponents) != self._n:
            raise InvalidSpecError(f"Expected {self._n} exponents, got {len(exponents)}")
        return GroupElement(tuple(int(e) for e in exponents))

    def ordered_word(self, g: GroupElement) -> Word:
        """Ordered word of ``g`` over the group generators."""
        return Word(tuple((self._names[index], e) for index, e in g.word_key()))

    def render(self, g: GroupElement) -> str:
        """Monomial text such as ``x1^-1*y1``; ``1`` for the identity."""
        if g.is_identity():
            return "1"
        parts = []
        for index, exponent in g.word_key():
            name = self._names[index]
            parts.append(name if exponent == 1 else f"{name}^{exponent}")
        return "*".join(parts)

    # === Collection ===

    def normalize(self, word: Word) -> GroupElement:
        """
        Collect a word over the group generators into normal form.

        Args:
            word: Word using only group generator symbols

        Returns:
            The element represented by ``word``

        Raises:
            InvalidSpecError: If the word uses an unknown symbol
            NonTerminatingCollectionError: If collection exceeds the fuel
        """
        steps: list[_Step] = []
        for symbol, exponent in word:
            index = self.index_of(symbol)
            sign = 1 if exponent > 0 else -1
            steps.extend([(index, sign)] * abs(exponent))
        return GroupElement(self._collect(self.identity.exponents, steps))

    def multiply(self, g: GroupElement, h: GroupElement) -> GroupElement:
        """Product ``g h``."""
        if h.is_identity():
            return g
        return GroupElement(self._collect(g.exponents, _steps(h.exponents)))

    def inverse(self, g: GroupElement) -> GroupElement:
        """Inverse ``g^-1``."""
        return GroupElement(self._collect(self.identity.exponents, _inverse_steps(g.exponents)))

    def power(self, g: GroupElement, exponent: int) -> GroupElement:
        """``g^exponent`` by repeated squaring."""
        base = g if exponent >= 0 else self.inverse(g)
        remaining = abs(exponent)
        result = self.identity
        while remaining:
            if remaining & 1:
                result = self.multiply(result, base)
            base = self.multiply(base, base)
            remaining >>= 1
        return result

    def commutator(self, g: GroupElement, h: GroupElement) -> GroupElement:
        """Commutator ``[g, h] = g^-1 h^-1 g h``."""
        left = self.multiply(self.inverse(g), self.inverse(h))
        return self.multiply(self.multiply(left, g), h)

    def conjugate(self, g: GroupElement, by: GroupElement) -> GroupElement:
        """Conjugate ``by^-1 g by``."""
        return self.multiply(self.multiply(self.inverse(by), g), by)

    def _collect(self, start: Sequence[int], steps: Iterable[_Step]) -> tuple[int, ...]:
        exponents = list(start)
        if not self._tails:
            for index, sign in steps:
                exponents[index] += sign
            return tuple(exponents)

        stack = list(steps)
        stack.reverse()
        budget = self.fuel
        while stack:
            budget -= 1
            if budget < 0:
                raise NonTerminatingCollectionError(self.fuel)
            index, sign = stack.pop()
            moved = [
                position
                for position in range(index + 1, self._n)
                if exponents[position] and not self._central[position]
            ]
            if moved:
                # suffix · t^s = t^s · (t^-s suffix t^s)
                pending: list[_Step] = []
                for position in moved:
                    exponent = exponents[position]
                    exponents[position] = 0
                    letter_sign = 1 if exponent > 0 else -1
                    pending.extend(
                        self._conjugate_steps(position, letter_sign, index, sign) * abs(exponent)
                    )
                stack.extend(reversed(pending))
            exponents[index] += sign
        return tuple(exponents)

    def _conjugate_steps(self, p: int, sigma: int, g: int, s: int) -> list[_Step]:
        """Steps of t_g^-s t_p^sigma t_g^s for ``g < p``."""
        key = (p, sigma, g, s)
        cached = self._conjugates.get(key)
        if cached is _IN_PROGRESS:
            raise NonTerminatingCollectionError(self.fuel)
        if cached is None:
            self._conjugates[key] = _IN_PROGRESS
            try:
                vector = self._conjugate_vector(p, sigma, g, s)
            except BaseException:
                del self._conjugates[key]
                raise
            cached = _steps(vector)
            self._conjugates[key] = cached
            logger.debug("conjugate t%d^%d by t%d^%d -> %s", p, sigma, g, s, vector)
        return cached  # type: ignore[return-value]

    def _conjugate_vector(self, p: int, sigma: int, g: int, s: int) -> tuple[int, ...]:
        unit = [0] * self._n
        unit[p] = 1
        tail = self._tails.get((g, p))
        if tail is None:
            unit[p] = sigma
            return tuple(unit)
        if sigma == -1:
            positive = self._collect(self.identity.exponents, self._conjugate_steps(p, 1, g, s))
            return self._collect(self.identity.exponents, _inverse_steps(positive))
        if s == 1:
            # t_g^-1 t_p t_g = t_p τ(t_g, t_p)
            return tuple(u + t for u, t in zip(unit, tail))
        # t_g t_p t_g^-1 = t_p · t_g τ^-1 t_g^-1
        start = [0] * self._n
        start[g] = 1
        shifted = self._collect(start, _inverse_steps(tail) + [(g, -1)])
        return tuple(u + t for u, t in zip(unit, shifted))

    # === Layers ===

    def layer_of(self, g: GroupElement) -> int:
        """Smallest i with g in Q_i; ``k + 1`` for the identity."""
        for index, exponent in enumerate(g.exponents):
            if exponent:
                return self._layer_of[index]
        return self.k + 1

    def theta(self, g: GroupElement, layer: int) -> tuple[int, ...]:
        """
        Image of g under ϑ_i : Q_i → ℤ^{n_i}.

        Raises:
            NotInLayerError: If g is not in Q_layer
        """
        actual = self.layer_of(g)
        if actual < layer:
            raise NotInLayerError(layer, actual)
        return g.exponents[self.spec.layer_slice(layer)]

    def is_central(self, index: int) -> bool:
        """True if the generator has no nontrivial commutator with any generator."""
        return self._central[index]

    def has_linear_tails(self) -> bool:
        """
        True if every tail is supported on central generators.

        Then the product formula is bilinear in the exponents and reducing all
        exponents modulo N is a homomorphism onto a finite quotient.
        """
        return all(
            self._central[index]
            for vector in self._tails.values()
            for index, exponent in enumerate(vector)
            if exponent
        )

    # === Presentation ===

    def relators(self) -> list[Word]:
        """
        Polycyclic relators ℛ_Q.

        One relator ``t_b^-1 t_a^-1 t_b t_a · τ(t_a, t_b)^-1`` per pair ``a < b``.
        """
        relators = []
        for b in range(self._n):
            for a in range(b):
                t_a, t_b = self._names[a], self._names[b]
                head = Word.reduce([(t_b, -1), (t_a, -1), (t_b, 1), (t_a, 1)])
                tail = self.ordered_word(GroupElement(self.spec.tail(a, b)))
                relators.append(head * tail.inverse())
        return relators


def build_group_spec(
    layers: Sequence[Sequence[str]],
    commutators: Mapping[tuple[str, str], Word],
    fuel: int = DEFAULT_COLLECTION_FUEL,
) -> GroupSpec:
    """
    Build a GroupSpec from commutator relations ``[g, h] = w``.

    Either generator order is accepted. When ``g`` precedes ``h`` the tail is the
    inverse of ``w``, computed by collection in the deeper layers; pairs are
    therefore processed deepest first.

    Args:
        layers: Generator names per layer, layer 1 first
        commutators: Map from generator pairs to the value of their commutator
        fuel: Collection fuel for the inversions

    Returns:
        Validated GroupSpec

    Raises:
        InvalidSpecError: On unknown names, repeated pairs or invalid tails
    """
    frozen_layers = tuple(tuple(names) for names in layers)
    try:
        skeleton = GroupSpec(layers=frozen_layers)
    except ValidationError as e:
        raise InvalidSpecError(f"Invalid group layers: {e}") from e

    index = {name: position for position, name in enumerate(skeleton.generators)}
    layer_of = skeleton.layer_of_index
    entries = []
    for (g, h), word in commutators.items():
        if g not in index or h not in index:
            raise InvalidSpecError(f"Unknown generator in commutator [{g}, {h}]")
        if g == h:
            raise InvalidSpecError(f"Commutator [{g}, {h}] of a generator with itself")
        entries.append((g, h, word))
    entries.sort(key=lambda entry: -max(layer_of[index[entry[0]]], layer_of[index[entry[1]]]))

    tails: dict[tuple[int, int], tuple[int, ...]] = {}
    for g, h, word in entries:
        try:
            partial = NilpotentGroup(GroupSpec(layers=frozen_layers, tails=tails), fuel)
        except ValidationError as e:
            raise InvalidSpecError(f"Invalid commutator table: {e}") from e
        value = partial.normalize(word)
        a, b = index[g], index[h]
        if a < b:
            key, vector = (a, b), partial.inverse(value).exponents
        else:
            key, vector = (b, a), value.exponents
        if key in tails:
            raise InvalidSpecError(f"Commutator of {g} and {h} given twice")
        tails[key] = vector

    try:
        return GroupSpec(layers=frozen_layers, tails=tails)
    except ValidationError as e:
        raise InvalidSpecError(f"Invalid commutator table: {e}") from e
