"""Freely reduced words over a finite alphabet of named symbols."""

import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .exceptions import SpecParseError

Letter = tuple[str, int]

_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)\^(-?\d+)$")


def free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    """
    Freely reduce a letter sequence.

    Adjacent powers of the same symbol are merged and zero powers dropped.

    Args:
        letters: Sequence of (symbol, exponent) pairs

    Returns:
        Reduced tuple of letters
    """
    stack: list[Letter] = []
    for symbol, exponent in letters:
        if exponent == 0:
            continue
        if stack and stack[-1][0] == symbol:
            merged = stack[-1][1] + exponent
            stack.pop()
            if merged:
                stack.append((symbol, merged))
        else:
            stack.append((symbol, exponent))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """Freely reduced word; exponents nonzero, adjacent symbols distinct."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        previous = None
        for symbol, exponent in self.letters:
            if exponent == 0:
                raise ValueError(f"Zero exponent on {symbol!r}")
            if symbol == previous:
                raise ValueError(f"Adjacent repeated symbol {symbol!r}")
            previous = symbol

    @classmethod
    def reduce(cls, letters: Iterable[Letter]) -> "Word":
        """Build a word from arbitrary letters by free reduction."""
        return cls(free_reduce(letters))

    @classmethod
    def symbol(cls, name: str, exponent: int = 1) -> "Word":
        """Single power ``name^exponent``."""
        return cls.reduce([(name, exponent)])

    @classmethod
    def parse(cls, text: str) -> "Word":
        """
        Parse space-separated ``sym^exp`` tokens.

        Args:
            text: Token string; empty for the empty word

        Returns:
            Reduced word

        Raises:
            SpecParseError: On a malformed token
        """
        letters = []
        for token in text.split():
            match = _TOKEN.match(token)
            if match is None:
                raise SpecParseError(f"Malformed word token {token!r}")
            letters.append((match.group(1), int(match.group(2))))
        return cls.reduce(letters)

    def inverse(self) -> "Word":
        """Formal inverse."""
        return Word(tuple((symbol, -exponent) for symbol, exponent in reversed(self.letters)))

    def __mul__(self, other: "Word") -> "Word":
        return Word.reduce(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def symbols(self) -> set[str]:
        """Symbols occurring in the word."""
        return {symbol for symbol, _ in self.letters}

    def render(self) -> str:
        """Space-separated ``sym^exp`` tokens."""
        return " ".join(f"{symbol}^{exponent}" for symbol, exponent in self.letters)

    def __str__(self) -> str:
        return self.render()


def commutator(first: Word, second: Word) -> Word:
    """Commutator ``[g, h] = g^-1 h^-1 g h``."""
    return first.inverse() * second.inverse() * first * second


def conjugate(word: Word, by: Word) -> Word:
    """Conjugate ``by^-1 word by``."""
    return by.inverse() * word * by
