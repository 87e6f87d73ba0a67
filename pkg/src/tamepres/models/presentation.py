"""Finite presentation model and its text format."""

from enum import Enum

from pydantic import Field, InstanceOf, model_validator

from ..exceptions import SpecParseError
from ..words import Word
from .base import TameBaseModel


class RelatorOrigin(str, Enum):
    """Relator families, in output order."""

    RA = "RA"
    K0 = "K0"
    C = "C"
    RQ = "RQ"


class TaggedRelator(TameBaseModel):
    """Relator word with its family."""

    origin: RelatorOrigin
    word: InstanceOf[Word]


class PresentationMetadata(TameBaseModel):
    """Construction data recorded next to a presentation."""

    p0: tuple[int, ...]
    v_sizes: tuple[int, ...]
    w_size: int
    k0_formal: int
    c_formal: int
    ell: tuple[int, ...]
    certificates: tuple[str, ...] = ()

    def render(self) -> str:
        """Summary lines for the CLI."""
        lines = [f"p0 layer {i}: {p0}" for i, p0 in enumerate(self.p0, start=1)]
        lines.append("|V_i| " + " ".join(str(size) for size in self.v_sizes))
        lines.append(f"|W| {self.w_size}")
        lines.append(f"K0 formal {self.k0_formal}")
        lines.append(f"C formal {self.c_formal}")
        lines.extend(f"certificate {text}" for text in self.certificates)
        return "\n".join(lines) + "\n"


class Presentation(TameBaseModel):
    """
    Finite presentation ⟨𝒜 ∪ 𝒳 | ℛ_A ∪ 𝒦₀ ∪ 𝒞 ∪ ℛ_Q⟩.

    Text format: ``gen <name>`` lines in generator order, then one
    ``rel <origin> <sym^exp ...>`` line per relator.
    """

    generators: tuple[str, ...]
    relators: tuple[TaggedRelator, ...]
    metadata: PresentationMetadata | None = Field(default=None)

    @model_validator(mode="after")
    def _check_alphabet(self) -> "Presentation":
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("Duplicate presentation generators")
        known = set(self.generators)
        for relator in self.relators:
            unknown = relator.word.symbols() - known
            if unknown:
                raise ValueError(f"Relator uses unknown symbols {sorted(unknown)}")
            if not relator.word:
                raise ValueError("Empty relator")
        return self

    def words(self, origin: RelatorOrigin) -> list[Word]:
        """Relator words of one family, in order."""
        return [relator.word for relator in self.relators if relator.origin == origin]

    def count(self, origin: RelatorOrigin) -> int:
        """Number of relators of one family."""
        return len(self.words(origin))

    def counts(self) -> dict[RelatorOrigin, int]:
        """Number of relators per family."""
        return {origin: self.count(origin) for origin in RelatorOrigin}

    def render(self) -> str:
        """Bit-exact text form, LF line endings."""
        lines = [f"gen {name}" for name in self.generators]
        lines.extend(f"rel {r.origin.value} {r.word.render()}" for r in self.relators)
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "Presentation":
        """
        Parse the text form.

        Args:
            text: Presentation text

        Returns:
            Presentation without metadata

        Raises:
            SpecParseError: With the offending line number
        """
        generators: list[str] = []
        relators: list[TaggedRelator] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            keyword, _, rest = line.partition(" ")
            if keyword == "gen":
                if relators:
                    raise SpecParseError("Generator after relators", number)
                if not rest.strip() or len(rest.split()) != 1:
                    raise SpecParseError("Expected 'gen <name>'", number)
                generators.append(rest.strip())
            elif keyword == "rel":
                origin_text, _, word_text = rest.strip().partition(" ")
                try:
                    origin = RelatorOrigin(origin_text)
                except ValueError:
                    message = f"Unknown relator origin {origin_text!r}"
                    raise SpecParseError(message, number) from None
                try:
                    word = Word.parse(word_text)
                except SpecParseError as e:
                    raise SpecParseError(e.message, number) from e
                relators.append(TaggedRelator(origin=origin, word=word))
            else:
                raise SpecParseError(f"Unknown keyword {keyword!r}", number)
        try:
            return cls(generators=tuple(generators), relators=tuple(relators))
        except ValueError as e:
            raise SpecParseError(str(e)) from e
