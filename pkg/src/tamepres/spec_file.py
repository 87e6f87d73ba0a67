"""Spec-file ingestion and rendering.

A spec file has three sections; ``#`` starts a comment::

    [group]
    layer x1 y1
    layer z
    comm [x1, y1] = z^1

    [module]
    gen a
    ann layer=1 gen=a 1 + x1 - y1
    ann layer=2 gen=a z - 2
    rel gen=a 1 + x1 - y1

    [options]
    mod 7
    quot 3
    cert_cap 64

Ring elements are signed sums of terms; a term is a product of integers and
generator powers ``name`` or ``name^e`` joined by ``*`` or juxtaposition.
"""

import logging
import re
from pathlib import Path

from pydantic import ValidationError

from .constants import DEFAULT_COLLECTION_FUEL, SECTION_GROUP, SECTION_MODULE, SECTION_OPTIONS
from .exceptions import InvalidSpecError, SpecParseError
from .group_ring import GroupRing, RingElement
from .models.base import TameBaseModel
from .models.group import GroupSpec
from .models.module import Annihilator, ModuleRelator, ModuleSpec
from .nilpotent import GroupElement, NilpotentGroup, build_group_spec
from .words import Word

logger = logging.getLogger(__name__)

_SECTION = re.compile(r"^\[(\w+)\]$")
_COMMUTATOR = re.compile(r"^\[\s*(\w+)\s*,\s*(\w+)\s*\]\s*=\s*(.*)$")
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?|([+\-*]))")

_OPTION_FIELDS = {"mod": "model_modulus", "quot": "model_quotient", "cert_cap": "cert_cap"}


def parse_ring_element(text: str, group: NilpotentGroup) -> RingElement:
    """
    Parse a ring element such as ``1 + x1 - y1`` or ``2*z^-1``.

    Args:
        text: Element text
        group: Group whose generators may appear

    Returns:
        Parsed element

    Raises:
        SpecParseError: On malformed text
        InvalidSpecError: On unknown generators
    """
    tokens: list[tuple[str, str, int]] = []
    position = 0
    text = text.strip()
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None or match.end() == position:
            raise SpecParseError(f"Unexpected character {text[position:].strip()[:1]!r}")
        number, name, exponent, operator = match.groups()
        if number is not None:
            tokens.append(("int", number, 0))
        elif name is not None:
            tokens.append(("gen", name, int(exponent) if exponent is not None else 1))
        elif operator is not None:
            tokens.append(("op", operator, 0))
        position = match.end()
        while position < len(text) and text[position].isspace():
            position += 1
    if not tokens:
        raise SpecParseError("Empty ring element")

    terms: dict[GroupElement, int] = {}
    index = 0
    sign = 1
    if tokens[0][0] == "op" and tokens[0][1] in ("+", "-"):
        sign = -1 if tokens[0][1] == "-" else 1
        index = 1
    while True:
        coefficient = sign
        element = group.identity
        factors = 0
        while index < len(tokens):
            kind, value, exponent = tokens[index]
            if kind == "op":
                if value != "*" or not factors:
                    break
                index += 1
                if index >= len(tokens) or tokens[index][0] == "op":
                    raise SpecParseError("Expected a factor after '*'")
                continue
            index += 1
            if kind == "int":
                coefficient *= int(value)
            else:
                step = group.power(group.generator(value), exponent)
                element = group.multiply(element, step)
            factors += 1
        if not factors:
            raise SpecParseError("Missing term in ring element")
        terms[element] = terms.get(element, 0) + coefficient
        if index >= len(tokens):
            break
        _, value, _ = tokens[index]
        if value not in ("+", "-"):
            raise SpecParseError(f"Unexpected {value!r} in ring element")
        sign = -1 if value == "-" else 1
        index += 1
        if index >= len(tokens):
            raise SpecParseError("Trailing operator in ring element")
    return RingElement(terms)


class SpecOptions(TameBaseModel):
    """Overrides from the ``[options]`` section."""

    mod: int | None = None
    quot: int | None = None
    cert_cap: int | None = None

    def as_config(self) -> dict[str, int | None]:
        """Mapping for ``PresenterConfig.with_options``."""
        return {field: getattr(self, key) for key, field in _OPTION_FIELDS.items()}


class SpecFile(TameBaseModel):
    """Parsed spec file: group, module and options."""

    group: GroupSpec
    module: ModuleSpec
    options: SpecOptions = SpecOptions()

    def build_group(self, fuel: int = DEFAULT_COLLECTION_FUEL) -> NilpotentGroup:
        """Group with collection arithmetic for this spec."""
        return NilpotentGroup(self.group, fuel)

    @classmethod
    def from_path(cls, path: str | Path, fuel: int = DEFAULT_COLLECTION_FUEL) -> "SpecFile":
        """Read and parse a UTF-8 spec file."""
        return cls.parse(Path(path).read_text(encoding="utf-8"), fuel)

    @classmethod
    def parse(cls, text: str, fuel: int = DEFAULT_COLLECTION_FUEL) -> "SpecFile":
        """
        Parse spec-file text.

        Args:
            text: File contents
            fuel: Collection fuel used while building the group

        Returns:
            Validated SpecFile

        Raises:
            SpecParseError: On malformed lines, with the line number
            InvalidSpecError: If the parsed specs violate an invariant
        """
        sections: dict[str, list[tuple[int, str]]] = {}
        current: str | None = None
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            header = _SECTION.match(line)
            if header:
                current = header.group(1)
                if current not in (SECTION_GROUP, SECTION_MODULE, SECTION_OPTIONS):
                    raise SpecParseError(f"Unknown section [{current}]", number)
                if current in sections:
                    raise SpecParseError(f"Repeated section [{current}]", number)
                sections[current] = []
                continue
            if current is None:
                raise SpecParseError("Content before the first section", number)
            sections[current].append((number, line))

        for required in (SECTION_GROUP, SECTION_MODULE):
            if required not in sections:
                raise SpecParseError(f"Missing section [{required}]")

        group_spec = cls._parse_group(sections[SECTION_GROUP], fuel)
        group = NilpotentGroup(group_spec, fuel)
        module = cls._parse_module(sections[SECTION_MODULE], group)
        options = cls._parse_options(sections.get(SECTION_OPTIONS, []))
        module.validate_against(group)
        logger.debug(
            "parsed spec: ranks %s, %d module generators", group_spec.ranks, len(module.generators)
        )
        return cls(group=group_spec, module=module, options=options)

    @staticmethod
    def _parse_group(lines: list[tuple[int, str]], fuel: int) -> GroupSpec:
        layers: list[list[str]] = []
        commutators: dict[tuple[str, str], Word] = {}
        seen: set[frozenset[str]] = set()
        for number, line in lines:
            keyword, _, rest = line.partition(" ")
            if keyword == "layer":
                names = rest.split()
                if not names:
                    raise SpecParseError("Empty layer", number)
                layers.append(names)
            elif keyword == "comm":
                match = _COMMUTATOR.match(rest.strip())
                if match is None:
                    raise SpecParseError("Expected 'comm [g, h] = word'", number)
                g, h, value = match.groups()
                pair = frozenset((g, h))
                if pair in seen:
                    raise SpecParseError(f"Commutator of {g} and {h} given twice", number)
                seen.add(pair)
                value = value.strip()
                try:
                    commutators[(g, h)] = Word() if value in ("", "1") else Word.parse(value)
                except SpecParseError as e:
                    raise SpecParseError(e.message, number) from e
            else:
                raise SpecParseError(f"Unknown group keyword {keyword!r}", number)
        if not layers:
            raise SpecParseError("No layers in [group]")
        return build_group_spec(layers, commutators, fuel)

    @staticmethod
    def _fields(rest: str, number: int, required: tuple[str, ...]) -> tuple[dict[str, str], str]:
        fields: dict[str, str] = {}
        remaining = rest.strip()
        while remaining and "=" in remaining.split(" ", 1)[0]:
            head, _, remaining = remaining.partition(" ")
            key, _, value = head.partition("=")
            fields[key] = value
            remaining = remaining.strip()
        for key in required:
            if key not in fields:
                raise SpecParseError(f"Missing field {key}=", number)
        extra = set(fields) - set(required)
        if extra:
            raise SpecParseError(f"Unknown fields {sorted(extra)}", number)
        return fields, remaining

    @classmethod
    def _parse_module(cls, lines: list[tuple[int, str]], group: NilpotentGroup) -> ModuleSpec:
        generators: list[str] = []
        annihilators: list[Annihilator] = []
        relators: list[ModuleRelator] = []
        for number, line in lines:
            keyword, _, rest = line.partition(" ")
            try:
                if keyword == "gen":
                    generators.extend(rest.split())
                elif keyword == "ann":
                    fields, body = cls._fields(rest, number, ("layer", "gen"))
                    if not fields["layer"].isdigit():
                        raise SpecParseError("layer= must be a positive integer", number)
                    annihilators.append(
                        Annihilator(
                            generator=fields["gen"],
                            layer=int(fields["layer"]),
                            element=parse_ring_element(body, group),
                        )
                    )
                elif keyword == "rel":
                    fields, body = cls._fields(rest, number, ("gen",))
                    relators.append(
                        ModuleRelator(
                            generator=fields["gen"], element=parse_ring_element(body, group)
                        )
                    )
                else:
                    raise SpecParseError(f"Unknown module keyword {keyword!r}", number)
            except SpecParseError as e:
                raise SpecParseError(e.message, number) from e
            except ValidationError as e:
                raise SpecParseError(str(e), number) from e
            except InvalidSpecError as e:
                raise SpecParseError(e.message, number) from e
        try:
            return ModuleSpec(
                generators=tuple(generators),
                annihilators=tuple(annihilators),
                relators=tuple(relators),
            )
        except ValidationError as e:
            raise InvalidSpecError(f"Invalid module: {e}") from e

    @staticmethod
    def _parse_options(lines: list[tuple[int, str]]) -> SpecOptions:
        values: dict[str, int] = {}
        for number, line in lines:
            parts = line.split()
            if len(parts) != 2 or parts[0] not in _OPTION_FIELDS:
                expected = ", ".join(sorted(_OPTION_FIELDS))
                raise SpecParseError(f"Expected one of {expected} with a value", number)
            try:
                values[parts[0]] = int(parts[1])
            except ValueError:
                raise SpecParseError(f"Option {parts[0]} needs an integer", number) from None
        return SpecOptions(**values)

    def render(self) -> str:
        """Spec-file text that parses back to an equal SpecFile."""
        group = self.build_group()
        ring = GroupRing(group)
        names = self.group.generators
        lines = [f"[{SECTION_GROUP}]"]
        lines.extend("layer " + " ".join(layer) for layer in self.group.layers)
        for (a, b), tail in sorted(self.group.tails.items()):
            value = group.ordered_word(group.inverse(group.element(tail)))
            lines.append(f"comm [{names[a]}, {names[b]}] = {value.render()}")
        lines.append("")
        lines.append(f"[{SECTION_MODULE}]")
        lines.append("gen " + " ".join(self.module.generators))
        for ann in self.module.annihilators:
            lines.append(f"ann layer={ann.layer} gen={ann.generator} {ring.render(ann.element)}")
        for rel in self.module.relators:
            lines.append(f"rel gen={rel.generator} {ring.render(rel.element)}")
        set_options = [
            (key, getattr(self.options, key))
            for key in _OPTION_FIELDS
            if getattr(self.options, key) is not None
        ]
        if set_options:
            lines.append("")
            lines.append(f"[{SECTION_OPTIONS}]")
            lines.extend(f"{key} {value}" for key, value in set_options)
        return "\n".join(lines) + "\n"
