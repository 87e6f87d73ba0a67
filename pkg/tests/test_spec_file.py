"""Tests for spec-file parsing and rendering."""

import pytest

from tamepres import InvalidSpecError, SpecFile, SpecParseError, ZeroAnnihilatorError, catalog
from tamepres.spec_file import parse_ring_element

HEISENBERG_TEXT = """\
# Heisenberg group, central annihilator z - 2
[group]
layer x1 y1
layer z
comm [x1, y1] = z^1

[module]
gen a
ann layer=1 gen=a 1 + x1 - y1
ann layer=2 gen=a z - 2   # central
rel gen=a 1 + x1 - y1
rel gen=a z - 2

[options]
mod 7
quot 3
"""


def test_parse_heisenberg():
    """Test parsing a full spec file."""
    spec = SpecFile.parse(HEISENBERG_TEXT)
    assert spec.group.layers == (("x1", "y1"), ("z",))
    assert spec.group.tails == {(0, 1): (0, 0, -1)}
    assert spec.module.generators == ("a",)
    assert len(spec.module.annihilators_for(1)) == 1
    assert len(spec.module.annihilators_for(2)) == 1
    assert len(spec.module.relators) == 2
    assert spec.options.mod == 7
    assert spec.options.quot == 3
    assert spec.options.cert_cap is None
    assert spec.options.as_config() == {
        "model_modulus": 7,
        "model_quotient": 3,
        "cert_cap": None,
    }


def test_render_round_trip():
    """Test that rendered text parses back to the same spec."""
    spec = SpecFile.parse(HEISENBERG_TEXT)
    text = spec.render()
    assert "comm [x1, y1] = z^1" in text
    assert "ann layer=2 gen=a -2 + z" in text
    assert "[options]\nmod 7\nquot 3\n" in text
    assert SpecFile.parse(text) == spec


def test_render_catalog_without_options():
    """Test that unset options are not written."""
    text = catalog.baumslag(1).render()
    assert "[options]" not in text
    assert text.startswith("[group]\nlayer x1 y1\n")


def test_from_path(tmp_path):
    """Test reading a spec from disk."""
    path = tmp_path / "heisenberg.spec"
    path.write_text(HEISENBERG_TEXT, encoding="utf-8")
    assert SpecFile.from_path(path) == SpecFile.parse(HEISENBERG_TEXT)


def test_parse_ring_element(heisenberg_group):
    """Test the ring-element grammar."""
    group = heisenberg_group
    element = parse_ring_element("-1 + 3 x - 2*z^-1 + x y", group)
    assert element.coefficient(group.identity) == -1
    assert element.coefficient(group.generator("x")) == 3
    assert element.coefficient(group.element((0, 0, -1))) == -2
    assert element.coefficient(group.element((1, 1, 0))) == 1
    assert parse_ring_element("x - x", group).is_zero()


def test_parse_ring_element_multiplies_in_order(heisenberg_group):
    """Test that juxtaposed factors multiply in Q."""
    element = parse_ring_element("y*x", heisenberg_group)
    assert element.support() == {heisenberg_group.element((1, 1, -1))}


@pytest.mark.parametrize("text", ["", "1 +", "* x", "1 + + 2", "x *", "x $ y"])
def test_parse_ring_element_errors(heisenberg_group, text):
    """Test malformed ring elements."""
    with pytest.raises(SpecParseError):
        parse_ring_element(text, heisenberg_group)


def test_parse_ring_element_unknown_generator(heisenberg_group):
    """Test unknown generator names."""
    with pytest.raises(InvalidSpecError):
        parse_ring_element("1 + w", heisenberg_group)


@pytest.mark.parametrize(
    ("text", "line"),
    [
        ("layer x\n", 1),
        ("[group]\nlayer x\n[bogus]\n", 3),
        ("[group]\nlayer x\n[group]\n", 3),
        ("[group]\nlayer x\nfoo\n[module]\ngen a\n", 3),
        ("[group]\nlayer x\n[module]\ngen a\nann gen=a 1 - x\n", 5),
        ("[group]\nlayer x\n[module]\ngen a\nann layer=one gen=a 1 - x\n", 5),
        ("[group]\nlayer x\n[module]\ngen a\nrel gen=a 1 +\n", 5),
        ("[group]\nlayer x\n[module]\ngen a\nfoo\n", 5),
        ("[group]\nlayer x\n[module]\ngen a\n[options]\nmod five\n", 6),
        ("[group]\nlayer x y\ncomm [x y] = 1\n[module]\ngen a\n", 3),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    """Test that parse errors report the offending line."""
    with pytest.raises(SpecParseError) as exc_info:
        SpecFile.parse(text)
    assert exc_info.value.line == line
    assert str(exc_info.value).startswith(f"line {line}: ")


def test_missing_sections():
    """Test that both required sections must be present."""
    with pytest.raises(SpecParseError):
        SpecFile.parse("[group]\nlayer x\n")
    with pytest.raises(SpecParseError):
        SpecFile.parse("[module]\ngen a\n")


def test_invalid_module_against_group():
    """Test module checks that need the group."""
    with pytest.raises(InvalidSpecError):
        SpecFile.parse("[group]\nlayer x\n[module]\ngen x\n")
    with pytest.raises(InvalidSpecError):
        SpecFile.parse("[group]\nlayer x\n[module]\ngen a\nann layer=2 gen=a 1 - x\n")
    with pytest.raises(InvalidSpecError):
        SpecFile.parse("[group]\nlayer x\nlayer z\n[module]\ngen a\nann layer=2 gen=a 1 - x\n")
    with pytest.raises(ZeroAnnihilatorError):
        SpecFile.parse("[group]\nlayer x\n[module]\ngen a\nann layer=1 gen=a x - x\n")
