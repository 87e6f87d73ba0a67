"""Tests for the built-in example specs."""

import pytest

from tamepres import catalog


def test_baumslag_shape():
    """Test the Baumslag family layout."""
    spec = catalog.baumslag(2)
    assert spec.group.layers == (("x1", "y1", "x2", "y2"),)
    assert spec.group.tails == {}
    assert len(spec.module.annihilators) == 2
    assert len(spec.module.relators) == 2


def test_heisenberg_shape():
    """Test the Heisenberg family layout."""
    spec = catalog.heisenberg(2, 3)
    assert spec.group.layers == (("x1", "y1", "x2", "y2"), ("z",))
    assert set(spec.group.tails) == {(0, 1), (2, 3)}
    assert [ann.layer for ann in spec.module.annihilators] == [1, 1, 2]
    assert "ann layer=2 gen=a -3 + z" in spec.render()


def test_free_module_shape():
    """Test the free module has no relations."""
    spec = catalog.free_module(3)
    assert spec.group.ranks == (3,)
    assert spec.module.annihilators == ()


@pytest.mark.parametrize(
    "build",
    [
        lambda: catalog.baumslag(0),
        lambda: catalog.heisenberg(0, 2),
        lambda: catalog.heisenberg(1, 1),
        lambda: catalog.free_module(0),
    ],
)
def test_invalid_parameters(build):
    """Test rejected catalog parameters."""
    with pytest.raises(ValueError):
        build()


def test_registry():
    """Test the example registry."""
    assert sorted(catalog.EXAMPLES) == ["baumslag", "free", "heisenberg"]
