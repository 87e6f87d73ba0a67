"""Pytest fixtures for tamepres tests."""

from pathlib import Path

import pytest

from tamepres import GroupRing, NilpotentGroup, SpecFile, Workbench, Word, build_group_spec, catalog

DATA = Path(__file__).parent / "data"


@pytest.fixture
def data_dir():
    """Return the directory of golden files."""
    return DATA


@pytest.fixture
def baumslag_spec():
    """Return the one-pair Baumslag spec."""
    return catalog.baumslag(1)


@pytest.fixture
def heisenberg_spec():
    """Return the Heisenberg spec with central annihilator z - 2."""
    return catalog.heisenberg(1, 2)


@pytest.fixture
def free_spec():
    """Return the free cyclic module over Z^2."""
    return catalog.free_module(2)


@pytest.fixture
def baumslag_bench(baumslag_spec):
    """Return a workbench for the Baumslag spec."""
    return Workbench.from_spec_file(baumslag_spec)


@pytest.fixture
def heisenberg_bench(heisenberg_spec):
    """Return a workbench for the Heisenberg spec."""
    return Workbench.from_spec_file(heisenberg_spec)


@pytest.fixture
def abelian_group():
    """Return Z^2 on generators x, y."""
    return NilpotentGroup(build_group_spec([["x", "y"]], {}))


@pytest.fixture
def heisenberg_group():
    """Return the Heisenberg group with [x, y] = z."""
    return NilpotentGroup(build_group_spec([["x", "y"], ["z"]], {("x", "y"): Word.parse("z^1")}))


@pytest.fixture
def abelian_ring(abelian_group):
    """Return the group ring of Z^2."""
    return GroupRing(abelian_group)


@pytest.fixture
def heisenberg_ring(heisenberg_group):
    """Return the group ring of the Heisenberg group."""
    return GroupRing(heisenberg_group)


@pytest.fixture
def spec_path(tmp_path, baumslag_spec: SpecFile):
    """Write the Baumslag spec to a file and return its path."""
    path = tmp_path / "baumslag.spec"
    path.write_text(baumslag_spec.render(), encoding="utf-8")
    return path
