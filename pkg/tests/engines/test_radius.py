"""Tests for RadiusEngine."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tamepres import (
    GroupRing,
    LatticeSet,
    NilpotentGroup,
    NotCoveredError,
    PresenterConfig,
    build_group_spec,
)
from tamepres.engines import RadiusEngine
from tamepres.exceptions import NeedSmallerBoxesError
from tamepres.geometry import close_under_negation

BAUMSLAG_FAMILY = [
    LatticeSet(((-1, 0), (-1, 1))),
    LatticeSet(((1, 0), (0, 1))),
    LatticeSet(((0, -1), (1, -1))),
]


@pytest.fixture
def engine(abelian_group, abelian_ring):
    """Return a radius engine."""
    return RadiusEngine(abelian_group, abelian_ring)


def test_margin_one_dimensional(engine):
    """Test margins of symmetric point pairs."""
    assert engine.positivity_margin([LatticeSet(((1,),))], 1) == 1
    assert engine.positivity_margin([LatticeSet(((2,),)), LatticeSet(((-2,),))], 1) == 2


def test_p0_one_dimensional(engine):
    """Test radius constants on the two-point sphere."""
    unit = engine.compute_p0([LatticeSet(((1,),)), LatticeSet(((-1,),))], 1)
    assert unit.p0 == 0
    assert unit.bad_points == ()

    doubled = engine.compute_p0([LatticeSet(((2,),)), LatticeSet(((-2,),))], 1)
    assert doubled.margin == 2
    assert doubled.tail_bound == Fraction(5, 4)
    assert doubled.scan_radius_sq == 4
    assert doubled.p0 == 1
    assert doubled.bad_points == ((-1,), (1,))


def test_uncovered_family(engine):
    """Test that a non-covering family is rejected."""
    with pytest.raises(NotCoveredError) as exc_info:
        engine.compute_p0([LatticeSet(((1, 0), (0, 1)))], 2)
    assert len(exc_info.value.witness) == 2


def test_baumslag_radius(engine):
    """Test the radius certificate of the Baumslag layer."""
    cert = engine.compute_p0(BAUMSLAG_FAMILY, 2)
    assert cert.p0 == 1
    assert cert.bad_points == ((-1, 0), (0, -1), (0, 1), (1, 0))
    assert cert.max_norm_sq == 2
    assert len(cert.family) == 6
    assert cert.margin > 0
    assert engine.replay(cert)
    assert engine.tail_spot_check(cert, samples=50)
    rendered = cert.render()
    assert "  p0 1\n" in rendered
    assert "  family 6\n  set {(-1, 0), (-1, 1)}\n" in rendered
    assert "  set {(1, -1), (1, 0)}\n" in rendered
    for lattice_set in cert.family:
        assert f"  set {lattice_set.render()}\n" in rendered


def test_replay_detects_tampering(engine):
    """Test that altered certificates fail the replay."""
    cert = engine.compute_p0(BAUMSLAG_FAMILY, 2)
    assert not engine.replay(cert.model_copy(update={"p0": 0}))
    assert not engine.replay(cert.model_copy(update={"bad_points": cert.bad_points[1:]}))
    assert not engine.replay(cert.model_copy(update={"tail_bound": cert.tail_bound + 1}))


def test_subdivision_cap(abelian_group, abelian_ring):
    """Test that a shallow cap cannot certify the margin."""
    engine = RadiusEngine(abelian_group, abelian_ring, PresenterConfig(subdivision_depth=1))
    with pytest.raises(NeedSmallerBoxesError):
        engine.positivity_margin(BAUMSLAG_FAMILY, 2)


def test_compute_radii(baumslag_bench, heisenberg_bench):
    """Test one certificate per layer."""
    assert [c.p0 for c in baumslag_bench.compute_radii()] == [1]
    assert [c.p0 for c in heisenberg_bench.compute_radii()] == [1, 0]


@pytest.fixture(scope="module")
def baumslag_margin():
    """Return the certified margin of the Baumslag family."""
    group = NilpotentGroup(build_group_spec([["x", "y"]], {}))
    return RadiusEngine(group, GroupRing(group)).positivity_margin(BAUMSLAG_FAMILY, 2)


@settings(max_examples=300)
@given(u=st.tuples(st.integers(-20, 20), st.integers(-20, 20)).filter(any))
def test_margin_bounds_every_direction(baumslag_margin, u):
    """Test that some set has <u, y> >= c |u| for all of its points."""
    norm_sq = u[0] ** 2 + u[1] ** 2
    best = max(
        min(u[0] * y[0] + u[1] * y[1] for y in s.points)
        for s in close_under_negation(BAUMSLAG_FAMILY)
    )
    assert best > 0
    assert Fraction(best) ** 2 >= baumslag_margin**2 * norm_sq


def test_p0_does_not_grow_with_more_sets(engine):
    """Test that enlarging a covering family never increases p0."""
    base = engine.compute_p0(BAUMSLAG_FAMILY, 2)
    for extra in [((1, 0),), ((1, 1),), ((2, 0), (0, 2))]:
        enlarged = engine.compute_p0([*BAUMSLAG_FAMILY, LatticeSet(extra)], 2)
        assert enlarged.p0 <= base.p0
        assert engine.replay(enlarged)
