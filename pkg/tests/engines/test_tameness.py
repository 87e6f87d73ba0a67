"""Tests for TamenessEngine."""

import logging
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from tamepres import (
    LayerCharacter,
    MissingGeneratorError,
    PresenterConfig,
    SpecFile,
    Workbench,
    ZeroAnnihilatorError,
    catalog,
)
from tamepres.engines import TamenessEngine


@pytest.fixture
def engine(abelian_group, abelian_ring):
    """Return a tameness engine over Z^2."""
    return TamenessEngine(abelian_group, abelian_ring)


@pytest.fixture
def mu(abelian_ring):
    """Return the annihilator 1 + x - y."""
    ring, group = abelian_ring, abelian_ring.group
    return ring.one + ring.monomial(group.generator("x")) - ring.monomial(group.generator("y"))


def test_self_expressions(engine, abelian_ring, mu):
    """Test rewriting a * mu = 0 at every unit pivot."""
    expressions = engine.derive_self_expressions("a", 1, mu)
    ring = abelian_ring
    assert [ring.group.render(e.pivot) for e in expressions] == ["1", "x", "y"]
    assert [ring.render(e.lam) for e in expressions] == [
        "-x + y",
        "-x^-1 + x^-1*y",
        "x*y^-1 + y^-1",
    ]
    assert [e.pivot_sign for e in expressions] == [1, 1, -1]
    for expression in expressions:
        left = ring.scale_right(ring.one - expression.lam, expression.pivot)
        assert left == ring.scale(mu, expression.pivot_sign)


def test_no_unit_pivot(engine, abelian_ring, caplog):
    """Test annihilators without a unit coefficient."""
    ring = abelian_ring
    mu = ring.scale(ring.one + ring.monomial(ring.group.generator("x")), 2)
    with caplog.at_level(logging.WARNING):
        assert engine.derive_self_expressions("a", 1, mu) == []
    assert "no unit pivot" in caplog.text


def test_monomial_annihilator(engine, abelian_ring):
    """Test that a single monomial gives no self-expression."""
    mu = abelian_ring.monomial(abelian_ring.group.generator("x"))
    assert engine.derive_self_expressions("a", 1, mu) == []


def test_zero_annihilator(engine, abelian_ring):
    """Test that a zero annihilator is rejected."""
    with pytest.raises(ZeroAnnihilatorError):
        engine.derive_self_expressions("a", 1, abelian_ring.zero)


def test_sigma0_member(engine, mu):
    """Test the certificate test for characters."""
    expressions = engine.derive_self_expressions("a", 1, mu)
    assert engine.sigma0_member(LayerCharacter(1, (1, 1)), expressions[:1], ["a"])
    assert engine.sigma0_member(LayerCharacter(1, (1, 2)), expressions[:1], ["a"])
    assert not engine.sigma0_member(LayerCharacter(1, (-1, -1)), expressions, ["a"])
    assert not engine.sigma0_member(LayerCharacter(1, (1, 0)), expressions, ["a"])
    assert engine.sigma0_member(LayerCharacter(1, (-1, 0)), expressions, ["a"])
    assert engine.sigma0_member(LayerCharacter(1, (Fraction(-1, 2), 3)), expressions, ["a"])
    with pytest.raises(MissingGeneratorError):
        engine.sigma0_member(LayerCharacter(1, (1, 1)), expressions, ["a", "b"])


def test_baumslag_report(baumslag_bench, data_dir):
    """Test the Baumslag tameness report."""
    report = baumslag_bench.check_tame()
    assert report.is_tame
    layer = report.layer(1)
    assert layer.candidates == 3
    assert not layer.truncated
    assert [c.index for c in layer.certificates] == [1, 2, 3]
    assert [s.points for s in layer.family] == [
        ((-1, 0), (-1, 1)),
        ((0, 1), (1, 0)),
        ((0, -1), (1, -1)),
    ]
    expected = (data_dir / "baumslag_k1.report").read_text(encoding="utf-8")
    assert baumslag_bench.render_report() == expected


def test_baumslag_rank_two_is_tame():
    """Test the four-generator Baumslag example."""
    bench = Workbench.from_spec_file(catalog.baumslag(2))
    report = bench.check_tame()
    assert report.is_tame
    assert report.layer(1).rank == 4
    assert report.layer(1).cover.covered


def test_heisenberg_report(heisenberg_bench):
    """Test both layers of the Heisenberg example."""
    report = heisenberg_bench.check_tame()
    assert report.is_tame
    assert len(report.layer(1).certificates) == 3
    central = report.layer(2)
    assert central.rank == 1
    assert len(central.certificates) == 1
    certificate = central.certificates[0]
    assert heisenberg_bench.ring.render(certificate.expression_for("a").lam) == "2*z^-1"
    assert certificate.lattice_set.points == ((-1,),)
    assert central.skipped == ()


def test_free_module_is_not_tame(free_spec):
    """Test that generators without annihilators are missing."""
    bench = Workbench.from_spec_file(free_spec)
    report = bench.check_tame()
    assert not report.is_tame
    assert report.layer(1).missing == ("a",)
    assert report.layer(1).cover.witness == (1, 0)
    expected = "  missing a\n  candidates 0\n  cover witness: (1, 0)\nverdict not certified\n"
    assert bench.render_report().endswith(expected)


def test_certificate_cap(baumslag_spec, caplog):
    """Test that capped certificates can lose the cover."""
    bench = Workbench.from_spec_file(baumslag_spec, {"cert_cap": 1})
    with caplog.at_level(logging.WARNING):
        report = bench.check_tame()
    assert report.layer(1).truncated
    assert report.layer(1).candidates == 1
    assert not report.is_tame
    assert "capped" in caplog.text
    assert "candidates 1 (capped)" in bench.render_report()


def test_two_generators(baumslag_spec):
    """Test diagonal certificates over two module generators."""
    text = baumslag_spec.render().replace("gen a", "gen a b")
    text += "ann layer=1 gen=b 1 + x1 - y1\n"
    bench = Workbench.from_spec_file(SpecFile.parse(text), {"cert_cap": 9})
    report = bench.check_tame()
    assert report.layer(1).candidates == 9
    assert report.is_tame
    for certificate in report.layer(1).certificates:
        assert [e.generator for e in certificate.expressions] == ["a", "b"]


def test_translated_generator_keeps_the_verdict(heisenberg_spec):
    """Test that adding b = a*x with conjugated annihilators keeps the verdict."""
    single = Workbench.from_spec_file(heisenberg_spec)
    ring, group = single.ring, single.group
    x = group.generator("x1")
    lines = []
    for ann in heisenberg_spec.module.annihilators:
        conjugated = ring.scale_right(ring.scale_left(group.inverse(x), ann.element), x)
        if ann.layer == 1:
            assert conjugated != ann.element
        lines.append(f"ann layer={ann.layer} gen=b {ring.render(conjugated)}\n")
    text = heisenberg_spec.render().replace("gen a\n", "gen a b\n") + "".join(lines)
    pair = Workbench.from_spec_file(SpecFile.parse(text))

    assert single.check_tame().is_tame
    assert pair.check_tame().is_tame == single.check_tame().is_tame
    translated = [e for e in pair.check_tame().layer(1).expressions if e.generator == "b"]
    assert len(translated) == 3
    assert any("z^-1" in ring.render(e.lam) for e in translated)


def test_config_default(abelian_group, abelian_ring):
    """Test the engine falls back to the default config."""
    engine = TamenessEngine(abelian_group, abelian_ring)
    assert engine.config == PresenterConfig()
    assert engine.group is abelian_group


@settings(max_examples=200, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(
    chi=st.tuples(st.integers(-5, 5), st.integers(-5, 5)).filter(any),
    signs=st.tuples(st.sampled_from([-1, 1]), st.sampled_from([-1, 1])),
)
def test_membership_is_open(abelian_group, abelian_ring, chi, signs):
    """Test that certified characters stay certified under small perturbations."""
    engine = TamenessEngine(abelian_group, abelian_ring)
    ring = abelian_ring
    mu = ring.one + ring.monomial(ring.group.generator("x"))
    mu = mu - ring.monomial(ring.group.generator("y"))
    expressions = engine.derive_self_expressions("a", 1, mu)
    if not engine.sigma0_member(LayerCharacter(1, chi), expressions, ["a"]):
        return
    nudged = tuple(c + Fraction(s, 1000) for c, s in zip(chi, signs))
    assert engine.sigma0_member(LayerCharacter(1, nudged), expressions, ["a"])
