"""Tests for the command-line interface."""

import pytest
from click.testing import CliRunner

from tamepres.cli import main


@pytest.fixture
def runner():
    """Return a click test runner."""
    return CliRunner()


@pytest.fixture
def free_path(tmp_path, free_spec):
    """Write the free-module spec to a file."""
    path = tmp_path / "free.spec"
    path.write_text(free_spec.render(), encoding="utf-8")
    return path


def test_tame(runner, spec_path, data_dir):
    """Test a certified tame verdict."""
    result = runner.invoke(main, ["tame", str(spec_path)])
    assert result.exit_code == 0
    assert result.output == (data_dir / "baumslag_k1.report").read_text(encoding="utf-8")


def test_tame_negative(runner, free_path):
    """Test that a negative verdict exits with 1."""
    result = runner.invoke(main, ["tame", str(free_path)])
    assert result.exit_code == 1
    assert "verdict not certified" in result.output


def test_tame_cert_cap(runner, spec_path):
    """Test the certificate cap option."""
    result = runner.invoke(main, ["tame", str(spec_path), "--cert-cap", "1"])
    assert result.exit_code == 1
    assert "(capped)" in result.output


def test_present_to_stdout(runner, spec_path, data_dir):
    """Test the presentation text on stdout."""
    result = runner.invoke(main, ["present", str(spec_path)])
    assert result.exit_code == 0
    assert result.output.startswith((data_dir / "baumslag_k1.pres").read_text(encoding="utf-8"))


def test_present_to_file(runner, spec_path, data_dir, tmp_path):
    """Test writing the presentation and printing the summary."""
    target = tmp_path / "out.pres"
    result = runner.invoke(main, ["present", str(spec_path), "-o", str(target)])
    assert result.exit_code == 0
    expected = (data_dir / "baumslag_k1.pres").read_bytes()
    assert target.read_bytes() == expected
    assert "p0 layer 1: 1\n" in result.output
    assert "|W| 5\n" in result.output
    assert "K0 4\n" in result.output


def test_present_heisenberg_to_file(runner, heisenberg_spec, data_dir, tmp_path):
    """Test the Heisenberg presentation file against its golden copy."""
    source = tmp_path / "heisenberg.spec"
    source.write_text(heisenberg_spec.render(), encoding="utf-8")
    target = tmp_path / "heisenberg.pres"
    result = runner.invoke(main, ["present", str(source), "-o", str(target)])
    assert result.exit_code == 0
    assert target.read_bytes() == (data_dir / "heisenberg_k1_l2.pres").read_bytes()
    assert "p0 layer 2: 0\n" in result.output


def test_present_is_deterministic(runner, spec_path, tmp_path):
    """Test that two runs write byte-identical files."""
    first, second = tmp_path / "first.pres", tmp_path / "second.pres"
    for target in (first, second):
        assert runner.invoke(main, ["present", str(spec_path), "-o", str(target)]).exit_code == 0
    assert first.read_bytes() == second.read_bytes()


def test_present_not_tame(runner, free_path):
    """Test that presenting a non-tame module exits with 1."""
    result = runner.invoke(main, ["present", str(free_path)])
    assert result.exit_code == 1
    assert "error:" in result.output


def test_radius(runner, spec_path):
    """Test the radius certificate output."""
    result = runner.invoke(main, ["radius", str(spec_path)])
    assert result.exit_code == 0
    assert result.output.startswith("radius layer 1\n  p0 1\n")
    assert "  bad (1, 0)\n" in result.output
    assert "  set {(1, -1), (1, 0)}\n" in result.output


def test_verify(runner, spec_path, data_dir):
    """Test verifying the golden presentation."""
    pres = data_dir / "baumslag_k1.pres"
    result = runner.invoke(main, ["verify", str(spec_path), str(pres)])
    assert result.exit_code == 0
    assert result.output.endswith("result pass\n")


def test_verify_failure(runner, spec_path, data_dir, tmp_path):
    """Test that a damaged presentation exits with 1."""
    text = (data_dir / "baumslag_k1.pres").read_text(encoding="utf-8")
    damaged = tmp_path / "damaged.pres"
    damaged.write_text(text.replace("rel RQ y1^-1 x1^-1 y1^1 x1^1", "rel RQ y1^1"), "utf-8")
    result = runner.invoke(main, ["verify", str(spec_path), str(damaged)])
    assert result.exit_code == 1
    assert "FAIL RQ #1" in result.output


@pytest.mark.parametrize("args", [["--mod", "4"], ["--quot", "1"]])
def test_verify_bad_model(runner, spec_path, data_dir, args):
    """Test that invalid model parameters exit with 2."""
    pres = data_dir / "baumslag_k1.pres"
    result = runner.invoke(main, ["verify", str(spec_path), str(pres), *args])
    assert result.exit_code == 2


def test_parse_error_exit_code(runner, tmp_path):
    """Test that malformed specs exit with 2."""
    bad = tmp_path / "bad.spec"
    bad.write_text("[group]\nlayer x\n[module]\ngen a\nann gen=a 1\n", encoding="utf-8")
    result = runner.invoke(main, ["tame", str(bad)])
    assert result.exit_code == 2
    assert "line 5" in result.output


def test_missing_file(runner):
    """Test click's usage error for missing paths."""
    result = runner.invoke(main, ["tame", "does-not-exist.spec"])
    assert result.exit_code == 2


def test_example(runner, baumslag_spec):
    """Test printing built-in examples."""
    result = runner.invoke(main, ["example", "baumslag"])
    assert result.exit_code == 0
    assert result.output == baumslag_spec.render()
    heisenberg = runner.invoke(main, ["example", "heisenberg", "--k", "2", "--ell", "3"])
    assert "comm [x2, y2] = z^1" in heisenberg.output
    bad = runner.invoke(main, ["example", "heisenberg", "--ell", "1"])
    assert bad.exit_code == 2
