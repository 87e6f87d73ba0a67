"""Command-line interface.

Exit codes: 0 success or certified tame, 1 negative verdict or failed
verification, 2 usage, parse, validation or consistency errors.
"""

import logging
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

import click

from . import catalog
from .exceptions import NotCoveredError, NotTameError, RelatorFailsError, TamePresError
from .models.presentation import Presentation
from .workbench import Workbench

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


@contextmanager
def _exit_codes() -> Iterator[None]:
    """Map library exceptions to exit codes."""
    try:
        yield
    except (NotTameError, NotCoveredError, RelatorFailsError) as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(EXIT_NEGATIVE)
    except (TamePresError, ValueError) as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(EXIT_ERROR)


_spec_argument = click.argument("spec_path", type=click.Path(exists=True, dir_okay=False))


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log debug output to stderr")
def main(verbose: bool) -> None:
    """Certify tameness and build finite presentations of Q ⋉ A."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


@main.command()
@_spec_argument
@click.option("--cert-cap", type=int, default=None, help="Diagonal certificates per layer")
def tame(spec_path: str, cert_cap: int | None) -> None:
    """Report whether the module is certified tame."""
    with _exit_codes():
        bench = Workbench.from_spec_file(spec_path, {"cert_cap": cert_cap})
        report = bench.check_tame()
        click.echo(bench.render_report(), nl=False)
    sys.exit(EXIT_OK if report.is_tame else EXIT_NEGATIVE)


@main.command()
@_spec_argument
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Presentation file")
def present(spec_path: str, output: str | None) -> None:
    """Build the finite presentation."""
    with _exit_codes():
        bench = Workbench.from_spec_file(spec_path)
        presentation = bench.present()
    text = presentation.render()
    assert presentation.metadata is not None
    summary = presentation.metadata.render() + "".join(
        f"{origin.value} {count}\n" for origin, count in presentation.counts().items()
    )
    if output:
        Path(output).write_text(text, encoding="utf-8", newline="\n")
        click.echo(summary, nl=False)
    else:
        click.echo(text, nl=False)
        click.echo(summary, nl=False, err=True)


@main.command()
@_spec_argument
def radius(spec_path: str) -> None:
    """Print the radius certificate of every layer."""
    with _exit_codes():
        bench = Workbench.from_spec_file(spec_path)
        certs = bench.compute_radii()
    for cert in certs:
        click.echo(cert.render(), nl=False)


@main.command()
@_spec_argument
@click.argument("presentation_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--mod", "modulus", type=int, default=None, help="Prime coefficient modulus m")
@click.option("--quot", "quotient", type=int, default=None, help="Exponent modulus N")
def verify(
    spec_path: str, presentation_path: str, modulus: int | None, quotient: int | None
) -> None:
    """Evaluate every relator in a finite model of Q ⋉ A."""
    with _exit_codes():
        bench = Workbench.from_spec_file(
            spec_path, {"model_modulus": modulus, "model_quotient": quotient}
        )
        presentation = Presentation.parse(Path(presentation_path).read_text(encoding="utf-8"))
        report = bench.verify(presentation)
        click.echo(report.render(), nl=False)
        report.raise_for_failures()


@main.command()
@click.argument("name", type=click.Choice(sorted(catalog.EXAMPLES)))
@click.option("--k", "k", type=int, default=1, help="Number of generator pairs")
@click.option("--ell", type=int, default=2, help="Central annihilator constant")
@click.option("--rank", type=int, default=2, help="Rank of the free abelian group")
def example(name: str, k: int, ell: int, rank: int) -> None:
    """Print a built-in example spec."""
    with _exit_codes():
        if name == "baumslag":
            spec = catalog.baumslag(k)
        elif name == "heisenberg":
            spec = catalog.heisenberg(k, ell)
        else:
            spec = catalog.free_module(rank)
    click.echo(spec.render(), nl=False)


if __name__ == "__main__":
    main()
