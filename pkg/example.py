"""Example usage of tamepres."""

from tamepres import TamePresError, Workbench, catalog


def check_tameness(bench: Workbench):
    print("Checking tameness...")
    print(bench.render_report())


def show_radii(bench: Workbench):
    print("Computing radius certificates...")
    try:
        for cert in bench.compute_radii():
            print(cert.render())
            print(f"  replay: {'ok' if bench.radius.replay(cert) else 'FAILED'}")
    except TamePresError as e:
        print(f"Failed to compute radii: {e}")
    print()


def build_presentation(bench: Workbench):
    print("Building presentation...")
    try:
        presentation = bench.present()
        for origin, count in presentation.counts().items():
            print(f"  {origin.value}: {count} relators")
        print()
        print(presentation.render())

        # Every relator must evaluate trivially in a finite quotient
        report = bench.verify(presentation)
        print(report.render())
    except TamePresError as e:
        print(f"Failed to build presentation: {e}")
    print()


def main():
    for name, spec in [
        ("Baumslag k=1", catalog.baumslag(1)),
        ("Heisenberg k=1, ell=2", catalog.heisenberg(1, 2)),
        ("Free module over Z^2", catalog.free_module(2)),
    ]:
        print(f"=== {name} ===\n")
        bench = Workbench.from_spec_file(spec)
        check_tameness(bench)
        if bench.check_tame().is_tame:
            show_radii(bench)
            build_presentation(bench)


if __name__ == "__main__":
    main()
