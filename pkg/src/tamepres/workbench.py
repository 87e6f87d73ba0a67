"""Main tamepres workbench."""

import logging
from collections.abc import Mapping
from pathlib import Path

from .config import PresenterConfig
from .engines.presenter import PresenterEngine
from .engines.radius import RadiusEngine
from .engines.tameness import TamenessEngine
from .engines.verifier import FiniteModel, VerifierEngine
from .exceptions import NotTameError
from .group_ring import GroupRing
from .models.group import GroupSpec
from .models.module import ModuleSpec
from .models.presentation import Presentation
from .models.reports import RadiusCert, TamenessReport, VerificationReport
from .nilpotent import NilpotentGroup
from .spec_file import SpecFile

logger = logging.getLogger(__name__)


class Workbench:
    """Facade running the tameness check, radius computation, assembly and verification."""

    def __init__(
        self,
        group: GroupSpec,
        module: ModuleSpec,
        config: PresenterConfig | None = None,
    ):
        """
        Initialize the workbench.

        Args:
            group: Polycyclic presentation of Q
            module: Module generators and relations
            config: Pipeline limits

        Raises:
            InvalidSpecError: If the module does not fit the group

        Example:
            >>> bench = Workbench.from_spec_file(catalog.baumslag(1))
            >>> bench.check_tame().is_tame
            True
        """
        self._config = config or PresenterConfig()
        self.group = NilpotentGroup(group, self._config.collection_fuel)
        self.ring = GroupRing(self.group)
        self.module = module
        module.validate_against(self.group)
        self._report: TamenessReport | None = None

        self._init_engines()

    def _init_engines(self) -> None:
        """Initialize all engines."""
        self.tameness = TamenessEngine(self.group, self.ring, self._config)
        self.radius = RadiusEngine(self.group, self.ring, self._config)
        self.presenter = PresenterEngine(self.group, self.ring, self._config)
        self.verifier = VerifierEngine(self.group, self.ring, self._config)

    @classmethod
    def from_spec_file(
        cls,
        spec: SpecFile | str | Path,
        overrides: Mapping[str, int | None] | None = None,
    ) -> "Workbench":
        """
        Create a workbench from a spec file.

        Args:
            spec: Parsed SpecFile or a path to one
            overrides: Config fields taking precedence over the file's options

        Returns:
            Workbench instance
        """
        if not isinstance(spec, SpecFile):
            spec = SpecFile.from_path(spec)
        config = PresenterConfig().with_options(spec.options.as_config())
        if overrides:
            config = config.with_options(overrides)
        return cls(spec.group, spec.module, config)

    @property
    def config(self) -> PresenterConfig:
        return self._config

    def check_tame(self) -> TamenessReport:
        """Tameness report; computed once."""
        if self._report is None:
            self._report = self.tameness.check_tame(self.module)
        return self._report

    def render_report(self) -> str:
        """Text of the tameness report."""
        return self.check_tame().render(self.ring)

    def compute_radii(self) -> list[RadiusCert]:
        """
        Radius certificates for every layer.

        Raises:
            NotTameError: If the module is not certified tame
        """
        report = self.check_tame()
        if not report.is_tame:
            raise NotTameError("Module is not certified tame; radii are undefined")
        return self.radius.compute_radii(report)

    def present(self) -> Presentation:
        """
        Finite presentation of Q ⋉ A.

        Raises:
            NotTameError: If the module is not certified tame
        """
        report = self.check_tame()
        if not report.is_tame:
            raise NotTameError("Module is not certified tame; no presentation")
        return self.presenter.assemble(self.module, report, self.radius.compute_radii(report))

    def build_model(self, modulus: int | None = None, quotient: int | None = None) -> FiniteModel:
        """Finite model with the given or configured parameters."""
        return self.verifier.build_finite_model(self.module, modulus, quotient)

    def verify(
        self,
        presentation: Presentation,
        modulus: int | None = None,
        quotient: int | None = None,
    ) -> VerificationReport:
        """Evaluate a presentation's relators in a finite model."""
        model = self.build_model(modulus, quotient)
        return self.verifier.verify_presentation(presentation, model)
