"""
tamepres - finite presentations of split extensions of tame modules over nilpotent groups.

Usage:
    >>> from tamepres import Workbench, catalog
    >>> bench = Workbench.from_spec_file(catalog.baumslag(1))
    >>> bench.check_tame().is_tame
    True
    >>> print(bench.present().render())
"""

from . import catalog
from .config import PresenterConfig
from .exceptions import (
    DimensionMismatchError,
    InvalidSpecError,
    MissingGeneratorError,
    ModelParameterError,
    NeedSmallerBoxesError,
    NonLinearTailsError,
    NonTerminatingCollectionError,
    NotCoveredError,
    NotInLayerError,
    NotTameError,
    RelatorFailsError,
    SpecParseError,
    TamePresError,
    ZeroAnnihilatorError,
    ZeroDirectionError,
)
from .geometry import CoverResult, LatticeSet, LayerCharacter, antipodal_cover, cone_contains
from .group_ring import GroupRing, RingElement
from .models.group import GroupSpec
from .models.module import Annihilator, ModuleRelator, ModuleSpec
from .models.presentation import Presentation, RelatorOrigin, TaggedRelator
from .models.reports import (
    DiagonalCertificate,
    LayerReport,
    RadiusCert,
    SelfExpression,
    TamenessReport,
    VerificationReport,
)
from .nilpotent import GroupElement, NilpotentGroup, build_group_spec
from .spec_file import SpecFile
from .words import Word
from .workbench import Workbench

__version__ = "0.1.0"
__all__ = [
    "Workbench",
    "PresenterConfig",
    "catalog",
    # Algebra
    "Word",
    "GroupElement",
    "NilpotentGroup",
    "build_group_spec",
    "RingElement",
    "GroupRing",
    "LayerCharacter",
    "LatticeSet",
    "CoverResult",
    "cone_contains",
    "antipodal_cover",
    # Models
    "GroupSpec",
    "ModuleSpec",
    "Annihilator",
    "ModuleRelator",
    "SelfExpression",
    "DiagonalCertificate",
    "LayerReport",
    "TamenessReport",
    "RadiusCert",
    "Presentation",
    "RelatorOrigin",
    "TaggedRelator",
    "VerificationReport",
    "SpecFile",
    # Exceptions
    "TamePresError",
    "InvalidSpecError",
    "SpecParseError",
    "NonTerminatingCollectionError",
    "NotInLayerError",
    "ZeroDirectionError",
    "DimensionMismatchError",
    "ZeroAnnihilatorError",
    "MissingGeneratorError",
    "NotCoveredError",
    "NeedSmallerBoxesError",
    "NotTameError",
    "NonLinearTailsError",
    "ModelParameterError",
    "RelatorFailsError",
]
