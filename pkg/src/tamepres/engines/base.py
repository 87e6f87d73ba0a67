"""Base class for all engines."""

from ..config import PresenterConfig
from ..group_ring import GroupRing
from ..nilpotent import NilpotentGroup


class BaseEngine:
    """Base class for all engines."""

    def __init__(
        self,
        group: NilpotentGroup,
        ring: GroupRing,
        config: PresenterConfig | None = None,
    ):
        """
        Initialize base engine.

        Args:
            group: Group Q with collection arithmetic
            ring: Integral group ring of ``group``
            config: Pipeline limits; defaults when omitted
        """
        self._group = group
        self._ring = ring
        self._config = config or PresenterConfig()

    @property
    def group(self) -> NilpotentGroup:
        return self._group

    @property
    def ring(self) -> GroupRing:
        return self._ring

    @property
    def config(self) -> PresenterConfig:
        return self._config

    def _theta_points(self, layer: int, elements: list) -> list[tuple[int, ...]]:
        """ϑ_layer images of group elements."""
        return [self._group.theta(g, layer) for g in elements]
