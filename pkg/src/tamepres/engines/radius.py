"""Positivity margins and the radius constants p0 bounding the conjugator balls."""

import logging
import math
from collections.abc import Sequence
from fractions import Fraction

import numpy as np

from ..exceptions import NeedSmallerBoxesError, NotCoveredError
from ..geometry import LatticeSet, antipodal_cover, close_under_negation
from ..models.reports import RadiusCert, TamenessReport
from ..utils.helpers import iter_lattice_ball, sqrt_upper
from .base import BaseEngine

logger = logging.getLogger(__name__)

# Face of the cube boundary: fixed coordinate, its sign, intervals of the others
_Box = list[tuple[Fraction, Fraction]]


def _norm_sq(x: Sequence[int]) -> int:
    return sum(c * c for c in x)


def _moves_inward(x: Sequence[int], lattice_set: LatticeSet) -> bool:
    """True iff |x + y|^2 <= |x|^2 - 1 for every y in the set."""
    limit = _norm_sq(x) - 1
    return all(_norm_sq([a + b for a, b in zip(x, y)]) <= limit for y in lattice_set.points)


def _is_good(x: Sequence[int], family: Sequence[LatticeSet]) -> bool:
    return any(_moves_inward(x, lattice_set) for lattice_set in family)


class RadiusEngine(BaseEngine):
    """Engine computing positivity margins and radius certificates."""

    # === Positivity margin ===

    @staticmethod
    def _embed(fixed: int, sign: int, point: Sequence[Fraction]) -> list[Fraction]:
        values = list(point)
        values.insert(fixed, Fraction(sign))
        return values

    @staticmethod
    def _box_bound(
        family: Sequence[LatticeSet], fixed: int, sign: int, box: _Box
    ) -> Fraction:
        """max over L of the exact minimum of min_y ⟨u, y⟩ over the box."""
        best: Fraction | None = None
        for lattice_set in family:
            worst: Fraction | None = None
            for y in lattice_set.points:
                others = [c for i, c in enumerate(y) if i != fixed]
                value = Fraction(sign * y[fixed]) + sum(
                    (min(c * lo, c * hi) for c, (lo, hi) in zip(others, box)), Fraction(0)
                )
                worst = value if worst is None else min(worst, value)
            assert worst is not None
            best = worst if best is None else max(best, worst)
        assert best is not None
        return best

    def _center_value(
        self, family: Sequence[LatticeSet], fixed: int, sign: int, box: _Box
    ) -> Fraction:
        center = self._embed(fixed, sign, [(lo + hi) / 2 for lo, hi in box])
        return max(
            min(sum((u * c for u, c in zip(center, y)), Fraction(0)) for y in s.points)
            for s in family
        )

    @staticmethod
    def _split(box: _Box) -> list[_Box]:
        widest = max(range(len(box)), key=lambda d: box[d][1] - box[d][0])
        lo, hi = box[widest]
        middle = (lo + hi) / 2
        left, right = list(box), list(box)
        left[widest] = (lo, middle)
        right[widest] = (middle, hi)
        return [left, right]

    def positivity_margin(self, family: Sequence[LatticeSet], dimension: int) -> Fraction:
        """
        Certified lower bound c > 0 on the cover's positivity.

        For every unit u some L in the negation-closed family has ⟨u, y⟩ >= c for
        all y in L. The faces of the cube boundary are subdivided until an exact
        interval bound is positive on each box; boxes are refined further while
        the bound is below half the value at the box center.

        Args:
            family: Lattice sets; negations are added
            dimension: Layer rank

        Returns:
            Positive rational margin

        Raises:
            NotCoveredError: If the family does not cover the sphere
            NeedSmallerBoxesError: If the subdivision cap is reached
        """
        closed = close_under_negation(family)
        cover = antipodal_cover(closed, dimension)
        if not cover.covered:
            assert cover.witness is not None
            raise NotCoveredError(cover.witness)

        cap = self._config.subdivision_depth
        refine = self._config.refine_depth
        unit = (Fraction(-1), Fraction(1))
        stack = [
            (fixed, sign, [unit] * (dimension - 1), 0, 0)
            for fixed in range(dimension)
            for sign in (1, -1)
        ]
        margin: Fraction | None = None
        boxes = 0
        while stack:
            fixed, sign, box, depth, extra = stack.pop()
            boxes += 1
            bound = self._box_bound(closed, fixed, sign, box)
            if bound > 0:
                if box and extra < refine and 2 * bound < self._center_value(
                    closed, fixed, sign, box
                ):
                    stack.extend((fixed, sign, c, depth + 1, extra + 1) for c in self._split(box))
                    continue
                norm_sq = 1 + sum(max(lo * lo, hi * hi) for lo, hi in box)
                value = bound / sqrt_upper(norm_sq)
                margin = value if margin is None else min(margin, value)
                continue
            if depth >= cap:
                raise NeedSmallerBoxesError(depth)
            stack.extend((fixed, sign, c, depth + 1, extra) for c in self._split(box))

        assert margin is not None
        logger.debug("margin %s from %d boxes", margin, boxes)
        return margin

    # === Radius ===

    def compute_p0(
        self, family: Sequence[LatticeSet], dimension: int, layer: int = 1
    ) -> RadiusCert:
        """
        Smallest p0 such that every lattice x with |x|^2 > p0 moves inward.

        Args:
            family: Certificate lattice sets of the layer; negations are added
            dimension: Layer rank
            layer: Layer index recorded in the certificate

        Returns:
            RadiusCert with the exhaustive scan data

        Raises:
            NotCoveredError: If the family does not cover the sphere
        """
        closed = close_under_negation(family)
        margin = self.positivity_margin(closed, dimension)
        max_norm_sq = max(lattice_set.max_norm_sq() for lattice_set in closed)
        tail_bound = Fraction(max_norm_sq + 1) / (2 * margin)
        scan_radius_sq = math.ceil(tail_bound) ** 2

        bad = [
            x
            for x in iter_lattice_ball(dimension, scan_radius_sq)
            if any(x) and not _is_good(x, closed)
        ]
        p0 = max((_norm_sq(x) for x in bad), default=0)
        logger.info("layer %d: p0 = %d (scan to %d, %d bad)", layer, p0, scan_radius_sq, len(bad))
        return RadiusCert(
            layer=layer,
            p0=p0,
            margin=margin,
            tail_bound=tail_bound,
            max_norm_sq=max_norm_sq,
            scan_radius_sq=scan_radius_sq,
            bad_points=tuple(bad),
            family=tuple(closed),
        )

    def compute_radii(self, report: TamenessReport) -> list[RadiusCert]:
        """RadiusCert for every layer of a covered report."""
        return [
            self.compute_p0(layer.family, layer.rank, layer.layer) for layer in report.layers
        ]

    # === Audit ===

    def replay(self, cert: RadiusCert) -> bool:
        """
        Re-check a certificate point by point.

        Uses the expanded form ``2⟨x, y⟩ + |y|^2 <= -1`` of the inward move.

        Returns:
            True iff the stored verdicts, p0 and the tail bound are all reproduced
        """
        family = cert.family
        if cert.tail_bound != Fraction(cert.max_norm_sq + 1) / (2 * cert.margin):
            return False
        if cert.scan_radius_sq < cert.tail_bound**2:
            return False
        if cert.max_norm_sq != max(s.max_norm_sq() for s in family):
            return False

        dimension = family[0].dimension
        bad = set(cert.bad_points)
        for x in iter_lattice_ball(dimension, cert.scan_radius_sq):
            if not any(x):
                continue
            good = any(
                all(2 * sum(a * b for a, b in zip(x, y)) + _norm_sq(y) <= -1 for y in s.points)
                for s in family
            )
            if good == (x in bad):
                return False
            if not good and _norm_sq(x) > cert.p0:
                return False
        return cert.p0 == max((_norm_sq(x) for x in bad), default=0)

    def tail_spot_check(
        self, cert: RadiusCert, samples: int | None = None, seed: int = 0
    ) -> bool:
        """
        Probe random lattice points just beyond the scan radius.

        Args:
            cert: Radius certificate
            samples: Number of points; defaults to the configured ``tail_samples``
            seed: Seed of the numpy generator

        Returns:
            True iff every sampled x with R*^2 < |x|^2 <= (R*+3)^2 moves inward
        """
        count = self._config.tail_samples if samples is None else samples
        dimension = cert.family[0].dimension
        inner = cert.tail_bound**2
        outer = (cert.tail_bound + 3) ** 2
        bound = math.ceil(cert.tail_bound) + 3
        rng = np.random.default_rng(seed)
        checked = 0
        attempts = 0
        while checked < count and attempts < 1000 * max(count, 1):
            attempts += 1
            x = tuple(int(c) for c in rng.integers(-bound, bound + 1, size=dimension))
            if not inner < _norm_sq(x) <= outer:
                continue
            checked += 1
            if not _is_good(x, cert.family):
                logger.warning("tail point %s does not move inward", x)
                return False
        logger.debug("tail spot check: %d points", checked)
        return True
