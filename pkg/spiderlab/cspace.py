"""
Lift workspace data to the configuration space, which covers the workspace 8 times over
its interior and is branched along the boundary.
"""

import dataclasses
import logging
import typing

import numpy as np

from ._util import Iterable, PointLike, as_xy
from .exceptions import NotInWorkspace, Unreachable, UnsupportedTopology
from .geom import EPS_GEO, Point, circle_circle_intersections
from .morse import MINIMUM, MorseCensus
from .workspace import Workspace, euler_characteristic

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class CspaceCensus(Iterable):
    minima: int
    saddles: int
    maxima: int

    @property
    def euler(self) -> int:
        return self.minima - self.saddles + self.maxima

    @property
    def genus(self) -> typing.Optional[int]:
        """
        Genus of the closed orientable surface with this Euler characteristic.
        """
        if self.euler % 2 or self.euler > 2:
            return None
        return (2 - self.euler) // 2


def knee_positions(
    foot: PointLike, center: PointLike, thigh: float, shin: float
) -> list[Point]:
    """
    Knee placements joining a thigh at ``foot`` to a shin at ``center``; two mirror
    images for bent legs and one for a stretched or folded leg.
    """
    foot, center = as_xy(foot), as_xy(center)
    d = float(np.hypot(*(center - foot)))
    if d < abs(thigh - shin) - EPS_GEO or d > thigh + shin + EPS_GEO:
        raise Unreachable(
            f"{tuple(center)} is {d} away from foot {tuple(foot)}, outside the leg's"
            f" reach [{abs(thigh - shin)}, {thigh + shin}].",
            Point(*center),
        )
    return circle_circle_intersections(foot, thigh, center, shin)


def aligned_legs(x: PointLike, w: Workspace) -> int:
    """
    Number of legs that are stretched or folded straight at ``x``.
    """
    count = 0
    for constraint in w.constraints:
        d = float(constraint.distance(x))
        if abs(d - constraint.lower) <= EPS_GEO or abs(d - constraint.upper) <= EPS_GEO:
            count += 1
    return count


def covering_degree(x: PointLike, w: Workspace) -> int:
    if not w.contains(x):
        raise NotInWorkspace(f"{tuple(as_xy(x))} is not in the workspace.", x)
    return 8 >> aligned_legs(x, w)


def lift_census(census: MorseCensus, w: Workspace) -> CspaceCensus:
    """
    Lift a Morse census of a radial potential on a workspace with three holes. Interior
    minima have 8 preimages, every restriction critical point on the boundary lifts to 4
    saddles and every corner to 2 maxima.
    """
    if w.betti != (1, 3):
        raise UnsupportedTopology(
            f"Lifting needs a disc with 3 holes, the workspace has betti {w.betti}.",
            w.betti,
        )
    boundary = census.of_kind("boundary")
    expected = 2 * len(w.inner_circles) + len(w.outer_arcs)
    if len(boundary) != expected:
        raise UnsupportedTopology(
            f"Expected {expected} restriction critical points on the boundary,"
            f" found {len(boundary)}.",
            w.betti,
        )
    minima = sum(p.classification == MINIMUM for p in census.of_kind("interior"))
    lifted = CspaceCensus(
        minima=8 * minima,
        saddles=4 * len(boundary),
        maxima=2 * len(census.of_kind("corner")),
    )
    logger.info(
        "Lifted census %s: euler %d, genus %s.",
        tuple(lifted),
        lifted.euler,
        lifted.genus,
    )
    return lifted


def covering_euler_characteristic(w: Workspace) -> int:
    """
    Euler characteristic of the configuration space from the stratification of the
    workspace: degree times compactly supported Euler characteristic, summed over the
    open interior, the open boundary arcs and the corners.
    """
    interior = euler_characteristic(w)
    open_arcs = -sum(not arc.full for arc in w.arcs)
    return 8 * interior + 4 * open_arcs + 2 * len(w.corners)
