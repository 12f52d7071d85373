"""
Workspace of a spider: the intersection of the three closed reach annuli, described by
its boundary arcs, corners and Betti numbers.
"""

import dataclasses
import itertools
import logging
import math
import typing

import numpy as np

from ._util import PointLike, as_xy
from .constraints import AnnulusConstraint, ConstraintCircle
from .definitions import SpiderSpec
from .exceptions import DegenerateTangency, EmptyWorkspace, WorkspaceError
from .geom import (
    EPS_GEO,
    TAU,
    Point,
    as_point,
    ccw_angle,
    circle_circle_intersections,
    rotate90,
)

logger = logging.getLogger(__name__)

CHAIN_TOL = 1e-7


@dataclasses.dataclass(frozen=True)
class Arc:
    """
    Boundary arc traversed with the workspace on its left: counterclockwise along outer
    circles (positive sweep) and clockwise along inner circles (negative sweep).
    """

    index: int
    circle: ConstraintCircle
    start: float
    sweep: float

    @property
    def full(self) -> bool:
        return abs(self.sweep) >= TAU - 1e-12

    @property
    def end(self) -> float:
        return self.start + self.sweep

    @property
    def label(self) -> str:
        return f"{self.index}:{self.circle.label}"

    def point(self, fraction):
        return self.circle.point(self.start + np.asarray(fraction) * self.sweep)

    @property
    def start_point(self) -> Point:
        return as_point(self.point(0.0))

    @property
    def end_point(self) -> Point:
        return as_point(self.point(1.0))

    def fraction(self, theta: float) -> float:
        """
        Position of the polar angle ``theta`` along the arc, in ``[0, 1)`` of the sweep
        when it lies on the arc.
        """
        offset = ((theta - self.start) * math.copysign(1.0, self.sweep)) % TAU
        return offset / abs(self.sweep)

    def contains_angle(self, theta: float, margin: float = 0.0) -> bool:
        """
        Whether the polar angle ``theta`` lies in the open arc, ``margin`` radians away
        from its endpoints.
        """
        if self.full:
            return True
        offset = ((theta - self.start) * math.copysign(1.0, self.sweep)) % TAU
        return margin < offset < abs(self.sweep) - margin

    def direction(self, theta: float):
        """
        Unit tangent in the direction of traversal at polar angle ``theta``.
        """
        return math.copysign(1.0, self.sweep) * np.array(
            [-math.sin(theta), math.cos(theta)]
        )

    def inward_normal(self, theta: float):
        return rotate90(self.direction(theta))

    def area_term(self) -> float:
        """
        Contribution of the arc to the oriented area integral of its component.
        """
        (cx, cy), r = self.circle.center, self.circle.radius
        t0, t1 = self.start, self.end
        return 0.5 * (
            r * r * self.sweep
            + r * cx * (math.sin(t1) - math.sin(t0))
            - r * cy * (math.cos(t1) - math.cos(t0))
        )


@dataclasses.dataclass(frozen=True)
class Corner:
    """
    Junction where the boundary leaves arc ``incoming`` and continues along ``outgoing``.
    """

    location: Point
    incoming: Arc
    outgoing: Arc

    def rays(self):
        """
        The two boundary rays of the interior tangent cone. The cone opens
        counterclockwise from the first ray to the second.
        """
        first = self.outgoing.direction(self.outgoing.start)
        second = -self.incoming.direction(self.incoming.end)
        return first, second

    @property
    def opening(self) -> float:
        return ccw_angle(*self.rays())

    @property
    def exterior_angle(self) -> float:
        """
        Signed turn of the boundary tangent at the corner.
        """
        u = self.incoming.direction(self.incoming.end)
        v = self.outgoing.direction(self.outgoing.start)
        return math.atan2(u[0] * v[1] - u[1] * v[0], float(np.dot(u, v)))


@dataclasses.dataclass(frozen=True)
class BoundaryComponent:
    arcs: tuple[Arc, ...]
    corners: tuple[Corner, ...]
    signed_area: float

    @property
    def is_hole(self) -> bool:
        return self.signed_area < 0

    @property
    def turning(self) -> float:
        return sum(arc.sweep for arc in self.arcs) + sum(
            corner.exterior_angle for corner in self.corners
        )


class Workspace:
    """
    Closed workspace of a spider. Instances are immutable once built; use
    :func:`build_workspace` to construct them.
    """

    def __init__(
        self,
        spec: SpiderSpec,
        arcs: tuple[Arc, ...],
        components: tuple[BoundaryComponent, ...],
    ):
        self._spec = spec
        self._constraints = spec.constraints()
        self._arcs = tuple(arcs)
        self._components = tuple(components)

    def __repr__(self):
        return (
            f"<Workspace betti={self.betti} arcs={len(self._arcs)}"
            f" corners={len(self.corners)}>"
        )

    @property
    def spec(self) -> SpiderSpec:
        return self._spec

    @property
    def constraints(self) -> tuple[AnnulusConstraint, ...]:
        return self._constraints

    @property
    def arcs(self) -> tuple[Arc, ...]:
        return self._arcs

    @property
    def components(self) -> tuple[BoundaryComponent, ...]:
        return self._components

    @property
    def corners(self) -> tuple[Corner, ...]:
        return tuple(itertools.chain.from_iterable(c.corners for c in self._components))

    @property
    def outer_arcs(self) -> tuple[Arc, ...]:
        return tuple(a for a in self._arcs if a.circle.kind == "outer")

    @property
    def inner_circles(self) -> tuple[ConstraintCircle, ...]:
        """
        Inner circles that bound a hole in their entirety.
        """
        return tuple(
            a.circle for a in self._arcs if a.circle.kind == "inner" and a.full
        )

    @property
    def betti(self) -> tuple[int, int]:
        holes = sum(c.is_hole for c in self._components)
        return len(self._components) - holes, holes

    @property
    def is_empty(self) -> bool:
        return not self._arcs

    def contains(self, x: PointLike):
        """
        Closed membership test, vectorized over stacked points.
        """
        x = as_xy(x)
        ok = np.ones(x.shape[:-1], dtype=bool)
        for constraint in self._constraints:
            ok &= constraint.contains(x)
        return ok if ok.ndim else bool(ok)

    def bounds(self, pad: float = 0.0) -> tuple[float, float, float, float]:
        """
        Box enclosing the workspace: the intersection of the outer discs' boxes.
        """
        lo = np.max([np.asarray(c.center) - c.upper for c in self._constraints], axis=0)
        hi = np.min([np.asarray(c.center) + c.upper for c in self._constraints], axis=0)
        return (lo[0] - pad, lo[1] - pad, hi[0] + pad, hi[1] + pad)

    def arc_at(self, x: PointLike, tol: float = 1e-7) -> Arc:
        """
        The boundary arc passing through ``x``.
        """
        x = as_xy(x)
        best, best_gap = None, tol
        for arc in self._arcs:
            offset = x - np.asarray(arc.circle.center)
            gap = abs(np.hypot(*offset) - arc.circle.radius)
            if gap <= best_gap and arc.contains_angle(arc.circle.angle(x), -1e-9):
                best, best_gap = arc, gap
        if best is None:
            raise WorkspaceError(f"{tuple(x)} is not on the workspace boundary.")
        return best


def build_workspace(spec: SpiderSpec, allow_empty: bool = False) -> Workspace:
    constraints = spec.constraints()
    circles = [c for con in constraints for c in (con.outer, con.inner)]
    _check_tangency(circles)
    arcs = []
    for circle in circles:
        for lo, hi in _split_circle(circle, circles):
            mid = circle.point(0.5 * (lo + hi))
            if not all(con.contains(mid) for con in constraints):
                continue
            if circle.kind == "outer":
                arcs.append(Arc(len(arcs), circle, lo, hi - lo))
            else:
                arcs.append(Arc(len(arcs), circle, hi % TAU, lo - hi))
    if not arcs:
        if not allow_empty:
            raise EmptyWorkspace("No point satisfies all three reach constraints.")
        logger.info("Workspace of %s is empty.", spec)
        return Workspace(spec, (), ())
    components = _chain(arcs)
    workspace = Workspace(spec, tuple(arcs), components)
    logger.debug(
        "Built workspace with %d arcs, %d corners, betti %s.",
        len(arcs),
        len(workspace.corners),
        workspace.betti,
    )
    return workspace


def _check_tangency(circles: list[ConstraintCircle]):
    for c1, c2 in itertools.combinations(circles, 2):
        if c1.foot == c2.foot:
            continue
        d = float(np.hypot(*(np.asarray(c1.center) - np.asarray(c2.center))))
        if (
            abs(d - (c1.radius + c2.radius)) <= EPS_GEO
            or abs(d - abs(c1.radius - c2.radius)) <= EPS_GEO
        ):
            raise DegenerateTangency(
                f"Constraint circles {c1.label} and {c2.label} are tangent.",
                (c1, c2),
            )


def _split_circle(circle: ConstraintCircle, circles: list[ConstraintCircle]):
    cuts = []
    for other in circles:
        if other.foot == circle.foot:
            continue
        for p in circle_circle_intersections(
            circle.center, circle.radius, other.center, other.radius
        ):
            cuts.append(circle.angle(p))
    cuts = sorted(cuts)
    cuts = [t for i, t in enumerate(cuts) if i == 0 or t - cuts[i - 1] > 1e-12]
    if not cuts:
        return [(0.0, TAU)]
    return [(lo, hi) for lo, hi in zip(cuts, cuts[1:] + [cuts[0] + TAU])]


def _chain(arcs: list[Arc]) -> tuple[BoundaryComponent, ...]:
    partial = [a for a in arcs if not a.full]
    successor = {}
    for arc in partial:
        end = np.asarray(arc.end_point)
        gaps = [
            (float(np.hypot(*(end - np.asarray(o.start_point)))), o.index)
            for o in partial
            if o.index != arc.index
        ]
        gap, index = min(gaps, default=(math.inf, None))
        if gap > CHAIN_TOL:
            raise WorkspaceError(f"Boundary arc {arc.label} does not close up.")
        successor[arc.index] = index
    components = [
        BoundaryComponent((arc,), (), arc.area_term()) for arc in arcs if arc.full
    ]
    visited = set()
    for arc in partial:
        if arc.index in visited:
            continue
        chain, corners = [], []
        current = arc
        while current.index not in visited:
            visited.add(current.index)
            chain.append(current)
            nxt = arcs[successor[current.index]]
            location = as_point(
                0.5 * (np.asarray(current.end_point) + np.asarray(nxt.start_point))
            )
            corners.append(Corner(location, current, nxt))
            current = nxt
        area = sum(a.area_term() for a in chain)
        components.append(BoundaryComponent(tuple(chain), tuple(corners), area))
    components.sort(key=lambda c: (c.is_hole, min(a.index for a in c.arcs)))
    return tuple(components)


def contains(w: Workspace, x: PointLike):
    return w.contains(x)


def topology(w: Workspace) -> tuple[int, int]:
    return w.betti


def boundary_arcs(w: Workspace) -> tuple[BoundaryComponent, ...]:
    """
    Boundary components, each a cyclically ordered list of arcs and the corners between
    them. Outer components run counterclockwise and holes clockwise.
    """
    if w.is_empty:
        raise EmptyWorkspace("An empty workspace has no boundary.")
    return w.components


def euler_characteristic(w: Workspace) -> int:
    """
    Euler characteristic from the total turning of the boundary, independent of the
    orientation bookkeeping behind :attr:`Workspace.betti`.
    """
    total = sum(c.turning for c in w.components)
    return round(total / TAU)
