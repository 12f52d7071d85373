"""
Critical points of a potential on a workspace with boundary and corners, classified by
the rules for manifolds with corners, and the resulting Morse census.
"""

import dataclasses
import logging
import math
import typing

import numpy as np
import scipy.optimize

from ._util import Iterable, PointLike, SearchOptions, as_xy, grid_points
from .exceptions import NonMorsePoint, PoleAtFoot, TangentGradient
from .geom import EPS_GEO, Point, as_point, ccw_angle, line_circle_intersections
from .potentials import Potential
from .workspace import Arc, Corner, Workspace, boundary_arcs

logger = logging.getLogger(__name__)

Kind = typing.Literal["interior", "boundary", "corner"]
Cell = typing.Literal["none", "0-cell", "1-cell", "2-cell"]

NO_CHANGE = "no-change"
MINIMUM = "minimum"
SADDLE = "saddle"
MAXIMUM = "maximum"

_INDEX_CLASS = {0: MINIMUM, 1: SADDLE, 2: MAXIMUM}
_CLASS_INDEX = {NO_CHANGE: None, MINIMUM: 0, SADDLE: 1, MAXIMUM: 2}

DEGENERACY_TOL = 1e-10
BOUNDARY_SCAN = 1440
ARC_MARGIN = 1e-9


@dataclasses.dataclass(frozen=True)
class CriticalPoint(Iterable):
    location: Point
    kind: Kind
    index: typing.Optional[int]
    """
    Morse index of the attached cell, ``None`` for points that do not change the
    topology of the sublevel sets.
    """
    value: float
    cell: Cell
    classification: str
    arc: typing.Optional[int] = None
    """
    Index of the boundary arc carrying a boundary point.
    """

    @property
    def is_topological(self) -> bool:
        return self.index is not None


def _critical(location, kind, classification, value, arc=None) -> CriticalPoint:
    index = _CLASS_INDEX[classification]
    return CriticalPoint(
        location=as_point(location),
        kind=kind,
        index=index,
        value=float(value),
        cell="none" if index is None else f"{index}-cell",
        classification=classification,
        arc=arc,
    )


@dataclasses.dataclass(frozen=True)
class MorseCensus:
    mu0: int
    mu1: int
    mu2: int
    points: tuple[CriticalPoint, ...] = ()

    @property
    def mu(self) -> tuple[int, int, int]:
        return self.mu0, self.mu1, self.mu2

    @property
    def euler(self) -> int:
        return self.mu0 - self.mu1 + self.mu2

    def of_kind(self, kind: Kind) -> tuple[CriticalPoint, ...]:
        return tuple(p for p in self.points if p.kind == kind)


def find_gradient_zeros(
    potential: Potential,
    bounds,
    options: typing.Optional[SearchOptions] = None,
    default_n: int = 256,
):
    """
    Zeros of the gradient inside ``bounds``: sign changes of both gradient components
    over the cells of a grid seed Newton iterations, whose limits are deduplicated and
    sorted by location. Returns the zeros and their gradient residuals.
    """
    options = options or SearchOptions()
    n = options.resolution(default_n)
    nodes = grid_points(bounds, n)
    grad = potential.sample_gradient(nodes)
    centers = 0.25 * (nodes[:-1, :-1] + nodes[1:, :-1] + nodes[:-1, 1:] + nodes[1:, 1:])
    seeds = centers[_sign_change_cells(grad)]
    logger.debug("Polishing %d seeds on a %dx%d grid.", len(seeds), n, n)
    zeros = []
    residuals = []
    xmin, ymin, xmax, ymax = bounds
    span = max(xmax - xmin, ymax - ymin)
    for seed in seeds:
        x, residual = _newton(potential, seed, options)
        if x is None or residual > options.accept_tol:
            continue
        outside = (
            x[0] < xmin - 1e-9 * span
            or x[0] > xmax + 1e-9 * span
            or x[1] < ymin - 1e-9 * span
            or x[1] > ymax + 1e-9 * span
        )
        if outside:
            continue
        if any(_same_zero(potential, x, z, options) for z in zeros):
            continue
        zeros.append(x)
        residuals.append(residual)
    order = sorted(range(len(zeros)), key=lambda i: (zeros[i][0], zeros[i][1]))
    return [zeros[i] for i in order], [residuals[i] for i in order]


def _same_zero(potential: Potential, x, z, options: SearchOptions) -> bool:
    """
    Whether two Newton limits are one zero: within ``dedup_radius`` relative to their
    distance from the origin, or joined by a segment along which the gradient stays
    below ten times the acceptance residual. The latter merges limits that stop apart
    where the field is nearly flat.
    """
    gap = np.hypot(*(x - z))
    if gap <= options.dedup_radius * max(1.0, np.hypot(*x), np.hypot(*z)):
        return True
    segment = z + np.linspace(0, 1, 9)[:, None] * (x - z)
    norms = np.hypot(*potential.sample_gradient(segment).T)
    return bool(np.all(norms <= 10 * options.accept_tol))


def _sign_change_cells(grad):
    """
    Mask of the grid cells where both gradient components change sign, dilated by one
    cell.
    """
    gx, gy = grad[..., 0], grad[..., 1]
    candidates = np.ones(gx[:-1, :-1].shape, dtype=bool)
    for g in (gx, gy):
        corners = np.stack([g[:-1, :-1], g[1:, :-1], g[:-1, 1:], g[1:, 1:]])
        with np.errstate(invalid="ignore"):
            candidates &= np.min(corners, axis=0) <= 0
            candidates &= np.max(corners, axis=0) >= 0
    dilated = candidates.copy()
    dilated[1:, :] |= candidates[:-1, :]
    dilated[:-1, :] |= candidates[1:, :]
    dilated[:, 1:] |= candidates[:, :-1]
    dilated[:, :-1] |= candidates[:, 1:]
    return dilated


def _newton(potential: Potential, seed, options: SearchOptions):
    x = np.array(seed, dtype=float)
    try:
        residual = math.inf
        for _ in range(options.newton_steps):
            g = potential.gradient(x)
            residual = float(np.hypot(*g))
            if residual <= options.newton_tol * (1 + float(np.hypot(*x))):
                break
            step = np.linalg.solve(potential.hessian(x), g)
            x = x - step
            if not np.all(np.isfinite(x)) or np.hypot(*step) > 1e3:
                return None, math.inf
        else:
            residual = float(np.hypot(*potential.gradient(x)))
        return x, residual
    except (PoleAtFoot, np.linalg.LinAlgError):
        return None, math.inf


def hessian_index(hessian, point=None, tol: float = DEGENERACY_TOL) -> int:
    """
    Number of negative Hessian eigenvalues; raises :class:`NonMorsePoint` when the
    Hessian is singular.
    """
    if abs(np.linalg.det(hessian)) < tol:
        raise NonMorsePoint(
            f"Degenerate critical point at {point}: det Hessian is"
            f" {np.linalg.det(hessian):.3g}.",
            point,
        )
    return int(np.sum(np.linalg.eigvalsh(hessian) < 0))


def interior_critical_points(
    potential: Potential, w: Workspace, options: typing.Optional[SearchOptions] = None
) -> list[CriticalPoint]:
    options = options or SearchOptions()
    zeros, _ = find_gradient_zeros(potential, w.bounds(), options)
    points = []
    for x in zeros:
        if not w.contains(x):
            continue
        index = hessian_index(potential.hessian(x), as_point(x), options.degenerate_det)
        points.append(
            _critical(x, "interior", _INDEX_CLASS[index], potential.value(x))
        )
    return points


def boundary_restriction_criticals(
    potential: Potential, w: Workspace
) -> list[tuple[Arc, Point]]:
    """
    Critical points of the potential restricted to each boundary arc, excluding the arc
    endpoints. Radial potentials are solved in closed form on the line through the arc
    center and the potential's center; other potentials by scanning the tangential
    derivative and bracketing its roots.
    """
    found = []
    for component in boundary_arcs(w):
        for arc in component.arcs:
            center = potential.radial_center
            if center is not None:
                points = _radial_restriction(arc, center)
            else:
                points = _scanned_restriction(potential, arc)
            points.sort(key=lambda p: arc.fraction(arc.circle.angle(p)))
            found.extend((arc, p) for p in points)
    return found


def _radial_restriction(arc: Arc, center: Point) -> list[Point]:
    circle = arc.circle
    if np.hypot(*(np.asarray(center) - np.asarray(circle.center))) < EPS_GEO:
        logger.warning(
            "Potential is constant along %s; no isolated restriction points.", arc.label
        )
        return []
    return [
        p
        for p in line_circle_intersections(
            circle.center, center, circle.center, circle.radius
        )
        if arc.contains_angle(circle.angle(p), ARC_MARGIN)
    ]


def _tangential(potential: Potential, arc: Arc, theta):
    circle = arc.circle
    p = circle.point(theta)
    tangent = np.stack((-np.sin(theta), np.cos(theta)), axis=-1)
    return circle.radius * np.sum(potential.sample_gradient(p) * tangent, axis=-1)


def _scanned_restriction(potential: Potential, arc: Arc) -> list[Point]:
    n = max(16, int(BOUNDARY_SCAN * abs(arc.sweep) / (2 * math.pi)))
    lo, hi = sorted((arc.start, arc.end))
    thetas = np.linspace(lo, hi, n + 1)
    values = _tangential(potential, arc, thetas)
    roots = []
    for t0, t1, v0, v1 in zip(thetas, thetas[1:], values, values[1:]):
        if not (np.isfinite(v0) and np.isfinite(v1)):
            continue
        if v0 == 0:
            root = t0
        elif v0 * v1 < 0:
            root = scipy.optimize.brentq(
                lambda t: float(_tangential(potential, arc, t)), t0, t1, xtol=1e-14
            )
        else:
            continue
        if arc.contains_angle(root, ARC_MARGIN) and not any(
            abs(root - r) < 1e-10 for r in roots
        ):
            roots.append(root)
    return [as_point(arc.circle.point(t)) for t in roots]


def restriction_curvature(potential: Potential, arc: Arc, point: PointLike) -> float:
    """
    Second derivative of the potential along the arc circle, by polar angle.
    """
    circle = arc.circle
    p = as_xy(point)
    u = (p - np.asarray(circle.center)) / circle.radius
    t = np.array([-u[1], u[0]])
    g = potential.gradient(p)
    h = potential.hessian(p)
    r = circle.radius
    return float(r * r * t @ h @ t - r * g @ u)


def classify_boundary_critical(
    potential: Potential,
    point: PointLike,
    w: Workspace,
    arc: typing.Optional[Arc] = None,
) -> CriticalPoint:
    """
    Classify a restriction critical point on a smooth boundary arc. The restriction type
    (minimum or maximum along the arc) combines with the side the descent direction
    ``-grad`` points to: restriction maxima whose descent leaves the workspace attach a
    1-cell, restriction minima whose descent leaves it attach a 0-cell, all other points
    leave the sublevel topology unchanged.
    """
    p = as_xy(point)
    arc = arc or w.arc_at(p)
    g = potential.gradient(p)
    inward = float(-g @ arc.inward_normal(arc.circle.angle(p)))
    if abs(inward) < DEGENERACY_TOL:
        raise TangentGradient(
            f"Gradient at {tuple(p)} is tangent to {arc.label}.", as_point(p)
        )
    curvature = restriction_curvature(potential, arc, p)
    if abs(curvature) < DEGENERACY_TOL:
        raise NonMorsePoint(
            f"Restriction to {arc.label} is degenerate at {tuple(p)}.", as_point(p)
        )
    if inward > 0:
        classification = NO_CHANGE
    elif curvature > 0:
        classification = MINIMUM
    else:
        classification = SADDLE
    return _critical(p, "boundary", classification, potential.value(p), arc.index)


def classify_corner(
    potential: Potential, corner: Corner, w: Workspace
) -> CriticalPoint:
    """
    Classify a corner by its interior tangent cone. Descent into the cone changes
    nothing. Otherwise a convex cone with no descending boundary ray is a local minimum
    and a reflex cone with two descending rays attaches a 1-cell.
    """
    p = np.asarray(corner.location)
    g = potential.gradient(p)
    if np.hypot(*g) < DEGENERACY_TOL:
        raise TangentGradient(f"Gradient vanishes at corner {tuple(p)}.", as_point(p))
    rays = corner.rays()
    slopes = [float(g @ ray) for ray in rays]
    if any(abs(s) < DEGENERACY_TOL for s in slopes):
        raise TangentGradient(
            f"Gradient is orthogonal to a boundary ray at corner {tuple(p)}.",
            as_point(p),
        )
    opening = corner.opening
    descent = ccw_angle(rays[0], -g)
    descending = sum(s < 0 for s in slopes)
    if 0 < descent < opening:
        classification = NO_CHANGE
    elif descending == 0:
        classification = MINIMUM
    elif descending == 2 and opening > math.pi:
        classification = SADDLE
    else:
        classification = NO_CHANGE
    return _critical(p, "corner", classification, potential.value(p))


def census(
    potential: Potential, w: Workspace, options: typing.Optional[SearchOptions] = None
) -> MorseCensus:
    points = list(interior_critical_points(potential, w, options))
    for arc, p in boundary_restriction_criticals(potential, w):
        points.append(classify_boundary_critical(potential, p, w, arc))
    points.extend(classify_corner(potential, corner, w) for corner in w.corners)
    counts = [0, 0, 0]
    for p in points:
        if p.is_topological:
            counts[p.index] += 1
    result = MorseCensus(*counts, points=tuple(points))
    logger.info(
        "Census of %s: mu=%s, euler %d.", potential.name, result.mu, result.euler
    )
    return result
