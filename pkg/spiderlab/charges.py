"""
Stationary charges, trapping domains and Coulomb equilibria.

For a center ``X`` inside the feet triangle the charges ``q_i`` proportional to
``d_i^3 A_i`` make ``X`` an equilibrium of ``E = sum q_i / d_i``. ``X`` is trapped when
that equilibrium is a local minimum.
"""

import dataclasses
import logging
import typing

import numpy as np
import numpy.typing as npt

from ._util import PointLike, SearchOptions, as_xy, grid_points
from .definitions import SpiderSpec
from .exceptions import MaxwellBoundError, ZeroCharge
from .geom import EPS_GEO, Point, Triangle, as_point, barycentric, subtriangle_data
from .morse import find_gradient_zeros
from .potentials import (
    ChargeTriple,
    ChargesLike,
    CoulombPotential,
    _coulomb_hessian,
    _offsets,
)
from .workspace import build_workspace

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class Region:
    """
    Implicit planar region: a membership predicate and its sample on a grid.
    """

    predicate: typing.Callable[[npt.NDArray[np.float64]], npt.NDArray[np.bool_]]
    sample: npt.NDArray[np.float64]
    resolution: float
    bounds: tuple[float, float, float, float]

    @property
    def is_empty(self) -> bool:
        return len(self.sample) == 0

    def contains(self, x: PointLike):
        result = self.predicate(as_xy(x))
        return bool(result) if np.ndim(result) == 0 else result


@dataclasses.dataclass(frozen=True)
class Equilibrium:
    location: Point
    index: int
    residual: float
    value: float
    degenerate: bool = False


def stationary_charges(x: PointLike, tri: Triangle) -> ChargeTriple:
    """
    Charges at the feet that hold ``x`` in equilibrium, normalized to unit total
    magnitude.
    """
    data = subtriangle_data(x, tri)
    if np.any(data.areas < EPS_GEO):
        raise ZeroCharge(
            f"{tuple(as_xy(x))} lies on a line through a foot and another; a charge"
            " would vanish."
        )
    signed = barycentric(x, tri) * tri.area
    return ChargeTriple(*(data.d**3 * signed)).normalized()


def trapping_hessian(x: PointLike, tri: Triangle, normalized: bool = False) -> float:
    """
    The closed form ``-2 A + 9 (prod sin a_i)(sum d_i^2 A_i)``. It is exact for triangles
    of area 1/2; ``normalized`` rescales the configuration to that area first, which
    makes the sign agree with the Hessian determinant of the stationary potential.
    """
    x = as_xy(x)
    if normalized:
        scale = np.sqrt(0.5 / tri.area)
        x = x * scale
        tri = tri.transformed(scale=scale)
    data = subtriangle_data(x, tri)
    return float(
        -2 * tri.area
        + 9 * np.prod(np.sin(data.angles)) * np.sum(data.d**2 * data.areas)
    )


def trapping_determinant(x: PointLike, tri: Triangle):
    """
    ``9 (prod sin a_i)(sum d_i^2 A_i) - 4 A^2``, a positive multiple of the determinant
    of the Hessian of the stationary potential at ``x``. Vectorized over stacked points.
    """
    x = as_xy(x)
    rel, d = _offsets(x, tri)
    u, w = rel[..., [1, 2, 0], :], rel[..., [2, 0, 1], :]
    cross = np.abs(u[..., 0] * w[..., 1] - u[..., 1] * w[..., 0])
    dot = np.sum(u * w, axis=-1)
    sines = np.sin(np.arctan2(cross, dot))
    areas = 0.5 * cross
    return 9 * np.prod(sines, axis=-1) * np.sum(d**2 * areas, axis=-1) - 4 * tri.area**2


def stationary_hessian(x: PointLike, tri: Triangle):
    """
    Hessian of the stationary potential of each point at that point, vectorized.
    """
    x = as_xy(x)
    rel, d = _offsets(x, tri)
    q = d**3 * barycentric(x, tri)
    q = q / np.abs(q).sum(axis=-1, keepdims=True)
    return _coulomb_hessian(rel, d, q)


def is_trapped(x: PointLike, tri: Triangle):
    """
    Whether ``x`` lies strictly inside the triangle and the stationary potential has a
    nondegenerate local minimum there.
    """
    x = as_xy(x)
    inside = tri.contains(x)
    with np.errstate(divide="ignore", invalid="ignore"):
        h = stationary_hessian(x, tri)
    det = h[..., 0, 0] * h[..., 1, 1] - h[..., 0, 1] * h[..., 1, 0]
    result = inside & (det > 0) & (h[..., 0, 0] + h[..., 1, 1] > 0)
    return bool(result) if np.ndim(result) == 0 else result


def _sampled_region(predicate, bounds, n: int) -> Region:
    nodes = grid_points(bounds, n).reshape(-1, 2)
    sample = nodes[predicate(nodes)]
    spacing = max(bounds[2] - bounds[0], bounds[3] - bounds[1]) / (n - 1)
    return Region(predicate, sample, spacing, tuple(bounds))


def trapping_domain(tri: Triangle, resolution: typing.Optional[int] = None) -> Region:
    """
    Sampled trapping domain of the triangle, on ``resolution`` nodes per axis over its
    bounding box.
    """
    n = resolution or SearchOptions().resolution(256)
    return _sampled_region(lambda x: is_trapped(x, tri), tri.bounding_box(), n)


def robust_domain(spec: SpiderSpec, resolution: typing.Optional[int] = None) -> Region:
    """
    Targets that are both reachable and trappable. The region may be empty.
    """
    n = resolution or SearchOptions().resolution(256)
    w = build_workspace(spec, allow_empty=True)
    tri = spec.feet

    def predicate(x):
        return w.contains(x) & is_trapped(x, tri)

    region = _sampled_region(predicate, tri.bounding_box(), n)
    if region.is_empty:
        logger.info("Robust control domain is empty.")
    return region


def maxwell_bound(n: int) -> int:
    return (n - 1) ** 2


def equilibria(
    tri: Triangle,
    q: ChargesLike,
    window: typing.Optional[tuple[float, float, float, float]] = None,
    options: typing.Optional[SearchOptions] = None,
) -> list[Equilibrium]:
    """
    All equilibria of the Coulomb potential inside ``window``, by default three times
    the bounding box of the triangle. Degenerate equilibria are flagged, not classified.
    """
    options = options or SearchOptions()
    if window is None:
        xmin, ymin, xmax, ymax = tri.bounding_box()
        cx, cy = (xmin + xmax) / 2, (ymin + ymax) / 2
        hx, hy = 1.5 * (xmax - xmin), 1.5 * (ymax - ymin)
        window = (cx - hx, cy - hy, cx + hx, cy + hy)
    potential = CoulombPotential(tri, q)
    zeros, residuals = find_gradient_zeros(potential, window, options, default_n=512)
    found = []
    for x, residual in zip(zeros, residuals):
        h = potential.hessian(x)
        degenerate = abs(np.linalg.det(h)) < options.degenerate_det
        if degenerate:
            logger.warning(
                "Degenerate equilibrium at %s, det Hessian %g.", x, np.linalg.det(h)
            )
        found.append(
            Equilibrium(
                location=as_point(x),
                index=int(np.sum(np.linalg.eigvalsh(h) < 0)),
                residual=residual,
                value=float(potential.value(x)),
                degenerate=bool(degenerate),
            )
        )
    bound = maxwell_bound(3)
    if tri.is_regular(1e-9) and len(found) > bound:
        raise MaxwellBoundError(
            f"Found {len(found)} equilibria for 3 charges on a regular triangle, more"
            f" than {bound}.",
            len(found),
        )
    return found
