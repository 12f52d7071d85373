"""
Planar primitives: points, triangles, subtriangle data, barycentric coordinates and
circle intersections.
"""

import dataclasses
import math
import typing

import numpy as np
import numpy.typing as npt

from ._util import PointLike, as_xy
from .exceptions import (
    CoincidentCircles,
    DegenerateAtFoot,
    DegenerateLine,
    DegenerateTriangle,
)

EPS_GEO = 1e-9
TAU = 2 * math.pi


class Point(typing.NamedTuple):
    x: float
    y: float


def as_point(x: PointLike) -> Point:
    arr = as_xy(x)
    if arr.shape != (2,):
        raise ValueError(f"Expected a single point, got shape {arr.shape}.")
    return Point(float(arr[0]), float(arr[1]))


def signed_area(p: PointLike, q: PointLike, r: PointLike):
    """
    Half the cross product of ``q - p`` and ``r - p``: positive for counterclockwise
    triples. Broadcasts over stacked points.
    """
    p, q, r = as_xy(p), as_xy(q), as_xy(r)
    u = q - p
    v = r - p
    area = 0.5 * (u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0])
    return float(area) if np.ndim(area) == 0 else area


@dataclasses.dataclass(frozen=True)
class Triangle:
    """
    The base triangle formed by the feet A, B and C.
    """

    a: Point
    b: Point
    c: Point

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_point(getattr(self, name)))
        if abs(signed_area(self.a, self.b, self.c)) < EPS_GEO:
            raise DegenerateTriangle(
                f"Feet {self.a}, {self.b} and {self.c} are collinear.", self.vertices
            )

    @property
    def vertices(self) -> npt.NDArray[np.float64]:
        return np.array([self.a, self.b, self.c], dtype=float)

    @property
    def signed_area(self) -> float:
        return signed_area(self.a, self.b, self.c)

    @property
    def area(self) -> float:
        return abs(self.signed_area)

    @property
    def centroid(self) -> Point:
        return as_point(self.vertices.mean(axis=0))

    @property
    def side_lengths(self) -> npt.NDArray[np.float64]:
        """
        Lengths of the sides opposite A, B and C.
        """
        v = self.vertices
        return np.linalg.norm(v[[2, 0, 1]] - v[[1, 2, 0]], axis=1)

    @property
    def circumradius(self) -> float:
        return float(np.prod(self.side_lengths) / (4 * self.area))

    def bounding_box(self) -> tuple[float, float, float, float]:
        v = self.vertices
        return (*v.min(axis=0), *v.max(axis=0))

    def contains(self, x: PointLike):
        """
        Strict interior test, vectorized over stacked points.
        """
        return np.all(barycentric(x, self) > EPS_GEO, axis=-1)

    def is_regular(self, tol: float = 1e-9) -> bool:
        sides = self.side_lengths
        return bool(np.ptp(sides) <= tol * sides.max())

    def transformed(self, scale=1.0, rotation=0.0, shift=(0.0, 0.0)) -> "Triangle":
        """
        Image of the triangle under a similarity ``x -> scale * R(rotation) x + shift``.
        """
        return Triangle(*similarity(self.vertices, scale, rotation, shift))


def similarity(x: PointLike, scale=1.0, rotation=0.0, shift=(0.0, 0.0)):
    c, s = math.cos(rotation), math.sin(rotation)
    rot = np.array([[c, -s], [s, c]])
    return scale * as_xy(x) @ rot.T + np.asarray(shift, dtype=float)


@dataclasses.dataclass(frozen=True)
class SubtriangleData:
    """
    Distances, areas and apex angles of the three subtriangles BCX, CAX and ABX.
    """

    d: npt.NDArray[np.float64]
    areas: npt.NDArray[np.float64]
    angles: npt.NDArray[np.float64]


def subtriangle_data(x: PointLike, tri: Triangle) -> SubtriangleData:
    x = as_xy(x)
    v = tri.vertices
    rel = v - x
    d = np.linalg.norm(rel, axis=1)
    if d.min() < EPS_GEO:
        raise DegenerateAtFoot(f"{tuple(x)} coincides with a foot.", as_point(x))
    areas = np.abs(_subareas(x, v))
    # Apex angle i is spanned by the two vertices other than i.
    u, w = rel[[1, 2, 0]], rel[[2, 0, 1]]
    cross = u[:, 0] * w[:, 1] - u[:, 1] * w[:, 0]
    dot = np.sum(u * w, axis=1)
    angles = np.arctan2(np.abs(cross), dot)
    return SubtriangleData(d=d, areas=areas, angles=angles)


def _subareas(x, v):
    a, b, c = v
    return np.stack(
        [signed_area(x, b, c), signed_area(a, x, c), signed_area(a, b, x)], axis=-1
    )


def barycentric(x: PointLike, tri: Triangle) -> npt.NDArray[np.float64]:
    """
    Barycentric coordinates of ``x`` with respect to ``tri``, signed for exterior points.
    The last axis of the result holds the weights of A, B and C.
    """
    return _subareas(as_xy(x), tri.vertices) / tri.signed_area


def circle_circle_intersections(
    c1: PointLike, r1: float, c2: PointLike, r2: float, eps: float = EPS_GEO
) -> list[Point]:
    c1, c2 = as_xy(c1), as_xy(c2)
    delta = c2 - c1
    d = float(np.hypot(*delta))
    if d < eps:
        if abs(r1 - r2) < eps:
            raise CoincidentCircles(
                f"Circles about {tuple(c1)} with radius {r1} coincide.",
                as_point(c1),
                r1,
            )
        return []
    if d > r1 + r2 + eps or d < abs(r1 - r2) - eps:
        return []
    u = delta / d
    a = (d**2 + r1**2 - r2**2) / (2 * d)
    if abs(d - (r1 + r2)) <= eps or abs(d - abs(r1 - r2)) <= eps:
        return [as_point(c1 + a * u)]
    h = math.sqrt(max(r1**2 - a**2, 0.0))
    n = np.array([-u[1], u[0]])
    base = c1 + a * u
    return [as_point(base + h * n), as_point(base - h * n)]


def line_circle_intersections(
    p: PointLike, q: PointLike, center: PointLike, r: float, eps: float = EPS_GEO
) -> list[Point]:
    """
    Intersections of the infinite line through ``p`` and ``q`` with a circle, ordered
    along the direction from ``p`` to ``q``.
    """
    p, q, center = as_xy(p), as_xy(q), as_xy(center)
    length = float(np.hypot(*(q - p)))
    if length < eps:
        raise DegenerateLine(f"Line through coincident points {tuple(p)}.")
    u = (q - p) / length
    foot = p + np.dot(center - p, u) * u
    dist = float(np.hypot(*(center - foot)))
    if dist > r + eps:
        return []
    if abs(dist - r) <= eps:
        return [as_point(foot)]
    h = math.sqrt(r**2 - dist**2)
    return [as_point(foot - h * u), as_point(foot + h * u)]


def polar_angle(x: PointLike, center: PointLike = (0.0, 0.0)) -> float:
    """
    Angle of ``x`` about ``center`` in ``[0, 2pi)``.
    """
    dx, dy = as_xy(x) - as_xy(center)
    return math.atan2(dy, dx) % TAU


def ccw_angle(u: PointLike, v: PointLike) -> float:
    """
    Counterclockwise angle in ``[0, 2pi)`` that turns direction ``u`` onto ``v``.
    """
    u, v = as_xy(u), as_xy(v)
    return math.atan2(u[0] * v[1] - u[1] * v[0], np.dot(u, v)) % TAU


def rotate90(v: PointLike) -> npt.NDArray[np.float64]:
    v = as_xy(v)
    return np.stack((-v[..., 1], v[..., 0]), axis=-1)
