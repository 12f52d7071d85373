"""
Brute-force oracles: central finite differences and a grid filtration census of the
sublevel sets of a potential.
"""

import dataclasses
import logging
import typing

import numpy as np
import numpy.typing as npt

from ._util import PointLike, SearchOptions, as_xy, grid_points
from .exceptions import PoleAtFoot, ResolutionTooCoarse, StencilOutOfDomain
from .geom import Point, as_point
from .potentials import Potential

logger = logging.getLogger(__name__)

ScalarField = typing.Callable[[npt.NDArray[np.float64]], float]

_STEPS = np.array([[1.0, 0.0], [0.0, 1.0]])


def _evaluate(f: ScalarField, x):
    try:
        value = np.asarray(f(x), dtype=float)
    except PoleAtFoot:
        raise StencilOutOfDomain(
            f"Stencil point {tuple(x)} hits a pole.", as_point(x)
        ) from None
    if not np.all(np.isfinite(value)):
        raise StencilOutOfDomain(
            f"Non-finite value at stencil point {tuple(x)}.", as_point(x)
        )
    return value


def fd_gradient(f: ScalarField, x: PointLike, h: float = 1e-5):
    """
    Central difference gradient of a scalar field, with error of order ``h**2``.
    """
    x = as_xy(x)
    return np.array(
        [(_evaluate(f, x + h * e) - _evaluate(f, x - h * e)) / (2 * h) for e in _STEPS]
    )


def fd_hessian(
    f: ScalarField,
    x: PointLike,
    h: float = 1e-4,
    gradient: typing.Optional[typing.Callable] = None,
):
    """
    Central difference Hessian. When ``gradient`` is given its columns are differenced,
    otherwise second differences of ``f`` are used. The result is symmetrized.
    """
    x = as_xy(x)
    if gradient is not None:
        cols = [
            (_evaluate(gradient, x + h * e) - _evaluate(gradient, x - h * e)) / (2 * h)
            for e in _STEPS
        ]
        hess = np.array(cols)
    else:
        hess = np.empty((2, 2))
        f0 = _evaluate(f, x)
        for i, ei in enumerate(_STEPS):
            for j, ej in enumerate(_STEPS):
                if i == j:
                    hess[i, i] = (
                        _evaluate(f, x + h * ei) - 2 * f0 + _evaluate(f, x - h * ei)
                    ) / h**2
                elif i < j:
                    hess[i, j] = (
                        _evaluate(f, x + h * ei + h * ej)
                        - _evaluate(f, x + h * ei - h * ej)
                        - _evaluate(f, x - h * ei + h * ej)
                        + _evaluate(f, x - h * ei - h * ej)
                    ) / (4 * h * h)
                    hess[j, i] = hess[i, j]
    return 0.5 * (hess + hess.T)


class Domain(typing.Protocol):
    def bounds(self) -> tuple[float, float, float, float]: ...

    def contains(self, x): ...


@dataclasses.dataclass(frozen=True)
class MaskedBox:
    """
    Axis-aligned box with small discs cut out around the poles of a potential.
    """

    box: tuple[float, float, float, float]
    holes: tuple[tuple[Point, float], ...] = ()

    @classmethod
    def around(cls, potential: Potential, box, radius: float = 0.05) -> "MaskedBox":
        return cls(tuple(box), tuple((as_point(p), radius) for p in potential.poles))

    def bounds(self):
        return self.box

    def contains(self, x: PointLike):
        x = as_xy(x)
        xmin, ymin, xmax, ymax = self.box
        ok = (
            (x[..., 0] >= xmin)
            & (x[..., 0] <= xmax)
            & (x[..., 1] >= ymin)
            & (x[..., 1] <= ymax)
        )
        for center, radius in self.holes:
            ok &= np.hypot(*np.moveaxis(x - np.asarray(center), -1, 0)) > radius
        return ok


@dataclasses.dataclass(frozen=True)
class GridEvent:
    kind: typing.Literal["birth", "merge", "cycle", "fill"]
    index: int
    location: Point
    value: float
    interior: bool
    """
    Whether all 8 neighbours of the pixel lie in the domain.
    """


@dataclasses.dataclass(frozen=True)
class GridCensus:
    mu0: int
    mu1: int
    mu2: int
    resolution: int
    level_count: int
    events: tuple[GridEvent, ...] = ()

    @property
    def mu(self) -> tuple[int, int, int]:
        return self.mu0, self.mu1, self.mu2

    @property
    def euler(self) -> int:
        return self.mu0 - self.mu1 + self.mu2


class _UnionFind:
    def __init__(self, length):
        self.parents = np.full(length, -1, dtype=np.int64)
        self.birth = np.zeros(length)
        self.birth_order = np.zeros(length, dtype=np.int64)

    def find(self, i):
        j = i
        while self.parents[j] >= 0:
            j = self.parents[j]
        while i != j:
            k = self.parents[i]
            self.parents[i] = j
            i = k
        return j


_NEIGHBOURS = ((-1, 0), (1, 0), (0, -1), (0, 1))
_SQUARES = (
    ((-1, 0), (0, -1), (-1, -1)),
    ((-1, 0), (0, 1), (-1, 1)),
    ((1, 0), (0, -1), (1, -1)),
    ((1, 0), (0, 1), (1, 1)),
)


def grid_census(
    potential: Potential,
    domain: Domain,
    n: typing.Optional[int] = None,
    noise: float = 4.0,
    check_refinement: bool = False,
    interior_only: bool = False,
) -> GridCensus:
    """
    Count the critical levels of ``potential`` on ``domain`` with a sublevel filtration
    of its ``n`` by ``n`` rasterization. Pixels enter in order of value and cell index
    and join their 4-neighbours in a cubical complex; components and cycles are tracked
    with a union-find. A component that merges within ``noise`` times the local value
    jump of its birth is treated as a raster artefact and its birth and merge cancel.

    With ``interior_only`` only events at pixels whose 8 neighbours all lie inside the
    domain are counted.
    """
    n = n or SearchOptions().resolution(512)
    census = _filtration(potential, domain, n, noise, interior_only)
    if check_refinement:
        finer = _filtration(potential, domain, 2 * n, noise, interior_only)
        if finer.mu != census.mu:
            raise ResolutionTooCoarse(
                f"Grid census changes from {census.mu} at n={n} to {finer.mu} at"
                f" n={2 * n}.",
                (census.mu, finer.mu),
            )
    return census


def _filtration(potential, domain, n, noise, interior_only) -> GridCensus:
    nodes = grid_points(domain.bounds(), n)
    inside = np.asarray(domain.contains(nodes), dtype=bool)
    values = np.full((n, n), np.nan)
    values[inside] = potential.sample_value(nodes[inside])
    inside &= np.isfinite(values)
    padded = np.zeros((n + 2, n + 2), dtype=bool)
    padded[1:-1, 1:-1] = inside
    interior = np.ones((n, n), dtype=bool)
    for dr in (-1, 0, 1):
        for dc in (-1, 0, 1):
            interior &= padded[1 + dr : n + 1 + dr, 1 + dc : n + 1 + dc]
    jump = _local_jump(values, inside)

    flat = np.flatnonzero(inside)
    order = flat[np.lexsort((flat, values.ravel()[flat]))]
    active = np.zeros(n * n, dtype=bool)
    uf = _UnionFind(n * n)
    events = []
    births = {}
    cancelled = set()
    for rank, pixel in enumerate(order):
        row, col = divmod(int(pixel), n)
        value = float(values[row, col])
        neighbours = [
            (row + dr) * n + col + dc
            for dr, dc in _NEIGHBOURS
            if 0 <= row + dr < n
            and 0 <= col + dc < n
            and active[(row + dr) * n + col + dc]
        ]
        squares = 0
        for square in _SQUARES:
            cells = [(row + dr, col + dc) for dr, dc in square]
            if all(0 <= r < n and 0 <= c < n and active[r * n + c] for r, c in cells):
                squares += 1
        active[pixel] = True
        uf.birth[pixel] = value
        uf.birth_order[pixel] = rank
        roots = sorted(
            {uf.find(p) for p in neighbours}, key=lambda r: uf.birth_order[r]
        )
        location = Point(*nodes[row, col])
        is_interior = bool(interior[row, col])
        euler_step = 1 - len(neighbours) + squares
        b0_step = 1 - len(roots)
        b1_step = b0_step - euler_step
        if not roots:
            births[pixel] = len(events)
            events.append(GridEvent("birth", 0, location, value, is_interior))
            continue
        eldest = min(roots, key=lambda r: (uf.birth[r], uf.birth_order[r]))
        for root in roots:
            uf.parents[root] = eldest if root != eldest else -1
        uf.parents[pixel] = eldest
        for root in roots:
            if root == eldest:
                continue
            persistence = value - uf.birth[root]
            if persistence <= noise * jump.ravel()[root]:
                cancelled.add(births[root])
            else:
                events.append(GridEvent("merge", 1, location, value, is_interior))
        if b1_step > 0:
            events.extend(
                GridEvent("cycle", 1, location, value, is_interior)
                for _ in range(b1_step)
            )
        elif b1_step < 0:
            events.extend(
                GridEvent("fill", 2, location, value, is_interior)
                for _ in range(-b1_step)
            )
    kept = tuple(e for i, e in enumerate(events) if i not in cancelled)
    counted = [e for e in kept if e.interior or not interior_only]
    mu = [sum(e.index == k for e in counted) for k in range(3)]
    logger.debug(
        "Grid census at n=%d: mu=%s, %d raster births cancelled.", n, mu, len(cancelled)
    )
    return GridCensus(*mu, resolution=n, level_count=len(order), events=kept)


def _local_jump(values, inside):
    """
    Largest value difference between each pixel and its in-domain 4-neighbours.
    """
    jump = np.zeros_like(values)
    filled = np.where(inside, values, np.nan)
    for axis in (0, 1):
        diff = np.abs(np.diff(filled, axis=axis))
        diff = np.where(np.isfinite(diff), diff, 0.0)
        lead = [slice(None)] * 2
        trail = [slice(None)] * 2
        lead[axis] = slice(None, -1)
        trail[axis] = slice(1, None)
        jump[tuple(lead)] = np.maximum(jump[tuple(lead)], diff)
        jump[tuple(trail)] = np.maximum(jump[tuple(trail)], diff)
    return jump
