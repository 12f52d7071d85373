import dataclasses
import os
import typing

import numpy as np
import numpy.typing as npt

from .exceptions import SpiderDefinitionError

PointLike = typing.Union[typing.Sequence[float], npt.ArrayLike]

GRID_ENV = "SPIDERLAB_GRID_N"


def as_xy(x: PointLike) -> npt.NDArray[np.float64]:
    """
    Coerce a point, or a stack of points, to a float array whose last axis has length 2.
    """
    arr = np.asarray(x, dtype=float)
    if arr.ndim == 0 or arr.shape[-1] != 2:
        raise ValueError(f"Expected planar coordinates, got shape {arr.shape}.")
    return arr


def grid_resolution(default: int) -> int:
    """
    Grid resolution per axis, overridden by the ``SPIDERLAB_GRID_N`` environment variable.
    """
    value = os.getenv(GRID_ENV)
    if value is None or not value.strip():
        return default
    try:
        n = int(value)
    except ValueError:
        raise SpiderDefinitionError(
            f"{GRID_ENV}={value!r} is not an integer grid resolution.", GRID_ENV
        ) from None
    if n < 8:
        raise SpiderDefinitionError(
            f"{GRID_ENV}={n} is too coarse, use at least 8 nodes per axis.", GRID_ENV
        )
    return n


def grid_points(bounds, n: int) -> npt.NDArray[np.float64]:
    """
    Nodes of an ``n`` by ``n`` grid over ``(xmin, ymin, xmax, ymax)``, shaped ``(n, n, 2)``
    and indexed ``[row, column]`` with rows running along y.
    """
    xmin, ymin, xmax, ymax = bounds
    xs = np.linspace(xmin, xmax, n)
    ys = np.linspace(ymin, ymax, n)
    gx, gy = np.meshgrid(xs, ys)
    return np.stack((gx, gy), axis=-1)


class Iterable:
    def __iter__(self):
        yield from {
            field.name: getattr(self, field.name) for field in dataclasses.fields(self)
        }.items()


@dataclasses.dataclass
class SearchOptions(Iterable):
    """
    Numerical settings of the grid seeded critical point searches.
    """

    grid_n: typing.Optional[int] = None
    """
    Grid nodes per axis; ``None`` uses the default of the search, or ``SPIDERLAB_GRID_N``.
    """
    newton_tol: float = 1e-12
    newton_steps: int = 50
    accept_tol: float = 1e-10
    dedup_radius: float = 1e-8
    degenerate_det: float = 1e-10

    def resolution(self, default: int) -> int:
        if self.grid_n is not None:
            return self.grid_n
        return grid_resolution(default)
