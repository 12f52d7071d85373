"""
Hooke, weighted Hooke and Coulomb potentials of the central joint, with gradients and
Hessians. All evaluations broadcast over stacked points on the last axis.
"""

import abc
import dataclasses
import typing
from abc import abstractmethod

import numpy as np
import numpy.typing as npt

from ._util import Iterable, PointLike, as_xy
from .exceptions import InvalidWeights, PoleAtFoot, ZeroCharge
from .geom import EPS_GEO, Point, Triangle, as_point


@dataclasses.dataclass(frozen=True)
class Weights(Iterable):
    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        values = self.as_array()
        if not np.all(np.isfinite(values)) or np.any(values <= 0):
            raise InvalidWeights(
                f"Hooke weights must be strictly positive, got {tuple(values)}.",
                tuple(values),
            )

    def as_array(self) -> npt.NDArray[np.float64]:
        return np.array([self.alpha, self.beta, self.gamma], dtype=float)

    @property
    def total(self) -> float:
        return float(self.as_array().sum())

    def normalized(self) -> "Weights":
        return Weights(*(self.as_array() / self.total))

    def scaled(self, factor: float) -> "Weights":
        return Weights(*(self.as_array() * factor))


@dataclasses.dataclass(frozen=True)
class ChargeTriple(Iterable):
    q1: float
    q2: float
    q3: float

    def __post_init__(self):
        values = self.as_array()
        if not np.all(np.isfinite(values)) or np.any(values == 0):
            raise ZeroCharge(f"Charges must be non-zero reals, got {tuple(values)}.")

    def as_array(self) -> npt.NDArray[np.float64]:
        return np.array([self.q1, self.q2, self.q3], dtype=float)

    def normalized(self) -> "ChargeTriple":
        """
        Rescale so that ``|q1| + |q2| + |q3| = 1``, keeping the signs.
        """
        values = self.as_array()
        return ChargeTriple(*(values / np.abs(values).sum()))


@dataclasses.dataclass(frozen=True)
class HookeForm(Iterable):
    """
    The identity ``H(x) = coefficient * |x - center|^2 + offset``.
    """

    center: Point
    offset: float
    coefficient: float

    def value(self, x: PointLike):
        rel = as_xy(x) - np.asarray(self.center)
        return self.coefficient * np.sum(rel**2, axis=-1) + self.offset


WeightsLike = typing.Union[Weights, typing.Sequence[float]]
ChargesLike = typing.Union[ChargeTriple, typing.Sequence[float]]


def _as_weights(w: typing.Optional[WeightsLike]) -> npt.NDArray[np.float64]:
    if w is None:
        return np.ones(3)
    if not isinstance(w, Weights):
        w = Weights(*w)
    return w.as_array()


def _as_charges(q: ChargesLike) -> npt.NDArray[np.float64]:
    # Plain sequences may carry zero charges, as in single-charge fields.
    if isinstance(q, ChargeTriple):
        return q.as_array()
    return np.asarray(q, dtype=float).reshape(3)


def _offsets(x, tri: Triangle):
    """
    Vectors ``x - vertex`` shaped ``(..., 3, 2)`` and their lengths ``(..., 3)``.
    """
    rel = as_xy(x)[..., None, :] - tri.vertices
    return rel, np.linalg.norm(rel, axis=-1)


def weighted_hooke(x: PointLike, tri: Triangle, w: WeightsLike = None):
    rel, d = _offsets(x, tri)
    return np.sum(_as_weights(w) * d**2, axis=-1)


def weighted_hooke_gradient(x: PointLike, tri: Triangle, w: WeightsLike = None):
    weights = _as_weights(w)
    return 2 * weights.sum() * as_xy(x) - 2 * weights @ tri.vertices


def hooke_value(x: PointLike, tri: Triangle):
    return weighted_hooke(x, tri)


def hooke_gradient(x: PointLike, tri: Triangle):
    return weighted_hooke_gradient(x, tri)


def weighted_minimum(tri: Triangle, w: WeightsLike = None) -> Point:
    weights = _as_weights(w)
    return as_point(weights @ tri.vertices / weights.sum())


def hooke_form(tri: Triangle, w: WeightsLike = None) -> HookeForm:
    weights = _as_weights(w)
    total = weights.sum()
    center = weights @ tri.vertices / total
    offset = weights @ np.sum(tri.vertices**2, axis=1) - total * center @ center
    return HookeForm(center=as_point(center), offset=float(offset), coefficient=total)


def _pole_distances(x, tri: Triangle):
    rel, d = _offsets(x, tri)
    if np.any(d < EPS_GEO):
        hit = as_xy(x).reshape(-1, 2)[np.any(d.reshape(-1, 3) < EPS_GEO, axis=1)][0]
        raise PoleAtFoot(f"{tuple(hit)} is a pole of the Coulomb potential.", hit)
    return rel, d


def coulomb_value(x: PointLike, tri: Triangle, q: ChargesLike):
    _, d = _pole_distances(x, tri)
    return np.sum(_as_charges(q) / d, axis=-1)


def coulomb_gradient(x: PointLike, tri: Triangle, q: ChargesLike):
    rel, d = _pole_distances(x, tri)
    return -np.sum((_as_charges(q) / d**3)[..., None] * rel, axis=-2)


def coulomb_hessian(x: PointLike, tri: Triangle, q: ChargesLike):
    rel, d = _pole_distances(x, tri)
    return _coulomb_hessian(rel, d, _as_charges(q))


def _coulomb_hessian(rel, d, charges):
    outer = rel[..., :, None] * rel[..., None, :]
    eye = np.eye(2) * (d**2)[..., None, None]
    terms = (charges / d**5)[..., None, None] * (3 * outer - eye)
    return np.sum(terms, axis=-3)


class Potential(abc.ABC):
    """
    A scalar field on the plane with analytic first and second derivatives.
    """

    name: str = "potential"

    @abstractmethod
    def value(self, x: PointLike):
        pass

    @abstractmethod
    def gradient(self, x: PointLike):
        pass

    @abstractmethod
    def hessian(self, x: PointLike):
        pass

    @property
    def radial_center(self) -> typing.Optional[Point]:
        """
        Common center of the circular level sets, if the field is radial.
        """
        return None

    @property
    def poles(self) -> npt.NDArray[np.float64]:
        return np.empty((0, 2))

    def sample_value(self, x: PointLike):
        """
        Vectorized value that yields ``nan`` at poles instead of raising.
        """
        return self.value(x)

    def sample_gradient(self, x: PointLike):
        return self.gradient(x)

    def __neg__(self) -> "Potential":
        return NegatedPotential(self)


class HookePotential(Potential):
    """
    Weighted sum of squared distances to the feet; unit weights give the Hooke energy.
    """

    def __init__(self, tri: Triangle, weights: typing.Optional[WeightsLike] = None):
        self.tri = tri
        if weights is not None and not isinstance(weights, Weights):
            weights = Weights(*weights)
        self.weights = weights
        self.name = "hooke" if weights is None else "weighted"

    def value(self, x):
        return weighted_hooke(x, self.tri, self.weights)

    def gradient(self, x):
        return weighted_hooke_gradient(x, self.tri, self.weights)

    def hessian(self, x):
        total = _as_weights(self.weights).sum()
        shape = as_xy(x).shape[:-1]
        return np.broadcast_to(2 * total * np.eye(2), (*shape, 2, 2)).copy()

    @property
    def radial_center(self) -> Point:
        return weighted_minimum(self.tri, self.weights)

    def form(self) -> HookeForm:
        return hooke_form(self.tri, self.weights)


class CoulombPotential(Potential):
    name = "coulomb"

    def __init__(self, tri: Triangle, charges: ChargesLike):
        self.tri = tri
        self.charges = charges

    def value(self, x):
        return coulomb_value(x, self.tri, self.charges)

    def gradient(self, x):
        return coulomb_gradient(x, self.tri, self.charges)

    def hessian(self, x):
        return coulomb_hessian(x, self.tri, self.charges)

    @property
    def poles(self):
        return self.tri.vertices

    def sample_value(self, x):
        rel, d = _offsets(x, self.tri)
        with np.errstate(divide="ignore", invalid="ignore"):
            values = np.sum(_as_charges(self.charges) / d, axis=-1)
        return np.where(np.any(d < EPS_GEO, axis=-1), np.nan, values)

    def sample_gradient(self, x):
        rel, d = _offsets(x, self.tri)
        with np.errstate(divide="ignore", invalid="ignore"):
            grad = -np.sum((_as_charges(self.charges) / d**3)[..., None] * rel, axis=-2)
        return np.where(np.any(d < EPS_GEO, axis=-1)[..., None], np.nan, grad)


class NegatedPotential(Potential):
    def __init__(self, base: Potential):
        self.base = base
        self.name = f"-{base.name}"

    def value(self, x):
        return -self.base.value(x)

    def gradient(self, x):
        return -self.base.gradient(x)

    def hessian(self, x):
        return -self.base.hessian(x)

    @property
    def radial_center(self):
        return self.base.radial_center

    @property
    def poles(self):
        return self.base.poles

    def sample_value(self, x):
        return -self.base.sample_value(x)

    def sample_gradient(self, x):
        return -self.base.sample_gradient(x)

    def __neg__(self):
        return self.base
