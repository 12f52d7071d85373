import dataclasses
import math
import typing

import numpy as np

from ._util import PointLike, as_xy
from .geom import EPS_GEO, Point, as_point

FOOT_NAMES = ("A", "B", "C")


class Constraint:
    """
    Closed interval constraint ``lower <= value <= upper``. Values within ``tolerance``
    of a bound count as satisfied.
    """

    def __init__(self, lower=None, upper=None, tolerance=EPS_GEO):
        self._lower = lower
        self._upper = upper
        self._tolerance = tolerance

    @property
    def tolerance(self):
        return self._tolerance

    @property
    def lower(self):
        return self._lower

    @property
    def upper(self):
        return self._upper

    def holds(self, value):
        tol = self.tolerance or 0.0
        ok = np.ones(np.shape(value), dtype=bool)
        if self.lower is not None:
            ok &= value >= self.lower - tol
        if self.upper is not None:
            ok &= value <= self.upper + tol
        return ok if ok.ndim else bool(ok)


@dataclasses.dataclass(frozen=True)
class ConstraintCircle:
    """
    One of the two bounding circles of a leg's annulus.
    """

    center: Point
    radius: float
    foot: int
    kind: typing.Literal["inner", "outer"]

    @property
    def label(self) -> str:
        return f"{self.kind}:{FOOT_NAMES[self.foot]}"

    def point(self, theta):
        theta = np.asarray(theta, dtype=float)
        offset = np.stack((np.cos(theta), np.sin(theta)), axis=-1)
        return np.asarray(self.center) + self.radius * offset

    def angle(self, x: PointLike) -> float:
        dx, dy = as_xy(x) - np.asarray(self.center)
        return math.atan2(dy, dx) % (2 * math.pi)

    def project(self, x: PointLike):
        """
        Radial projection onto the circle.
        """
        rel = as_xy(x) - np.asarray(self.center)
        norm = np.linalg.norm(rel)
        if norm < EPS_GEO:
            rel, norm = np.array([1.0, 0.0]), 1.0
        return np.asarray(self.center) + self.radius * rel / norm


class AnnulusConstraint(Constraint):
    """
    Reach constraint of one leg: the center stays between ``R-`` and ``R+`` of its foot.
    """

    def __init__(self, center: PointLike, lower: float, upper: float, foot: int = 0):
        super().__init__(lower, upper)
        self.center = as_point(center)
        self.foot = foot

    def __repr__(self):
        return (
            f"<AnnulusConstraint {FOOT_NAMES[self.foot]} {self.center}"
            f" [{self.lower}, {self.upper}]>"
        )

    def distance(self, x: PointLike):
        return np.linalg.norm(as_xy(x) - np.asarray(self.center), axis=-1)

    def contains(self, x: PointLike):
        return self.holds(self.distance(x))

    @property
    def inner(self) -> ConstraintCircle:
        return ConstraintCircle(self.center, self.lower, self.foot, "inner")

    @property
    def outer(self) -> ConstraintCircle:
        return ConstraintCircle(self.center, self.upper, self.foot, "outer")

    def violated_circle(self, x: PointLike) -> typing.Optional[ConstraintCircle]:
        """
        The circle whose side ``x`` falls on, when ``x`` breaks the constraint.
        """
        d = float(self.distance(x))
        if d < self.lower - self.tolerance:
            return self.inner
        if d > self.upper + self.tolerance:
            return self.outer
        return None
