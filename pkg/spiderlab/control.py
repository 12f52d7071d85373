"""
Robust control: choose Hooke weights or Coulomb charges that make a target the stable
rest position of the center, and follow the gradient flow of a potential inside the
workspace.
"""

import dataclasses
import logging
import typing

import numpy as np
import numpy.typing as npt

from ._util import PointLike, as_xy
from .charges import is_trapped, stationary_charges
from .constraints import ConstraintCircle
from .definitions import SpiderSpec
from .exceptions import (
    NotInWorkspace,
    NotTrappable,
    StalledAtSaddle,
    TargetOutsideTriangle,
    Unreachable,
)
from .geom import Point, Triangle, as_point, barycentric
from .potentials import (
    ChargeTriple,
    Potential,
    Weights,
    coulomb_gradient,
    weighted_hooke_gradient,
)
from .workspace import Workspace, build_workspace

logger = logging.getLogger(__name__)

UNIQUE_MINIMUM = "TargetIsUniqueMinimum"
TRAPPED_MINIMUM = "TargetIsTrappedMinimum"


@dataclasses.dataclass(frozen=True)
class ControlSolution:
    mode: typing.Literal["hooke", "coulomb"]
    parameters: typing.Union[Weights, ChargeTriple]
    target: Point
    certificate: str
    residual: float


def hooke_weights_for(target: PointLike, tri: Triangle) -> ControlSolution:
    """
    Hooke weights whose weighted minimum is ``target``: its barycentric coordinates.
    """
    weights = barycentric(target, tri)
    if np.any(weights <= 0):
        raise TargetOutsideTriangle(
            f"{tuple(as_xy(target))} is not strictly inside the feet triangle.",
            as_point(target),
        )
    w = Weights(*weights)
    residual = float(np.hypot(*weighted_hooke_gradient(target, tri, w)))
    return ControlSolution("hooke", w, as_point(target), UNIQUE_MINIMUM, residual)


def coulomb_charges_for(target: PointLike, spec: SpiderSpec) -> ControlSolution:
    """
    Stationary charges for ``target``, certified when the target is reachable and
    trapped.
    """
    target = as_point(target)
    w = build_workspace(spec, allow_empty=True)
    if not w.contains(target):
        raise Unreachable(f"{tuple(target)} is outside the workspace.", target)
    charges = stationary_charges(target, spec.feet)
    if not is_trapped(target, spec.feet):
        raise NotTrappable(
            f"The stationary charges of {tuple(target)} do not trap it.", target
        )
    residual = float(np.hypot(*coulomb_gradient(target, spec.feet, charges)))
    return ControlSolution("coulomb", charges, target, TRAPPED_MINIMUM, residual)


FREE = "free"


@dataclasses.dataclass(frozen=True)
class Trajectory:
    points: npt.NDArray[np.float64]
    tags: tuple[str, ...]
    """
    Per point: ``free``, or ``sliding:<circle>`` for points held on a constraint circle.
    """
    values: npt.NDArray[np.float64]

    @property
    def terminal(self) -> Point:
        return as_point(self.points[-1])

    @property
    def segments(self) -> list[tuple[str, int, int]]:
        """
        Runs of equal tags as ``(tag, first, last)`` point indices.
        """
        runs = []
        for i, tag in enumerate(self.tags):
            if runs and runs[-1][0] == tag:
                runs[-1] = (tag, runs[-1][1], i)
            else:
                runs.append((tag, i, i))
        return runs

    @property
    def phases(self) -> list[str]:
        return [tag.split(":")[0] for tag, _, _ in self.segments]


def _sliding_tag(circle: ConstraintCircle) -> str:
    return f"sliding:{circle.label}"


def gradient_flow(
    potential: Potential,
    start: PointLike,
    w: Workspace,
    step: float = 1e-3,
    max_steps: int = 20000,
    tol: float = 1e-8,
    max_displacement: float = 0.01,
) -> Trajectory:
    """
    Projected explicit descent. Steps that leave the workspace are projected radially on
    the violated circle, after which the point slides along it following the tangential
    descent until the descent direction points back into the workspace. The step halves
    on rejection and doubles on acceptance; no step moves farther than
    ``max_displacement``.
    """
    x = as_xy(start).astype(float)
    if not w.contains(x):
        raise NotInWorkspace(f"Flow start {tuple(x)} is not in the workspace.", x)
    points, tags, values = [x], [FREE], [float(potential.value(x))]
    circle = None
    h = step
    for _ in range(max_steps):
        g = potential.gradient(x)
        if circle is not None:
            theta = circle.angle(x)
            normal = _inward_normal(circle, theta)
            if -g @ normal > 0:
                logger.debug("Released from %s at %s.", circle.label, x)
                circle = None
            else:
                tangent = np.array([-np.sin(theta), np.cos(theta)])
                descent = -(g @ tangent) * tangent
        if circle is None:
            descent = -g
        if np.hypot(*descent) <= tol:
            break
        candidate, landed = _propose(x, descent, h, max_displacement, w, circle)
        if candidate is None or not _accept(potential, x, g, candidate):
            h /= 2
            if h < 1e-18:
                logger.info("Flow cannot descend from %s; stopping.", x)
                break
            continue
        h *= 2
        x, circle = candidate, landed
        points.append(x)
        tags.append(FREE if circle is None else _sliding_tag(circle))
        values.append(float(potential.value(x)))
    else:
        logger.info("Flow reached max_steps=%d at %s.", max_steps, x)
    trajectory = Trajectory(np.array(points), tuple(tags), np.array(values))
    _check_stall(potential, trajectory, circle, tol)
    return trajectory


def _inward_normal(circle: ConstraintCircle, theta: float):
    radial = np.array([np.cos(theta), np.sin(theta)])
    return -radial if circle.kind == "outer" else radial


def _propose(x, descent, h, max_displacement, w: Workspace, circle):
    move = h * descent
    length = np.hypot(*move)
    if length > max_displacement:
        move *= max_displacement / length
    candidate = x + move
    if circle is not None:
        candidate = circle.project(candidate)
    for _ in range(2):
        violated = [c.violated_circle(candidate) for c in w.constraints]
        violated = [c for c in violated if c is not None]
        if not violated:
            return candidate, circle
        circle = violated[0]
        candidate = circle.project(candidate)
    return (candidate, circle) if w.contains(candidate) else (None, None)


def _accept(potential: Potential, x, g, candidate) -> bool:
    f0, f1 = potential.value(x), potential.value(candidate)
    if f1 > f0:
        return False
    return f1 < f0 or np.hypot(*potential.gradient(candidate)) < np.hypot(*g)


def _check_stall(potential: Potential, trajectory: Trajectory, circle, tol):
    x = np.asarray(trajectory.terminal)
    g = potential.gradient(x)
    if circle is None:
        if np.hypot(*g) > tol:
            return
        if np.any(np.linalg.eigvalsh(potential.hessian(x)) < 0):
            raise StalledAtSaddle(
                f"Flow stalled at the saddle {tuple(x)}.", trajectory
            )
        return
    theta = circle.angle(x)
    tangent = np.array([-np.sin(theta), np.cos(theta)])
    if abs(g @ tangent) > tol:
        return
    r = circle.radius
    radial = np.array([np.cos(theta), np.sin(theta)])
    curvature = r * r * tangent @ potential.hessian(x) @ tangent - r * g @ radial
    if curvature < 0:
        raise StalledAtSaddle(
            f"Flow stalled on {circle.label} at the boundary saddle {tuple(x)}.",
            trajectory,
        )
