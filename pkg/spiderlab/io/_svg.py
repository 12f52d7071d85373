"""
Deterministic SVG figures of workspaces, sampled regions, trajectories and descent
fields. Coordinates are written in model units inside a y-flipped group, so arc sweep
flags follow the counterclockwise convention of the model.
"""

import dataclasses
import functools
import math
import typing

import numpy as np

from .._util import grid_points
from ..charges import Region
from ..control import Trajectory
from ..potentials import Potential
from ..workspace import Arc, Workspace

PREAMBLE = """\
<?xml version="1.0" encoding="UTF-8" standalone="no"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" \
width="%(width)s" height="%(height)s" viewBox="%(viewbox)s">
<g transform="scale(1,-1)">
"""

POSTAMBLE = """\
</g>
</svg>
"""

_STROKE = "vector-effect:non-scaling-stroke;stroke-width:1"

TAG_STYLES = {
    "free": "fill:none;stroke:#1f77b4;" + _STROKE,
    "sliding": "fill:none;stroke:#d62728;stroke-dasharray:4,2;" + _STROKE,
}


def _f(x: float) -> str:
    return "%.6f" % x


class SVG:
    def __init__(self, pixels: int = 600):
        self.pixels = pixels
        self.min_x = None
        self.max_x = None
        self.min_y = None
        self.max_y = None
        self.commands = []

    def require(self, x, y):
        if self.min_x is None:
            self.min_x = self.max_x = x
            self.min_y = self.max_y = y
        else:
            self.min_x = min(self.min_x, x)
            self.max_x = max(self.max_x, x)
            self.min_y = min(self.min_y, y)
            self.max_y = max(self.max_y, y)

    def require_box(self, bounds):
        xmin, ymin, xmax, ymax = bounds
        self.require(xmin, ymin)
        self.require(xmax, ymax)

    def path(self, d: str, style: str, css_class: typing.Optional[str] = None):
        attr = f' class="{css_class}"' if css_class else ""
        self.commands.append(f'<path{attr} d="{d}" style="{style}"/>')

    def polyline(self, points, style: str, css_class: typing.Optional[str] = None):
        for x, y in points:
            self.require(x, y)
        attr = f' class="{css_class}"' if css_class else ""
        coords = " ".join(f"{_f(x)},{_f(y)}" for x, y in points)
        self.commands.append(f'<polyline{attr} points="{coords}" style="{style}"/>')

    def circle(self, x, y, radius, style: str):
        self.require(x - radius, y - radius)
        self.require(x + radius, y + radius)
        self.commands.append(
            f'<circle cx="{_f(x)}" cy="{_f(y)}" r="{_f(radius)}" style="{style}"/>'
        )

    def document(self) -> str:
        if self.min_x is None:
            xmin, ymin, w, h = 0.0, 0.0, 1.0, 1.0
        else:
            pad = 0.05 * max(self.max_x - self.min_x, self.max_y - self.min_y, 1e-9)
            xmin, ymin = self.min_x - pad, self.min_y - pad
            w = self.max_x - self.min_x + 2 * pad
            h = self.max_y - self.min_y + 2 * pad
        header = PREAMBLE % {
            "width": _f(self.pixels),
            "height": _f(self.pixels * h / w),
            "viewbox": " ".join(_f(v) for v in (xmin, -(ymin + h), w, h)),
        }
        body = "".join(command + "\n" for command in self.commands)
        return header + body + POSTAMBLE


def _arc_segment(arc: Arc, theta0: float, theta1: float) -> str:
    r = arc.circle.radius
    x, y = arc.circle.point(theta1)
    large = int(abs(theta1 - theta0) > math.pi)
    sweep = int(theta1 > theta0)
    return f"A {_f(r)} {_f(r)} 0 {large} {sweep} {_f(x)} {_f(y)}"


def _component_path(arcs: typing.Sequence[Arc]) -> str:
    x, y = arcs[0].start_point
    d = [f"M {_f(x)} {_f(y)}"]
    for arc in arcs:
        if arc.full:
            half = arc.start + 0.5 * arc.sweep
            d.append(_arc_segment(arc, arc.start, half))
            d.append(_arc_segment(arc, half, arc.end))
        else:
            d.append(_arc_segment(arc, arc.start, arc.end))
    d.append("Z")
    return " ".join(d)


@dataclasses.dataclass(frozen=True)
class FieldScene:
    """
    Normalized descent directions of a potential on an ``n`` by ``n`` grid, optionally
    masked by a workspace.
    """

    potential: Potential
    bounds: tuple[float, float, float, float]
    n: int = 24
    domain: typing.Optional[Workspace] = None

    def segments(self):
        nodes = grid_points(self.bounds, self.n).reshape(-1, 2)
        if self.domain is not None:
            nodes = nodes[np.asarray(self.domain.contains(nodes), dtype=bool)]
        descent = -self.potential.sample_gradient(nodes)
        norm = np.hypot(descent[:, 0], descent[:, 1])
        keep = np.isfinite(norm) & (norm > 0)
        nodes, descent, norm = nodes[keep], descent[keep], norm[keep]
        spacing = max(
            self.bounds[2] - self.bounds[0], self.bounds[3] - self.bounds[1]
        ) / max(self.n - 1, 1)
        tips = nodes + 0.4 * spacing * descent / norm[:, None]
        return list(zip(nodes, tips))


@functools.singledispatch
def _draw(scene, svg: SVG):
    raise TypeError(f"Can't render {type(scene).__name__} as SVG.")


@_draw.register
def _(scene: Workspace, svg: SVG):
    if scene.is_empty:
        return
    svg.require_box(scene.bounds())
    d = " ".join(_component_path(c.arcs) for c in scene.components)
    svg.path(
        d,
        "fill:#dde8f0;fill-rule:evenodd;stroke:#333333;" + _STROKE,
        "workspace",
    )
    for x, y in scene.spec.feet.vertices:
        svg.circle(x, y, 0.02, "fill:#333333;stroke:none")


@_draw.register
def _(scene: Region, svg: SVG):
    if scene.is_empty:
        return
    s = scene.resolution
    d = []
    for x, y in scene.sample:
        x0, y0 = x - s / 2, y - s / 2
        svg.require(x0, y0)
        svg.require(x0 + s, y0 + s)
        d.append(f"M {_f(x0)} {_f(y0)} h {_f(s)} v {_f(s)} h {_f(-s)} Z")
    svg.path(" ".join(d), "fill:#2ca02c;fill-rule:evenodd;stroke:none", "region")


@_draw.register
def _(scene: Trajectory, svg: SVG):
    last = len(scene.points) - 1
    for tag, first, end in scene.segments:
        phase = tag.split(":")[0]
        points = scene.points[first : min(end + 1, last) + 1]
        svg.polyline(points, TAG_STYLES[phase], phase)


@_draw.register
def _(scene: FieldScene, svg: SVG):
    svg.require_box(scene.bounds)
    style = "fill:none;stroke:#7f7f7f;" + _STROKE
    for tail, tip in scene.segments():
        svg.polyline((tail, tip), style, "field")


def render_svg(scene, *layers, pixels: int = 600) -> str:
    """
    Render a :class:`~spiderlab.workspace.Workspace`, a sampled
    :class:`~spiderlab.charges.Region`, a :class:`~spiderlab.control.Trajectory` or a
    :class:`FieldScene` to an SVG document. Additional ``layers`` are drawn on top in
    order. Identical input gives identical bytes.
    """
    svg = SVG(pixels)
    for item in (scene, *layers):
        _draw(item, svg)
    return svg.document()
