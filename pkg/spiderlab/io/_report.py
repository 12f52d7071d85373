"""
Deterministic JSON and CSV reports. Floats are written in their shortest round-trip
form and files are replaced atomically.
"""

import csv
import dataclasses
import io
import json
import os
import tempfile
import typing

import numpy as np

from ..constraints import ConstraintCircle
from ..control import ControlSolution, Trajectory
from ..cspace import CspaceCensus, covering_euler_characteristic
from ..morse import MorseCensus
from ..workspace import Arc, Workspace, euler_characteristic


def to_builtin(obj):
    """
    Convert reports to JSON-compatible builtins.
    """
    if isinstance(obj, (str, bool, int, type(None))):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return to_builtin(obj.tolist())
    if isinstance(obj, tuple) and hasattr(obj, "_fields"):
        return [to_builtin(v) for v in obj]
    if dataclasses.is_dataclass(obj):
        return {
            f.name: to_builtin(getattr(obj, f.name))
            for f in dataclasses.fields(obj)
            if not callable(getattr(obj, f.name))
        }
    if isinstance(obj, dict):
        return {str(k): to_builtin(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_builtin(v) for v in obj]
    raise TypeError(f"Can't serialize {type(obj).__name__} in a report.")


def dumps(report) -> str:
    return json.dumps(to_builtin(report), sort_keys=True, indent=2) + "\n"


def write_text(path: typing.Union[str, "os.PathLike"], text: str):
    """
    Write ``text`` next to ``path`` and move it into place.
    """
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    handle, tmp = tempfile.mkstemp(dir=directory, prefix=".spiderlab-")
    try:
        with os.fdopen(handle, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_json(path, report):
    write_text(path, dumps(report))


def csv_text(header: typing.Sequence[str], rows: typing.Iterable) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(
            [repr(v) if isinstance(v, float) else v for v in to_builtin(row)]
        )
    return buffer.getvalue()


def write_csv(path, header, rows):
    write_text(path, csv_text(header, rows))


def _circle_report(circle: ConstraintCircle):
    return {
        "center": list(circle.center),
        "radius": circle.radius,
        "label": circle.label,
    }


def _arc_report(arc: Arc):
    return {
        "index": arc.index,
        "circle": _circle_report(arc.circle),
        "start": arc.start,
        "sweep": arc.sweep,
    }


def workspace_report(w: Workspace) -> dict:
    return {
        "betti": list(w.betti),
        "euler": euler_characteristic(w),
        "components": [
            {
                "hole": c.is_hole,
                "arcs": [a.index for a in c.arcs],
                "corners": [list(k.location) for k in c.corners],
                "signed_area": c.signed_area,
            }
            for c in w.components
        ],
        "arcs": [_arc_report(a) for a in w.arcs],
        "inner_circles": [_circle_report(c) for c in w.inner_circles],
        "corners": [
            {
                "location": list(k.location),
                "incoming": k.incoming.index,
                "outgoing": k.outgoing.index,
            }
            for k in w.corners
        ],
    }


def census_report(census: MorseCensus, potential: str) -> dict:
    return {
        "potential": potential,
        "mu": list(census.mu),
        "euler": census.euler,
        "points": to_builtin(census.points),
    }


def cspace_report(lifted: CspaceCensus, w: Workspace) -> dict:
    return {
        **dict(lifted),
        "euler": lifted.euler,
        "genus": lifted.genus,
        "covering_euler": covering_euler_characteristic(w),
    }


def control_report(solution: ControlSolution) -> dict:
    key = "weights" if solution.mode == "hooke" else "charges"
    return {
        "mode": solution.mode,
        key: solution.parameters.as_array().tolist(),
        "target": list(solution.target),
        "certificate": solution.certificate,
        "residual": solution.residual,
    }


def trajectory_rows(trajectory: Trajectory):
    for (x, y), tag, value in zip(
        trajectory.points, trajectory.tags, trajectory.values
    ):
        yield float(x), float(y), float(value), tag


def error_report(error: BaseException) -> dict:
    return {"error": type(error).__name__, "message": str(error)}
