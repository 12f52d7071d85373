import csv
import io
import json
import os
import re
import tempfile
import unittest

import numpy as np

from spiderlab.charges import robust_domain, trapping_domain
from spiderlab.control import gradient_flow
from spiderlab.cspace import lift_census
from spiderlab.definitions import SpiderSpec
from spiderlab.exceptions import Unreachable
from spiderlab.io import (
    FieldScene,
    census_report,
    cspace_report,
    dumps,
    error_report,
    render_svg,
    to_builtin,
    trajectory_rows,
    workspace_report,
    write_csv,
    write_json,
)
from spiderlab.morse import census
from spiderlab.presets import T1
from spiderlab.workspace import build_workspace
from tests._shared import SpiderFixture

_SHAPES = re.compile(r"<(path|polyline|circle)\b")


class TestReports(SpiderFixture, unittest.TestCase):
    def test_workspace_report(self):
        report = workspace_report(self.ws1)
        self.assertEqual([1, 3], report["betti"])
        self.assertEqual(-2, report["euler"])
        self.assertEqual(4, len(report["components"]))
        self.assertEqual(3, sum(c["hole"] for c in report["components"]))
        self.assertEqual(3, len(report["inner_circles"]))
        json.loads(dumps(report))

    def test_census_report(self):
        report = census_report(census(self.hooke, self.ws1), "hooke")
        self.assertEqual([1, 3, 0], report["mu"])
        self.assertEqual(-2, report["euler"])
        kinds = {p["kind"] for p in report["points"]}
        self.assertEqual({"interior", "boundary", "corner"}, kinds)

    def test_cspace_report(self):
        lifted = lift_census(census(self.hooke, self.ws1), self.ws1)
        report = cspace_report(lifted, self.ws1)
        self.assertEqual(8, report["minima"])
        self.assertEqual(36, report["saddles"])
        self.assertEqual(6, report["maxima"])
        self.assertEqual(-22, report["euler"])
        self.assertEqual(12, report["genus"])
        self.assertEqual(-22, report["covering_euler"])

    def test_dumps(self):
        report = {"b": np.float64(0.1), "a": (np.int64(2), np.array([1.5, 2.0]))}
        text = dumps(report)
        self.assertTrue(text.endswith("}\n"))
        self.assertEqual(text, dumps(dict(reversed(list(report.items())))))
        self.assertEqual({"a": [2, [1.5, 2.0]], "b": 0.1}, json.loads(text))

    def test_to_builtin_rejects(self):
        with self.assertRaises(TypeError):
            to_builtin(object())

    def test_error_report(self):
        report = error_report(Unreachable("Too far.", (3, 0)))
        self.assertEqual("Unreachable", report["error"])
        self.assertIn("Too far.", report["message"])

    def test_write_json(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "report.json")
            write_json(path, {"x": 1})
            write_json(path, {"x": 2})
            with open(path) as f:
                self.assertEqual({"x": 2}, json.load(f))
            self.assertEqual(["report.json"], os.listdir(d))

    def test_write_csv(self):
        trajectory = gradient_flow(self.hooke, (-0.5, 0.3), self.ws1)
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "flow.csv")
            write_csv(path, ("x", "y", "value", "tag"), trajectory_rows(trajectory))
            with open(path, newline="") as f:
                rows = list(csv.reader(f))
        self.assertEqual(["x", "y", "value", "tag"], rows[0])
        self.assertEqual(len(trajectory.points) + 1, len(rows))
        self.assertEqual(trajectory.points[0, 0], float(rows[1][0]))
        self.assertEqual(trajectory.values[-1], float(rows[-1][2]))
        self.assertEqual({"free"}, {row[3] for row in rows[1:]})


class TestSVG(SpiderFixture, unittest.TestCase):
    def test_workspace(self):
        svg = render_svg(self.ws1)
        paths = re.findall(r'<path class="workspace" d="([^"]*)"', svg)
        self.assertEqual(1, len(paths))
        self.assertEqual(4, paths[0].count("M"))
        self.assertIn("evenodd", svg)
        self.assertEqual(3, svg.count("<circle"))

    def test_deterministic(self):
        trajectory = gradient_flow(self.hooke, (1.29, 0.01), self.ws1)
        first = render_svg(self.ws1, trajectory)
        second = render_svg(build_workspace(self.s1), trajectory)
        self.assertEqual(first.encode(), second.encode())

    def test_trajectory_classes(self):
        trajectory = gradient_flow(self.hooke, (1.29, 0.01), self.ws1)
        svg = render_svg(trajectory)
        classes = re.findall(r'<polyline class="(\w+)"', svg)
        self.assertEqual(["free", "sliding", "free"], classes)

    def test_empty_region(self):
        spider = SpiderSpec.uniform(T1, 0.5, 0.2)
        region = robust_domain(spider, 32)
        self.assertTrue(region.is_empty)
        svg = render_svg(build_workspace(spider, allow_empty=True), region)
        self.assertEqual([], _SHAPES.findall(svg))
        self.assertIn('viewBox="', svg)

    def test_region(self):
        region = trapping_domain(self.t1, 32)
        svg = render_svg(region)
        self.assertEqual(1, svg.count('class="region"'))
        self.assertEqual(len(region.sample), svg.count(" Z"))

    def test_field(self):
        scene = FieldScene(self.hooke, self.ws2.bounds(), n=12, domain=self.ws2)
        svg = render_svg(self.ws2, scene)
        self.assertEqual(len(scene.segments()), svg.count('class="field"'))
        self.assertGreater(len(scene.segments()), 0)

    def test_unknown_scene(self):
        with self.assertRaises(TypeError):
            render_svg(io.StringIO())
