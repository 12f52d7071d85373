import json
import os
import tempfile
import unittest

from spiderlab.cli import EXIT_DEFINITION, EXIT_DOMAIN, main


def _config(name):
    return os.path.join(os.path.dirname(__file__), "data", "configs", name)


class TestCommandLine(unittest.TestCase):
    def setUp(self):
        self._dir = tempfile.TemporaryDirectory()
        self.dir = self._dir.name

    def tearDown(self):
        self._dir.cleanup()

    def path(self, name):
        return os.path.join(self.dir, name)

    def run_cli(self, *args):
        output = self.path("report.json")
        code = main([*args, "--output", output])
        with open(output) as f:
            return code, json.load(f)

    def test_workspace(self):
        code, report = self.run_cli("workspace", "--preset", "S1")
        self.assertEqual(0, code)
        self.assertEqual([1, 3], report["betti"])
        self.assertEqual(-2, report["euler"])

    def test_census(self):
        code, report = self.run_cli("census", "--config", _config("s1.json"))
        self.assertEqual(0, code)
        self.assertEqual([1, 3, 0], report["mu"])
        self.assertEqual(-2, report["euler"])
        self.assertEqual("hooke", report["potential"])

    def test_weighted_census(self):
        code, report = self.run_cli(
            "census", "--config", _config("s2.json"), "--potential", "weighted"
        )
        self.assertEqual(0, code)
        self.assertEqual([1, 0, 0], report["mu"])

    def test_missing_weights(self):
        code, report = self.run_cli(
            "census", "--config", _config("s1.json"), "--potential", "weighted"
        )
        self.assertEqual(EXIT_DEFINITION, code)
        self.assertEqual("SpiderDefinitionError", report["error"])

    def test_cspace(self):
        code, report = self.run_cli("cspace", "--preset", "S1")
        self.assertEqual(0, code)
        self.assertEqual(
            (8, 36, 6, -22, 12),
            tuple(report[k] for k in ("minima", "saddles", "maxima", "euler", "genus")),
        )

    def test_control(self):
        code, report = self.run_cli(
            "control",
            "--config",
            _config("s2.json"),
            "--mode",
            "coulomb",
            "--target",
            "0",
            "0",
        )
        self.assertEqual(0, code)
        self.assertEqual("TargetIsTrappedMinimum", report["certificate"])
        for q in report["charges"]:
            self.assertAlmostEqual(1 / 3, q, places=12)

    def test_hooke_control(self):
        code, report = self.run_cli(
            "control", "--preset", "S1", "--target", "0.2", "0.1"
        )
        self.assertEqual(0, code)
        self.assertEqual("TargetIsUniqueMinimum", report["certificate"])
        self.assertAlmostEqual(1.0, sum(report["weights"]))

    def test_negative_coordinates(self):
        code, report = self.run_cli(
            "control", "--preset", "S2", "--target", "-0.1", "-0.05"
        )
        self.assertEqual(0, code)
        self.assertEqual([-0.1, -0.05], report["target"])
        code, report = self.run_cli(
            "flow", "--preset", "S1", "--start", "-0.5", "0.3"
        )
        self.assertEqual(0, code)
        self.assertEqual([-0.5, 0.3], report["start"])
        self.assertEqual(["free"], report["phases"])

    def test_unreachable(self):
        code, report = self.run_cli(
            "control", "--preset", "S2", "--mode", "coulomb", "--target", "0.95", "0"
        )
        self.assertEqual(EXIT_DOMAIN, code)
        self.assertEqual("Unreachable", report["error"])

    def test_bad_leg(self):
        code, report = self.run_cli("workspace", "--config", _config("bad_leg.json"))
        self.assertEqual(EXIT_DEFINITION, code)
        self.assertEqual("SpiderDefinitionError", report["error"])
        self.assertIn("leg B", report["message"])

    def test_empty_trap(self):
        config = self.path("small.json")
        with open(config, "w") as f:
            json.dump(
                {
                    "feet": [[1, 0], [-0.5, 0.8660254], [-0.5, -0.8660254]],
                    "thigh": 0.5,
                    "shin": 0.2,
                },
                f,
            )
        svg = self.path("trap.svg")
        code, report = self.run_cli(
            "trap", "--config", config, "--resolution", "32", "--svg", svg
        )
        self.assertEqual(0, code)
        self.assertTrue(report["empty"])
        self.assertEqual(0, report["count"])
        with open(svg) as f:
            self.assertNotIn("<path", f.read())

    def test_flow(self):
        csv_path = self.path("flow.csv")
        code, report = self.run_cli(
            "flow", "--preset", "S1", "--start", "1.29", "0.01", "--csv", csv_path
        )
        self.assertEqual(0, code)
        self.assertEqual(["free", "sliding", "free"], report["phases"])
        self.assertLess(max(abs(v) for v in report["terminal"]), 1e-6)
        with open(csv_path) as f:
            self.assertEqual(report["steps"] + 2, len(f.readlines()))

    def test_stalled_flow(self):
        code, report = self.run_cli(
            "flow", "--preset", "S1", "--start", "1.29", "0"
        )
        self.assertEqual(EXIT_DOMAIN, code)
        self.assertEqual("StalledAtSaddle", report["error"])

    def test_equilibria(self):
        code, report = self.run_cli("equilibria", "--config", _config("s2.json"))
        self.assertEqual(0, code)
        self.assertEqual(4, report["count"])
        self.assertEqual([0, 1, 1, 1], sorted(e["index"] for e in report["equilibria"]))
