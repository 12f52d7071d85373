import io
import json
import os
import unittest

from spiderlab import presets
from spiderlab.definitions import Leg, SpiderSpec, define_spider, spider_to_dict
from spiderlab.exceptions import SpiderDefinitionError
from spiderlab.io import file_spider
from tests._shared import SpiderFixture

FEET = [[1.0, 0.0], [-0.5, 0.8660254037844386], [-0.5, -0.8660254037844386]]


def _config(name):
    return os.path.join(os.path.dirname(__file__), "data", "configs", name)


class TestDefineSpider(SpiderFixture, unittest.TestCase):
    def test_uniform(self):
        spider = define_spider({"feet": FEET, "thigh": 1.1, "shin": 0.9})
        self.assertEqual((Leg(1.1, 0.9),) * 3, spider.legs)
        self.assertAlmostEqual(0.2, spider.legs[0].inner_radius)
        self.assertAlmostEqual(2.0, spider.legs[0].outer_radius)
        self.assertIsNone(spider.charges)

    def test_per_leg(self):
        spider = define_spider(
            {"feet": FEET, "thigh": [1.1, 1.2, 1.3], "shin": 0.5, "weights": [1, 2, 3]}
        )
        self.assertEqual([1.1, 1.2, 1.3], [leg.thigh for leg in spider.legs])
        self.assertEqual(2.0, spider.weights.beta)

    def test_thigh_shorter_than_shin(self):
        with self.assertRaises(SpiderDefinitionError) as cm:
            define_spider({"feet": FEET, "thigh": [1.1, 0.3, 1.1], "shin": 0.4})
        self.assertIn("leg B", str(cm.exception))
        self.assertEqual("leg B", cm.exception.field)

    def test_missing(self):
        with self.assertRaises(SpiderDefinitionError) as cm:
            define_spider({"feet": FEET, "thigh": 1.1})
        self.assertEqual("shin", cm.exception.field)

    def test_unknown(self):
        with self.assertRaises(SpiderDefinitionError) as cm:
            define_spider({"feet": FEET, "thigh": 1.1, "shin": 0.9, "knees": 2})
        self.assertIn("knees", str(cm.exception))

    def test_bad_values(self):
        for key, value in (
            ("feet", [[0, 0], [1, 1]]),
            ("feet", [[0, 0], [1, 1], [2, 2]]),
            ("thigh", "long"),
            ("shin", [0.1, 0.2]),
            ("charges", [1, 0, 1]),
            ("weights", [1, -1, 1]),
        ):
            with self.subTest(key=key, value=value):
                definition = {"feet": FEET, "thigh": 1.1, "shin": 0.9, key: value}
                with self.assertRaises(SpiderDefinitionError) as cm:
                    define_spider(definition)
                self.assertEqual(key, cm.exception.field)

    def test_round_trip(self):
        spider = define_spider(
            {"feet": FEET, "thigh": 1.1, "shin": 0.9, "charges": [0.1, 0.7, 1 / 3]}
        )
        again = define_spider(json.loads(json.dumps(spider_to_dict(spider))))
        self.assertEqual(spider, again)

    def test_coulomb_assumption(self):
        self.assertTrue(presets.S2.satisfies_coulomb_assumption)
        self.assertFalse(presets.S1.satisfies_coulomb_assumption)

    def test_spec_legs(self):
        with self.assertRaises(SpiderDefinitionError):
            SpiderSpec(presets.T1, (Leg(1, 0.5),) * 2)


class TestFileSpider(SpiderFixture, unittest.TestCase):
    def test_presets(self):
        self.assertEqual(presets.S1, self.s1)
        self.assertEqual(presets.S2.legs, self.s2.legs)
        self.assertEqual((1.0, 1.0, 1.0), tuple(self.s2.charges.as_array()))

    def test_stream(self):
        stream = io.StringIO(json.dumps({"feet": FEET, "thigh": 0.9, "shin": 0.4}))
        self.assertEqual(presets.S2, file_spider(stream))

    def test_bad_leg(self):
        with self.assertRaises(SpiderDefinitionError) as cm:
            file_spider(_config("bad_leg.json"))
        self.assertIn("bad_leg.json", str(cm.exception))
        self.assertIn("leg B", str(cm.exception))

    def test_broken_json(self):
        with self.assertRaises(SpiderDefinitionError) as cm:
            file_spider(_config("broken.json"))
        self.assertIn("line 3", str(cm.exception))

    def test_missing_file(self):
        with self.assertRaises(SpiderDefinitionError):
            file_spider(_config("nope.json"))
