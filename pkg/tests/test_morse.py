import math
import unittest

import numpy as np

from spiderlab.exceptions import NonMorsePoint
from spiderlab.geom import line_circle_intersections
from spiderlab.morse import (
    MAXIMUM,
    MINIMUM,
    NO_CHANGE,
    SADDLE,
    boundary_restriction_criticals,
    census,
    classify_boundary_critical,
    classify_corner,
    hessian_index,
    interior_critical_points,
)
from spiderlab.potentials import CoulombPotential, HookePotential
from tests._shared import SpiderFixture


class TestHookeCensus(SpiderFixture, unittest.TestCase):
    def test_s1(self):
        result = census(self.hooke, self.ws1)
        self.assertEqual((1, 3, 0), result.mu)
        self.assertEqual(-2, result.euler)
        (minimum,) = [p for p in result.points if p.index == 0]
        self.assertEqual("interior", minimum.kind)
        np.testing.assert_allclose(minimum.location, (0, 0), atol=1e-10)

    def test_s1_saddles(self):
        result = census(self.hooke, self.ws1)
        saddles = [p for p in result.points if p.classification == SADDLE]
        self.assertEqual(3, len(saddles))
        for foot in self.t1.vertices:
            _, far = line_circle_intersections((0, 0), foot, foot, 0.2)
            distances = [math.dist(far, s.location) for s in saddles]
            self.assertLess(min(distances), 1e-8, f"saddle behind foot {foot}")
        for saddle in saddles:
            self.assertEqual("boundary", saddle.kind)
            self.assertEqual("1-cell", saddle.cell)

    def test_s2(self):
        result = census(self.hooke, self.ws2)
        self.assertEqual((1, 0, 0), result.mu)
        self.assertEqual(3, len(result.of_kind("boundary")))
        self.assertEqual(3, len(result.of_kind("corner")))
        for p in result.of_kind("boundary") + result.of_kind("corner"):
            self.assertEqual(NO_CHANGE, p.classification)
            self.assertIsNone(p.index)
            self.assertEqual("none", p.cell)

    def test_negated_s2(self):
        result = census(-self.hooke, self.ws2)
        self.assertEqual((3, 3, 1), result.mu)
        self.assertEqual(1, result.euler)
        corners = result.of_kind("corner")
        self.assertTrue(all(p.classification == MINIMUM for p in corners))
        (top,) = result.of_kind("interior")
        self.assertEqual(MAXIMUM, top.classification)

    def test_perfect_weighted(self):
        rng = np.random.default_rng(42)
        for _ in range(10):
            weights = rng.uniform(0.8, 1.25, 3)
            potential = HookePotential(self.t1, weights)
            for w in (self.ws1, self.ws2):
                with self.subTest(weights=weights, betti=w.betti):
                    result = census(potential, w)
                    self.assertEqual((*w.betti, 0), result.mu)


class TestBoundary(SpiderFixture, unittest.TestCase):
    def test_restriction_points(self):
        found = boundary_restriction_criticals(self.hooke, self.ws1)
        self.assertEqual(9, len(found))
        for arc, p in found:
            r = math.dist(p, arc.circle.center)
            self.assertAlmostEqual(arc.circle.radius, r, delta=1e-12)

    def test_scanned_matches_radial(self):
        # A Coulomb field with equal charges has no radial center, so its restriction
        # points are found by scanning.
        potential = CoulombPotential(self.t1, (1, 1, 1))
        found = boundary_restriction_criticals(potential, self.ws2)
        self.assertTrue(found)
        for arc, p in found:
            theta = arc.circle.angle(p)
            tangent = np.array([-math.sin(theta), math.cos(theta)])
            self.assertLess(abs(potential.gradient(p) @ tangent), 1e-8)

    def test_classify_hole_points(self):
        near = classify_boundary_critical(self.hooke, (0.8, 0), self.ws1)
        far = classify_boundary_critical(self.hooke, (1.2, 0), self.ws1)
        self.assertEqual(NO_CHANGE, near.classification)
        self.assertEqual(SADDLE, far.classification)
        self.assertEqual(1, far.index)

    def test_corner(self):
        for corner in self.ws1.corners:
            self.assertEqual(
                NO_CHANGE, classify_corner(self.hooke, corner, self.ws1).classification
            )


class TestIndex(unittest.TestCase):
    def test_index(self):
        self.assertEqual(0, hessian_index(np.eye(2)))
        self.assertEqual(1, hessian_index(np.diag([1.0, -2.0])))
        self.assertEqual(2, hessian_index(-np.eye(2)))

    def test_degenerate(self):
        with self.assertRaises(NonMorsePoint):
            hessian_index(np.diag([1.0, 0.0]), (0, 0))


class TestInterior(SpiderFixture, unittest.TestCase):
    def test_equal_charges(self):
        potential = CoulombPotential(self.t1, (1, 1, 1))
        points = interior_critical_points(potential, self.ws2)
        for p in points:
            self.assertTrue(self.ws2.contains(p.location))
        self.assertEqual([0, 1, 1, 1], sorted(p.index for p in points))
