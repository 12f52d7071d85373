import dataclasses
import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from spiderlab.exceptions import InvalidWeights, PoleAtFoot, ZeroCharge
from spiderlab.potentials import (
    ChargeTriple,
    CoulombPotential,
    HookePotential,
    Weights,
    coulomb_gradient,
    coulomb_value,
    hooke_form,
    hooke_gradient,
    hooke_value,
    weighted_hooke,
    weighted_minimum,
)
from tests._shared import SpiderFixture

weights = st.tuples(*(st.floats(0.05, 20),) * 3)
coords = st.floats(-3, 3, allow_nan=False)


class TestHooke(SpiderFixture, unittest.TestCase):
    def test_centroid(self):
        self.assertAlmostEqual(3.0, hooke_value((0, 0), self.t1), delta=1e-12)
        np.testing.assert_allclose(hooke_gradient((0, 0), self.t1), 0, atol=1e-15)
        np.testing.assert_allclose(weighted_minimum(self.t1), (0, 0), atol=1e-15)

    def test_vectorized(self):
        x = np.array([[[0, 0], [1, 0]], [[0.5, 0.5], [-1, 2]]])
        values = hooke_value(x, self.t1)
        self.assertEqual((2, 2), values.shape)
        self.assertAlmostEqual(hooke_value(x[1, 1], self.t1), values[1, 1])
        self.assertEqual((2, 2, 2), hooke_gradient(x, self.t1).shape)

    @settings(max_examples=100)
    @given(weights, coords, coords)
    def test_form(self, w, x, y):
        form = hooke_form(self.t1, w)
        self.assertAlmostEqual(sum(w), form.coefficient, delta=1e-12 * sum(w))
        np.testing.assert_allclose(form.center, weighted_minimum(self.t1, w))
        expected = weighted_hooke((x, y), self.t1, w)
        self.assertAlmostEqual(expected, form.value((x, y)), delta=1e-9 * expected)

    @settings(max_examples=100)
    @given(weights)
    def test_minimum(self, w):
        z = weighted_minimum(self.t1, w)
        potential = HookePotential(self.t1, w)
        np.testing.assert_allclose(potential.gradient(z), 0, atol=1e-9 * sum(w))
        self.assertEqual(z, potential.radial_center)
        self.assertTrue(self.t1.contains(z), "Positive weights keep Z inside")

    def test_weights(self):
        with self.assertRaises(InvalidWeights):
            Weights(1, 0, 1)
        with self.assertRaises(InvalidWeights):
            HookePotential(self.t1, (1, -2, 1))
        w = Weights(1, 2, 3)
        self.assertAlmostEqual(1.0, w.normalized().total)
        np.testing.assert_allclose(
            weighted_minimum(self.t1, w),
            weighted_minimum(self.t1, w.scaled(7.5)),
            atol=1e-12,
        )

    def test_frozen_fields(self):
        w = Weights(1, 2, 3)
        self.assertEqual({"alpha": 1, "beta": 2, "gamma": 3}, dict(w))
        self.assertEqual({"q1": 1, "q2": -1, "q3": 2}, dict(ChargeTriple(1, -1, 2)))
        with self.assertRaises(dataclasses.FrozenInstanceError):
            w.alpha = 5

    def test_hessian(self):
        h = self.weighted.hessian(np.zeros((4, 2)))
        self.assertEqual((4, 2, 2), h.shape)
        np.testing.assert_allclose(h[2], 2 * 3.1 * np.eye(2))

    def test_names(self):
        self.assertEqual("hooke", self.hooke.name)
        self.assertEqual("weighted", self.weighted.name)
        self.assertEqual("-hooke", (-self.hooke).name)
        self.assertIs(self.hooke, -(-self.hooke))


class TestCoulomb(SpiderFixture, unittest.TestCase):
    def test_centroid_equilibrium(self):
        np.testing.assert_allclose(
            coulomb_gradient((0, 0), self.t1, (1, 1, 1)), 0, atol=1e-15
        )
        self.assertAlmostEqual(3.0, coulomb_value((0, 0), self.t1, (1, 1, 1)))

    def test_pole(self):
        with self.assertRaises(PoleAtFoot):
            coulomb_value((1, 0), self.t1, (1, 1, 1))
        with self.assertRaises(PoleAtFoot):
            coulomb_gradient(self.t1.vertices, self.t1, (1, 1, 1))

    def test_sample_at_pole(self):
        potential = CoulombPotential(self.t1, (1, 1, 1))
        values = potential.sample_value(np.array([[1, 0], [0, 0]]))
        self.assertTrue(np.isnan(values[0]))
        self.assertAlmostEqual(3.0, values[1])
        self.assertTrue(np.all(np.isnan(potential.sample_gradient([1, 0]))))

    def test_charges(self):
        with self.assertRaises(ZeroCharge):
            ChargeTriple(1, 0, 2)
        q = ChargeTriple(2, -1, 1).normalized()
        np.testing.assert_allclose(q.as_array(), (0.5, -0.25, 0.25))

    def test_negated(self):
        potential = CoulombPotential(self.t1, (1, 2, 3))
        x = (0.1, 0.2)
        self.assertEqual(-potential.value(x), (-potential).value(x))
        np.testing.assert_array_equal(-potential.hessian(x), (-potential).hessian(x))
        self.assertEqual(3, len((-potential).poles))
