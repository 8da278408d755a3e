# -*- coding: utf-8 -*-
"""
Test module for the :mod:`tlentangle.yang_baxter` module
"""
import unittest
import numpy as np
from tlentangle import yang_baxter as yb
from tlentangle.temperley_lieb import (
    two_dim_generator, family_generator, MaxEntangled, TLGenerator)
from tlentangle.common import SingularNormalization, DimensionMismatch
from _base_testing import RandomTestCase


class BraidOperatorTest(RandomTestCase):
    """Test the Yang-Baxterized operator"""

    def test_q_from_generator(self):
        op = yb.yang_baxterize(two_dim_generator(0.5, 1.), 1j)
        self.assertEqual(op.q, 0.5)
        self.assertAlmostEqual(op.d, 2.5)

    def test_trivial(self):
        """Test ``x = 1``, where the generator drops out"""
        self.assertAlmostArrayEqual(
            yb.yang_baxterize(two_dim_generator(2.), 1.).r, np.eye(4),
            atol=1e-14)
        self.assertAlmostArrayEqual(
            yb.yang_baxterize(two_dim_generator(0.5), 1.).r, -np.eye(4),
            atol=1e-14)

    def test_imaginary_unit(self):
        for q in [0.3, 1., 2.]:
            gen = two_dim_generator(q, 0.7)
            r = yb.yang_baxterize(gen, 1j).r
            self.assertAlmostArrayEqual(
                r, 1j * (np.eye(4) - 2 / gen.d * gen.u), atol=1e-14)
            self.assertAlmostArrayEqual(r @ r, -np.eye(4), atol=1e-12)

    def test_imaginary_unit_trivial_q(self):
        phi = 0.4
        r = yb.yang_baxterize(two_dim_generator(1., phi), 1j).r
        expected = 1j * np.eye(4, dtype=complex)
        expected[1:3, 1:3] = 1j * np.array(
            [[0, -np.exp(1j * phi)], [-np.exp(-1j * phi), 0]])
        self.assertAlmostArrayEqual(r, expected, atol=1e-14)

    def test_inverse(self):
        for i in range(self.nrandom // 10):
            q = self.rng.uniform(0.2, 5)
            x = self.rng.uniform(0.5, 2) * np.exp(
                1j * self.rng.uniform(0.1, 3))
            op = yb.yang_baxterize(two_dim_generator(q, 1.), x)
            self.assertAlmostArrayEqual(op.r @ op.inverse(), np.eye(4),
                                        atol=1e-10)

    def test_singular(self):
        with self.assertRaises(SingularNormalization):
            yb.yang_baxterize(two_dim_generator(1.), 1.)
        with self.assertRaises(SingularNormalization):
            yb.yang_baxterize(two_dim_generator(2.), 2.)
        with self.assertRaises(ValueError):
            yb.yang_baxterize(two_dim_generator(2.), 0.)

    def test_qutrits(self):
        with self.assertRaises(DimensionMismatch):
            yb.yang_baxterize(family_generator(MaxEntangled(3)), 1j)


class YangBaxterEquationTest(RandomTestCase):
    """Test the Yang-Baxter equation"""

    def test_trivial(self):
        self.assertAlmostEqual(
            yb.verify_ybe(two_dim_generator(2.), 1., 1.), 0.)

    def test_unit_circle(self):
        gen = two_dim_generator(2.)
        self.assertLessEqual(
            yb.verify_ybe(gen, np.exp(0.3j), np.exp(0.7j)), 1e-10)

    def test_random(self):
        for i in range(self.nrandom // 10):
            q = self.rng.uniform(0.2, 5)
            gen = two_dim_generator(q, self.rng.uniform(0, 2 * np.pi))
            x, y = np.exp(1j * self.rng.uniform(0.2, 1.4, 2))
            self.assertLessEqual(yb.verify_ybe(gen, x, y), 1e-10,
                                 msg='q=%s, x=%s, y=%s' % (q, x, y))

    def test_off_circle(self):
        """The equation also holds for real spectral parameters"""
        gen = two_dim_generator(3.)
        self.assertLessEqual(yb.verify_ybe(gen, 1.3, 0.6), 1e-10)

    def test_detector(self):
        """Test that a generator violating the algebra fails"""
        u = self.random_hermitian(4)
        gen = TLGenerator(u, 2.5, validate=False)
        self.assertGreater(
            yb.verify_ybe(gen, np.exp(0.3j), np.exp(0.7j), q=2.), 1e-3)


class UnitarityTest(RandomTestCase):
    """Test the inversion identities"""

    def test_imaginary_unit(self):
        op = yb.yang_baxterize(two_dim_generator(1.5), 1j)
        res = op.unitarity_residuals()
        self.assertLessEqual(res['R^dagger - R^-1'], 1e-10)
        self.assertLessEqual(res['R^-1 - R(-x)'], 1e-10)
        self.assertLessEqual(res['R^-1 - R(1/x)'], 1e-10)

    def test_trivial(self):
        op = yb.yang_baxterize(two_dim_generator(1.5), 1.)
        res = op.unitarity_residuals()
        for key in ['R R^-1 - I', 'R^dagger - R^-1', 'R^-1 - R(1/x)']:
            self.assertAlmostEqual(res[key], 0., msg=key)
        # R(-1) = -R(1)
        self.assertAlmostEqual(res['R^-1 - R(-x)'], 4.)

    def test_grid(self):
        thetas = np.linspace(0.05, np.pi - 0.05, 50)
        for q in [0.5, 1.5, 4.]:
            report = yb.verify_unitarity(two_dim_generator(q, 2.), thetas)
            self.assertTrue(report.passed, msg=str(report.residuals))
            self.assertIn('R^-1 - R(-x) at x = i', report.residuals)
            # only holds at x = i
            self.assertGreater(report.notes['R^-1 - R(-x)'], 1e-3)

    def test_off_circle(self):
        op = yb.yang_baxterize(two_dim_generator(2.), 1.3)
        self.assertGreater(op.unitarity_residuals()['R^dagger - R^-1'], 1e-3)
        self.assertLessEqual(op.unitarity_residuals()['R R^-1 - I'], 1e-10)


if __name__ == '__main__':
    unittest.main()
