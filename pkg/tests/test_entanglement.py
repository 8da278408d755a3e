# -*- coding: utf-8 -*-
"""
Test module for the :mod:`tlentangle.entanglement` module
"""
import unittest
import numpy as np
from tlentangle import entanglement as ent
from tlentangle.temperley_lieb import (
    build_state, q_from_loop, MaxEntangled, TwoDim, ThreeDim)
from tlentangle.linalg import ket2dm
from tlentangle.common import (
    NotNormalized, DimensionMismatch, NotDensityMatrix)
from _base_testing import RandomTestCase


class SchmidtTest(RandomTestCase):
    """Test the Schmidt decomposition"""

    def test_product(self):
        spectrum = ent.schmidt([0, 1, 0, 0], 2)
        self.assertAlmostArrayEqual(spectrum.coefficients, [1, 0], atol=1e-12)
        self.assertEqual(spectrum.rank, 1)
        self.assertAlmostEqual(spectrum.purity, 1.)

    def test_bell(self):
        spectrum = ent.schmidt(np.array([1, 0, 0, 1]) / np.sqrt(2), 2)
        self.assertAlmostArrayEqual(spectrum.coefficients,
                                    [np.sqrt(0.5)] * 2)
        self.assertEqual(spectrum.rank, 2)

    def test_two_dim(self):
        spectrum = ent.schmidt(build_state(TwoDim(2.)), 2)
        self.assertAlmostArrayEqual(spectrum.coefficients ** 2, [0.8, 0.2])

    def test_random(self):
        """Compare with the singular values of the amplitudes"""
        for i in range(self.nrandom // 10):
            psi = self.random_state(9)
            spectrum = ent.schmidt(psi, 3)
            self.assertAlmostArrayEqual(
                spectrum.coefficients,
                np.linalg.svd(psi.reshape(3, 3), compute_uv=False),
                atol=1e-10)
            self.assertAlmostEqual((spectrum.coefficients ** 2).sum(), 1.)

    def test_invalid(self):
        with self.assertRaises(NotNormalized):
            ent.schmidt([1, 1, 0, 0], 2)
        with self.assertRaises(DimensionMismatch):
            ent.schmidt([1, 0, 0], 2)


class GeneralizedConcurrenceTest(RandomTestCase):
    """Test the concurrence of the representation families"""

    def test_max_entangled(self):
        for n in [2, 3, 4]:
            phases = self.rng.uniform(0, 2 * np.pi, n)
            state = build_state(MaxEntangled(n, phases))
            self.assertAlmostEqual(
                ent.generalized_concurrence(state, n).value, 1.)

    def test_two_dim(self):
        for q in [0.1, 0.5, 1., 3.]:
            spec = TwoDim(q, *self.rng.uniform(0, 2 * np.pi, 2))
            self.assertAlmostEqual(
                ent.generalized_concurrence(build_state(spec), 2).value,
                2 / spec.d, places=12)

    def test_three_dim(self):
        for q in [0.3, 1., 2.]:
            for branch in [1, 2, 3]:
                spec = ThreeDim(branch, q)
                self.assertAlmostEqual(
                    ent.generalized_concurrence(build_state(spec), 3).value,
                    np.sqrt(3 / spec.d), places=12, msg=str(spec))

    def test_decreasing_with_loop(self):
        """The concurrence falls strictly as d grows along the families"""
        values = [
            ent.generalized_concurrence(
                build_state(TwoDim(q_from_loop(d))), 2).value
            for d in np.linspace(2.01, 12, 50)]
        self.assertTrue(np.all(np.diff(values) < 0), msg=str(values))
        for branch in [1, 2, 3]:
            values = [
                ent.generalized_concurrence(build_state(ThreeDim(
                    branch, q_from_loop(d, 'three-dim'))), 3).value
                for d in np.linspace(3.01, 12, 50)]
            self.assertTrue(np.all(np.diff(values) < 0),
                            msg='branch %i: %s' % (branch, values))

    def test_product(self):
        self.assertAlmostEqual(
            ent.generalized_concurrence([1, 0, 0, 0], 2).value, 0.)
        self.assertAlmostEqual(ent.linear_entropy([1, 0, 0, 0], 2), 0.)

    def test_linear_entropy(self):
        state = build_state(MaxEntangled(3))
        self.assertAlmostEqual(ent.linear_entropy(state, 3), 2 / 3.)

    def test_float(self):
        value = ent.generalized_concurrence([1, 0, 0, 0], 2)
        self.assertEqual(value.method, 'generalized')
        self.assertIsInstance(float(value), float)


class WoottersTest(RandomTestCase):
    """Test the concurrence of two-qubit density matrices"""

    def test_bell(self):
        rho = ket2dm(np.array([1, 0, 0, 1]) / np.sqrt(2))
        self.assertAlmostEqual(ent.wootters_concurrence(rho).value, 1.)

    def test_mixed(self):
        self.assertAlmostEqual(
            ent.wootters_concurrence(np.eye(4) / 4).value, 0.)

    def test_werner(self):
        psi = np.array([0, 1, 1, 0]) / np.sqrt(2)
        rho = 0.5 / 4 * np.eye(4) + 0.5 * ket2dm(psi)
        self.assertAlmostEqual(ent.wootters_concurrence(rho).value, 0.25,
                               places=12)
        self.assertAlmostEqual(ent.x_state_concurrence(rho).value, 0.25,
                               places=12)

    def test_pure_states(self):
        """Wootters and the generalized concurrence agree on pure states"""
        for i in range(self.nrandom):
            psi = self.random_state(4)
            generalized = ent.generalized_concurrence(psi, 2).value
            self.assertLessEqual(abs(
                ent.wootters_concurrence(ket2dm(psi)).value - generalized),
                1e-10)
            self.assertAlmostEqual(
                generalized, 2 * abs(psi[0] * psi[3] - psi[1] * psi[2]),
                places=10)

    def test_x_states(self):
        """Compare the X state formula with Wootters"""
        for i in range(self.nrandom // 10):
            p = self.rng.dirichlet(np.ones(4))
            rho = np.diag(p).astype(complex)
            z14 = np.sqrt(p[0] * p[3]) * self.rng.uniform()
            z23 = np.sqrt(p[1] * p[2]) * self.rng.uniform()
            phases = np.exp(1j * self.rng.uniform(0, 2 * np.pi, 2))
            rho[0, 3] = z14 * phases[0]
            rho[3, 0] = z14 * phases[0].conjugate()
            rho[1, 2] = z23 * phases[1]
            rho[2, 1] = z23 * phases[1].conjugate()
            self.assertAlmostEqual(ent.wootters_concurrence(rho).value,
                                   ent.x_state_concurrence(rho).value,
                                   places=10)

    def test_not_x_state(self):
        rho = ket2dm(np.array([1, 1, 0, 0]) / np.sqrt(2))
        with self.assertRaises(ValueError):
            ent.x_state_concurrence(rho)

    def test_invalid(self):
        with self.assertRaises(NotDensityMatrix):
            ent.wootters_concurrence(np.eye(4))
        with self.assertRaises(NotDensityMatrix):
            ent.wootters_concurrence(np.diag([1.5, -0.5, 0, 0]))
        with self.assertRaises(NotDensityMatrix):
            ent.wootters_concurrence([[0, 1, 0, 0], [0, 0, 0, 0],
                                      [0, 0, 0, 0], [0, 0, 0, 1]])
        with self.assertRaises(NotDensityMatrix):
            ent.wootters_concurrence(np.eye(2) / 2)


if __name__ == '__main__':
    unittest.main()
