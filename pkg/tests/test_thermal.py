# -*- coding: utf-8 -*-
"""
Test module for the :mod:`tlentangle.thermal` module
"""
import unittest
import warnings
import numpy as np
from scipy.linalg import expm
from tlentangle import thermal
from tlentangle.spin_model import ModelParams, conjugated_hamiltonian
from tlentangle.common import (
    TemperatureNonPositive, LoopOutOfDomain, NoSignChange)
from _base_testing import RandomTestCase


SQRT8 = np.sqrt(8.)


class ThermalStateTest(RandomTestCase):
    """Test the density matrix of the thermal state"""

    def test_paths(self):
        """Compare the closed form with the matrix exponential"""
        params = ModelParams.from_fields(2, 1, 1, SQRT8, np.pi)
        closed = thermal.thermal_state(params, 1.)
        numeric = thermal.thermal_state(params, 1., 'numeric')
        self.assertAlmostArrayEqual(closed.rho, numeric.rho, atol=1e-10)
        self.assertAlmostEqual(closed.log_z, numeric.log_z, places=10)
        self.assertAlmostEqual(closed.C.value, numeric.C.value, places=10)

    def test_scipy_oracle(self):
        params = ModelParams.from_fields(0.5, -1, 0.3, 3.7, 1.)
        T = 0.7
        h = conjugated_hamiltonian(params).h
        weights = expm(-h / T)
        point = thermal.thermal_state(params, T)
        self.assertAlmostArrayEqual(point.rho, weights / np.trace(weights),
                                    atol=1e-10)
        self.assertAlmostEqual(point.Z, np.trace(weights).real, places=10)

    def test_high_temperature(self):
        params = ModelParams.from_fields(1, 1, 1, 3.)
        point = thermal.thermal_state(params, 1e6)
        self.assertAlmostArrayEqual(point.rho, np.eye(4) / 4, atol=1e-5)

    def test_low_temperature(self):
        """Test that tiny temperatures do not overflow"""
        params = ModelParams.from_fields(0, 1, 1, SQRT8, np.pi)
        with warnings.catch_warnings():
            warnings.simplefilter('error', RuntimeWarning)
            point = thermal.thermal_state(params, 1e-4)
        numeric = thermal.thermal_state(params, 1e-4, 'numeric')
        self.assertTrue(np.all(np.isfinite(point.rho)))
        self.assertAlmostEqual(np.trace(point.rho).real, 1.)
        self.assertAlmostEqual(point.C.value, 1., places=10)
        self.assertAlmostEqual(numeric.C.value, 1., places=8)
        self.assertAlmostEqual(point.log_z, 1.25e4, places=6)

    def test_invalid_temperature(self):
        params = ModelParams.from_fields(1, 1, 1, 3.)
        with self.assertRaises(TemperatureNonPositive):
            thermal.thermal_state(params, 0.)
        with self.assertRaises(TemperatureNonPositive):
            thermal.thermal_concurrence(params, -1.)
        with self.assertRaises(ValueError):
            thermal.thermal_state(params, 1., 'exact')


class ThermalConcurrenceTest(RandomTestCase):
    """Test the analytic thermal concurrence"""

    def test_trivial_loop(self):
        for T in [0.1, 1., 10.]:
            for B in [0., 2.]:
                params = ModelParams.from_fields(B, 1, 1, 2.)
                self.assertEqual(thermal.thermal_concurrence(params, T).value,
                                 0.)

    def test_wootters(self):
        params = ModelParams.from_fields(0, 1, 1, SQRT8, np.pi)
        self.assertAlmostEqual(
            thermal.thermal_concurrence(params, 0.5).value,
            thermal.thermal_concurrence(params, 0.5, 'wootters').value,
            places=10)

    def test_oracle_grid(self):
        """Compare with Wootters and the X state formula on a grid"""
        for d in [2., 2.5, SQRT8, 4., 8.]:
            for B in [0., 1., 3.]:
                for J in [0.5, 1.]:
                    for g in [0., 1.]:
                        params = ModelParams.from_fields(B, J, g, d, np.pi)
                        for T in [0.1, 0.5, 1., 2.]:
                            c = thermal.thermal_concurrence(params, T).value
                            cw = thermal.thermal_concurrence(
                                params, T, 'wootters').value
                            cx = thermal.thermal_concurrence(
                                params, T, 'x-state').value
                            msg = '%s, T=%s' % (params, T)
                            self.assertLessEqual(abs(c - cw), 1e-10, msg=msg)
                            self.assertLessEqual(abs(c - cx), 1e-10, msg=msg)

    def test_oracle_low_temperature(self):
        """Compare with Wootters when the |00> weight is tiny"""
        for d in [2.5, 3., SQRT8, 4., 8.]:
            for B in [1., 1.5]:
                params = ModelParams.from_fields(B, 0.5, 0.3, d, np.pi)
                for T in [0.05, 0.02]:
                    c = thermal.thermal_concurrence(params, T).value
                    cw = thermal.thermal_concurrence(
                        params, T, 'wootters').value
                    self.assertLessEqual(abs(c - cw), 1e-10,
                                         msg='%s, T=%s' % (params, T))
        params = ModelParams.from_fields(1, 0.5, 0.3, 3., np.pi)
        self.assertAlmostEqual(
            thermal.thermal_concurrence(params, 0.05, 'wootters').value,
            0.00090540584, delta=1e-11)

    def test_critical_temperature(self):
        params = ModelParams.from_fields(0, 1, 1, SQRT8, np.pi)
        Tc = thermal.critical_temperature(params).Tc
        self.assertGreater(
            thermal.thermal_concurrence(params, Tc - 0.01).value, 0)
        self.assertEqual(
            thermal.thermal_concurrence(params, Tc + 0.01).value, 0)

    def test_zero_temperature_limit(self):
        for d in [2.5, SQRT8, 5.]:
            for B in [0., 0.5, 2., 3.]:
                params = ModelParams.from_fields(B, 1, 1, d)
                self.assertAlmostEqual(
                    thermal.thermal_concurrence(params, 1e-3).value,
                    thermal.zero_t_limit(params).value, delta=1e-2,
                    msg=str(params))

    def test_table(self):
        df = thermal.thermal_table([2., 3.], [0.5, 1., 2.])
        self.assertEqual(list(df.columns), ['d', 'T', 'C', 'C_wootters'])
        self.assertEqual(len(df), 6)
        self.assertAlmostArrayEqual(df.C, df.C_wootters, atol=1e-10)
        self.assertTrue((df.C[df.d == 2.] == 0).all())
        df = thermal.thermal_table([3.], [1.], wootters=False)
        self.assertEqual(list(df.columns), ['d', 'T', 'C'])


class MaximalConcurrenceTest(unittest.TestCase):
    """Test the zero temperature concurrence"""

    def test_c_max(self):
        self.assertAlmostEqual(thermal.c_max(SQRT8), 1., places=12)
        self.assertEqual(thermal.c_max(2.), 0.)
        self.assertAlmostEqual(thermal.c_max(3.), 4 * np.sqrt(5) / 9)
        with self.assertRaises(LoopOutOfDomain):
            thermal.c_max(1.5)

    def test_maximum(self):
        grid = np.linspace(2, 12, 1001)
        values = [thermal.c_max(d) for d in grid]
        self.assertAlmostEqual(grid[np.argmax(values)], SQRT8, places=2)
        self.assertLessEqual(max(values), 1.)

    def test_zero_t_limit(self):
        below = ModelParams.from_fields(0.5, 1, 1, SQRT8)
        above = ModelParams.from_fields(2, 1, 1, SQRT8)
        self.assertAlmostEqual(thermal.zero_t_limit(below).value, 1.)
        self.assertEqual(thermal.zero_t_limit(above).value, 0.)
        critical = ModelParams.from_fields(1.5, 1, 1, 3.)
        self.assertAlmostEqual(thermal.zero_t_limit(critical).value,
                               2 * np.sqrt(5) / 9)

    def test_no_inhomogeneity(self):
        params = ModelParams.from_fields(0, 0, 1, 3.)
        self.assertEqual(thermal.zero_t_limit(params).value, 0.)

    def test_critical_field_independent_of_loop(self):
        """The threshold of the zero temperature limit does not depend on d
        """
        for d in [2.5, 6.]:
            limits = [thermal.zero_t_limit(
                ModelParams.from_fields(B, 1, 1, d)).value
                for B in [1.49, 1.51]]
            self.assertGreater(limits[0], 0)
            self.assertEqual(limits[1], 0)


class CriticalTemperatureTest(unittest.TestCase):
    """Test the root finding for the critical temperature"""

    def test_maximal_coupling(self):
        res = thermal.critical_temperature(
            ModelParams.from_fields(0, 1, 1, SQRT8))
        self.assertTrue(res.sign_change)
        self.assertAlmostEqual(res.Tc, 1.5, delta=0.1)
        self.assertLessEqual(abs(res.residual), 1e-10)
        lo, hi = res.bracket
        self.assertTrue(lo <= res.Tc <= hi)

    def test_independent_of_field(self):
        Tc = [thermal.critical_temperature(
            ModelParams.from_fields(B, 1, 1, 3.)).Tc for B in [0, 1, 5]]
        self.assertAlmostEqual(Tc[0], Tc[1], places=10)
        self.assertAlmostEqual(Tc[0], Tc[2], places=10)

    def test_trivial_loop(self):
        res = thermal.critical_temperature(ModelParams.from_fields(0, 1, 1))
        self.assertEqual(res.Tc, 0.)

    def test_vanishing_near_trivial_loop(self):
        """Tc decreases monotonically towards d = 2"""
        Tc = [thermal.critical_temperature(
            ModelParams.from_fields(0, 1, 1, 2 + eps)).Tc
            for eps in [1e-1, 1e-3, 1e-6, 1e-12]]
        self.assertTrue(np.all(np.diff(Tc) < 0), msg=str(Tc))
        self.assertLess(Tc[-1], 0.15)
        self.assertGreater(Tc[-1], 0)

    def test_no_sign_change(self):
        params = ModelParams.from_fields(0, 0, 1, 3.)
        with self.assertRaises(NoSignChange):
            thermal.critical_temperature(params, strict=True)
        with warnings.catch_warnings(record=True) as w:
            warnings.simplefilter('always')
            res = thermal.critical_temperature(params)
        self.assertTrue(any(issubclass(warn.category, RuntimeWarning)
                            for warn in w))
        self.assertEqual(res.Tc, 0.)
        self.assertFalse(res.sign_change)

    def test_curve(self):
        df = thermal.critical_temperature_curve([2., SQRT8, 5.])
        self.assertEqual(list(df.columns), ['d', 'Tc', 'residual'])
        self.assertEqual(df.Tc[0], 0.)
        self.assertEqual(df.Tc.idxmax(), 1)


if __name__ == '__main__':
    unittest.main()
