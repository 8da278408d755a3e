# -*- coding: utf-8 -*-
"""
Test module for the :mod:`tlentangle.spin_model` module
"""
import unittest
import numpy as np
from tlentangle import spin_model as sm
from tlentangle.entanglement import generalized_concurrence
from tlentangle.common import InvalidParameters
from _base_testing import RandomTestCase


class ModelParamsTest(RandomTestCase):
    """Test the parameter container"""

    def test_fields(self):
        params = sm.ModelParams(3, 1, 2)
        self.assertEqual(params.B, 2)
        self.assertEqual(params.J, 1)
        self.assertEqual(sm.ModelParams.from_fields(2, 1, 2), params)

    def test_replace(self):
        params = sm.ModelParams.from_fields(1, 0.5, 1, 3, np.pi)
        new = params.replace(B=2.)
        self.assertEqual(new.B, 2.)
        self.assertEqual(new.J, 0.5)
        self.assertEqual(new.d, 3)
        self.assertEqual(params.replace(mu2=0.).mu1, params.mu1)

    def test_q(self):
        params = sm.ModelParams.from_fields(0, 1, 0, 2.5)
        self.assertAlmostEqual(params.q, 0.5)
        self.assertAlmostEqual(params.diagonal_factor, 1 - 8 / 6.25)
        self.assertAlmostEqual(params.coupling_factor,
                               4 * np.sqrt(2.25) / 6.25)

    def test_invalid(self):
        with self.assertRaises(InvalidParameters):
            sm.ModelParams(1, 1, 0, 1.5)
        with self.assertRaises(InvalidParameters):
            sm.ModelParams(np.nan, 1)
        with self.assertRaises(InvalidParameters):
            sm.ModelParams.from_fields(-1, 0)
        with self.assertRaises(ValueError):
            sm.ModelParams(np.inf, 1)


class HamiltonianTest(RandomTestCase):
    """Test the unperturbed and the conjugated Hamiltonian"""

    def random_params(self):
        rng = self.rng
        return sm.ModelParams.from_fields(
            rng.uniform(0, 3), rng.uniform(-2, 2), rng.uniform(-1, 2),
            rng.uniform(2, 20), rng.uniform(0, 2 * np.pi))

    def test_h0(self):
        self.assertAlmostArrayEqual(sm.build_h0(sm.ModelParams(0, 0)),
                                    np.zeros((4, 4)))
        self.assertAlmostArrayEqual(sm.build_h0(sm.ModelParams(1, 1)),
                                    np.diag([1, 0, 0, -1]))
        self.assertAlmostArrayEqual(sm.build_h0(sm.ModelParams(3, 1, 2)),
                                    np.diag([2.5, 0.5, -1.5, -1.5]))

    def test_conjugation(self):
        """Compare the analytic matrix with the numerical conjugation"""
        for i in range(self.nrandom):
            params = self.random_params()
            analytic = sm.conjugated_hamiltonian(params)
            numeric = sm.conjugated_hamiltonian(params, 'numeric')
            self.assertLessEqual(np.abs(analytic.h - numeric.h).max(), 1e-10,
                                 msg=str(params))

    def test_trivial_loop(self):
        """At d = 2 the inhomogeneity flips and there is no flip-flop"""
        params = sm.ModelParams.from_fields(1, 0.7, 0.4, 2.)
        h = sm.conjugated_hamiltonian(params).h
        self.assertAlmostArrayEqual(
            h, np.diag([1.1, -0.8, 0.6, -0.9]), atol=1e-14)
        self.assertAlmostArrayEqual(
            sm.conjugated_hamiltonian(params, 'numeric').h, h, atol=1e-12)

    def test_maximal_coupling(self):
        """At d = 2 sqrt(2) the diagonal inhomogeneity vanishes"""
        phi = 0.9
        params = sm.ModelParams.from_fields(0, 1.5, 0, np.sqrt(8), phi)
        h = sm.conjugated_hamiltonian(params).h
        self.assertAlmostArrayEqual(
            h[1:3, 1:3], [[0, -1.5 * np.exp(1j * phi)],
                          [-1.5 * np.exp(-1j * phi), 0]], atol=1e-14)

    def test_spectrum(self):
        """The conjugation does not change the spectrum"""
        for i in range(self.nrandom // 10):
            params = self.random_params()
            ham = sm.conjugated_hamiltonian(params, 'numeric')
            self.assertAlmostArrayEqual(
                ham.spectrum(), np.sort(np.diag(sm.build_h0(params)).real),
                atol=1e-10)

    def test_unknown_method(self):
        with self.assertRaises(ValueError):
            sm.conjugated_hamiltonian(sm.ModelParams(1, 1), 'exact')


class EigenSystemTest(RandomTestCase):
    """Test the analytic eigenpairs"""

    def test_eigenpairs(self):
        for i in range(self.nrandom // 10):
            params = sm.ModelParams.from_fields(
                *self.rng.uniform([0, -2, -1, 2, 0], [3, 2, 2, 10, 6]))
            h = sm.conjugated_hamiltonian(params).h
            system = sm.eigensystem(params)
            self.assertLessEqual(
                np.abs(h @ system.states - system.states * system.energies
                       ).max(), 1e-10)
            self.assertAlmostArrayEqual(
                system.states.conj().T @ system.states, np.eye(4),
                atol=1e-12)

    def test_orthogonality(self):
        system = sm.eigensystem(sm.ModelParams.from_fields(1, 1, 1, 3.3, 2.))
        self.assertAlmostEqual(abs(np.vdot(system.state(3),
                                           system.state(4))), 0.)

    def test_maximally_entangled(self):
        params = sm.ModelParams.from_fields(0, 1, 1, np.sqrt(8), np.pi)
        system = sm.eigensystem(params)
        self.assertAlmostArrayEqual(system.state(3),
                                    np.array([0, 1, 1, 0]) / np.sqrt(2))
        self.assertAlmostArrayEqual(system.state(4),
                                    np.array([0, 1, -1, 0]) / np.sqrt(2))
        for i in [3, 4]:
            self.assertAlmostEqual(
                generalized_concurrence(system.state(i), 2).value, 1.)

    def test_unentangled(self):
        system = sm.eigensystem(sm.ModelParams.from_fields(0, 1, 1, 2.))
        self.assertAlmostArrayEqual(system.state(3), [0, 0, 1, 0])
        self.assertAlmostArrayEqual(system.state(4), [0, 1, 0, 0])

    def test_concurrence(self):
        """The entangled eigenstates have the concurrence 4 sqrt(d^2-4)/d^2
        """
        for d in [2.1, 3., 6.]:
            params = sm.ModelParams.from_fields(0, 1, 0, d)
            system = sm.eigensystem(params)
            for i in [3, 4]:
                self.assertAlmostEqual(
                    generalized_concurrence(system.state(i), 2).value,
                    params.coupling_factor)


class GroundStateTest(unittest.TestCase):
    """Test the ground state manifold"""

    def test_critical_field(self):
        self.assertEqual(sm.critical_field(-1, 1), 1.5)

    def test_below(self):
        gs = sm.ground_states(sm.ModelParams.from_fields(1, 1, 1, 3))
        self.assertEqual(gs.indices, [4])
        self.assertAlmostEqual(gs.energy, -1.25)

    def test_above(self):
        gs = sm.ground_states(sm.ModelParams.from_fields(2, 1, 1, 3))
        self.assertEqual(gs.indices, [2])

    def test_degenerate(self):
        gs = sm.ground_states(sm.ModelParams.from_fields(1.5, 1, 1, 3))
        self.assertEqual(gs.indices, [2, 4])

    def test_negative_inhomogeneity(self):
        gs = sm.ground_states(sm.ModelParams.from_fields(0, -1, 1, 3))
        self.assertEqual(gs.indices, [3])


if __name__ == '__main__':
    unittest.main()
