# -*- coding: utf-8 -*-
"""The two-qubit spin model obtained by conjugation with the braid operator

Two spin-1/2 particles in the fields ``mu1`` and ``mu2`` with the Ising
coupling ``g`` are described by

.. math::

    H_0 = \\mu_1 S_1^z + \\mu_2 S_2^z + g S_1^z S_2^z

Conjugating it with the braid operator at ``x = i`` gives the Hamiltonian
``H = R(i) H_0 R(i)^-1``. In the standard basis it only mixes ``|01>`` and
``|10>``, with the flip-flop coupling ``-4 J sqrt(d^2 - 4) / d^2 e^{i phi}``.

We use ``|0>`` for ``S^z = +1/2`` and write ``B = (mu1 + mu2) / 2`` and
``J = (mu1 - mu2) / 2``.

**Disclaimer**

Copyright (C) 2026  the tlentangle developers

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program. If not, see <https://www.gnu.org/licenses/>.
"""
from collections import namedtuple
import numpy as np
from tlentangle.common import (
    TOLERANCE, InvalidParameters, NumericalError, safe_sqrt)
from tlentangle.linalg import identity, kron, is_hermitian, hermitian_eig
from tlentangle.temperley_lieb import two_dim_generator, q_from_loop
from tlentangle.yang_baxter import yang_baxterize


#: The spin operator ``S^z`` with ``|0>`` as spin up
SZ = np.diag([0.5, -0.5]).astype(complex)


_ModelParams = namedtuple('_ModelParams', ['mu1', 'mu2', 'g', 'd', 'phi'])


class ModelParams(_ModelParams):
    """The parameters of the spin model

    Attributes
    ----------
    mu1: float
        The field at the first site
    mu2: float
        The field at the second site
    g: float
        The Ising coupling
    d: float
        The loop parameter, at least 2
    phi: float
        The phase of the flip-flop coupling"""

    def __new__(cls, mu1, mu2, g=0., d=2., phi=0.):
        ret = super(ModelParams, cls).__new__(
            cls, float(mu1), float(mu2), float(g), float(d), float(phi))
        if not np.all(np.isfinite(ret)):
            raise InvalidParameters("Model parameters must be finite: %s" % (
                ret, ))
        if ret.d < 2:
            raise InvalidParameters(
                "The loop parameter must be at least 2, not %s!" % ret.d)
        if ret.B < 0:
            raise InvalidParameters(
                "The mean field B = (mu1 + mu2) / 2 = %s must not be "
                "negative!" % ret.B)
        return ret

    @classmethod
    def from_fields(cls, B, J, g=0., d=2., phi=0.):
        """Construct the parameters from the mean field and the inhomogeneity

        Parameters
        ----------
        B: float
            The mean field ``(mu1 + mu2) / 2``
        J: float
            The field inhomogeneity ``(mu1 - mu2) / 2``
        g: float
            The Ising coupling
        d: float
            The loop parameter
        phi: float
            The coupling phase"""
        return cls(B + J, B - J, g, d, phi)

    @property
    def B(self):
        """The mean field ``(mu1 + mu2) / 2``"""
        return (self.mu1 + self.mu2) / 2

    @property
    def J(self):
        """The inhomogeneity ``(mu1 - mu2) / 2``"""
        return (self.mu1 - self.mu2) / 2

    @property
    def q(self):
        """The deformation parameter ``q <= 1`` with ``q + 1/q = d``"""
        return q_from_loop(self.d)

    @property
    def diagonal_factor(self):
        """``1 - 8 / d^2``"""
        return 1 - 8 / self.d ** 2

    @property
    def coupling_factor(self):
        """``4 sqrt(d^2 - 4) / d^2``, the concurrence of the eigenstates"""
        return 4 * safe_sqrt(self.d ** 2 - 4) / self.d ** 2

    def replace(self, **kwargs):
        """A copy with updated parameters

        Besides the fields, the keywords `B` and `J` are accepted"""
        if 'mu1' in kwargs or 'mu2' in kwargs:
            return self.__class__(*self._replace(**kwargs))
        fields = dict(B=self.B, J=self.J, g=self.g, d=self.d, phi=self.phi)
        fields.update(kwargs)
        return self.from_fields(**fields)


class SpinHamiltonian(object):
    """A 4x4 two-qubit Hamiltonian together with its parameters"""

    def __init__(self, params, h, method):
        self.params = params
        self.h = h
        self.method = method

    def spectrum(self):
        """The eigenvalues in ascending order"""
        return hermitian_eig(self.h).values

    def __repr__(self):
        return '%s(%s, method=%r)' % (self.__class__.__name__, self.params,
                                      self.method)


_EigenSystem = namedtuple('_EigenSystem', ['energies', 'states'])


class EigenSystem(_EigenSystem):
    """The analytic eigenpairs of the conjugated Hamiltonian

    ``energies`` holds ``(B + g/4, -B + g/4, J - g/4, -J - g/4)`` and the
    columns of ``states`` the corresponding eigenvectors ``|00>``, ``|11>``,
    ``Psi_3`` and ``Psi_4``"""

    def state(self, i):
        """The ``i``-th eigenvector, counted from 1"""
        return self.states[:, i - 1]


def build_h0(params):
    """The unperturbed Hamiltonian ``mu1 S1z + mu2 S2z + g S1z S2z``

    Parameters
    ----------
    params: ModelParams
        The model parameters

    Returns
    -------
    np.ndarray
        ``diag(B + g/4, J - g/4, -J - g/4, -B + g/4)``"""
    eye = identity(2)
    return (params.mu1 * kron(SZ, eye) + params.mu2 * kron(eye, SZ) +
            params.g * kron(SZ, SZ))


def _analytic_hamiltonian(params):
    B, J, g, phi = params.B, params.J, params.g, params.phi
    c = params.diagonal_factor
    k = params.coupling_factor
    h = np.zeros((4, 4), dtype=complex)
    h[0, 0] = B + g / 4
    h[3, 3] = -B + g / 4
    h[1, 1] = J * c - g / 4
    h[2, 2] = -J * c - g / 4
    h[1, 2] = -J * k * np.exp(1j * phi)
    h[2, 1] = -J * k * np.exp(-1j * phi)
    return h


def _conjugated_hamiltonian(params):
    op = yang_baxterize(two_dim_generator(params.q, params.phi), 1j)
    return op.r @ build_h0(params) @ op.inverse()


def conjugated_hamiltonian(params, method='analytic', tol=TOLERANCE):
    """The Hamiltonian ``R(i) H0 R(i)^-1``

    Parameters
    ----------
    params: ModelParams
        The model parameters
    method: {'analytic', 'numeric'}
        ``'analytic'`` evaluates the closed form matrix, ``'numeric'``
        multiplies the braid operator of the qubit generator (on the branch
        ``q <= 1``) with ``H0`` and its inverse
    tol: float
        The tolerance for the hermiticity check

    Returns
    -------
    SpinHamiltonian
        The Hamiltonian

    Raises
    ------
    tlentangle.common.NumericalError
        If the numerical conjugation does not give a Hermitian matrix"""
    if method == 'analytic':
        h = _analytic_hamiltonian(params)
    elif method == 'numeric':
        h = _conjugated_hamiltonian(params)
        if not is_hermitian(h, tol):
            raise NumericalError("Conjugated Hamiltonian is not Hermitian!")
        h = 0.5 * (h + h.conj().T)
    else:
        raise ValueError("Unknown method %r! Use 'analytic' or 'numeric'." % (
            method, ))
    return SpinHamiltonian(params, h, method)


def eigensystem(params):
    """The analytic eigenpairs of the conjugated Hamiltonian

    The two entangled eigenstates are

    .. math::

        \\Psi_3 = \\frac{2}{d} \\left(-\\frac{\\sqrt{d^2 - 4}}{2} e^{i\\phi}
        |01\\rangle + |10\\rangle\\right), \\quad
        \\Psi_4 = \\frac{2}{d} \\left(|01\\rangle +
        \\frac{\\sqrt{d^2 - 4}}{2} e^{-i\\phi} |10\\rangle\\right)

    Parameters
    ----------
    params: ModelParams
        The model parameters

    Returns
    -------
    EigenSystem
        The energies and eigenstates"""
    B, J, g, d, phi = params.B, params.J, params.g, params.d, params.phi
    r = safe_sqrt(d * d - 4)
    states = np.zeros((4, 4), dtype=complex)
    states[0, 0] = 1
    states[3, 1] = 1
    states[1, 2] = -2 / d * r / 2 * np.exp(1j * phi)
    states[2, 2] = 2 / d
    states[1, 3] = 2 / d
    states[2, 3] = 2 / d * r / 2 * np.exp(-1j * phi)
    energies = np.array([B + g / 4, -B + g / 4, J - g / 4, -J - g / 4])
    return EigenSystem(energies, states)


def critical_field(J, g):
    """The field ``|J| + g/2`` above which the ground state is ``|11>``

    It does not depend on the loop parameter."""
    return abs(J) + g / 2


GroundStates = namedtuple('GroundStates', ['energy', 'indices'])


def ground_states(params, tol=TOLERANCE):
    """The (possibly degenerate) ground states of the conjugated Hamiltonian

    Parameters
    ----------
    params: ModelParams
        The model parameters
    tol: float
        Energies within ``tol * max(1, |E_min|)`` of the minimum are
        considered degenerate

    Returns
    -------
    GroundStates
        The ground state energy and the indices (counted from 1) of the
        eigenstates of :func:`eigensystem` that span the ground state manifold
    """
    energies = eigensystem(params).energies
    emin = energies.min()
    indices = np.where(energies - emin <= tol * max(1., abs(emin)))[0] + 1
    return GroundStates(float(emin), indices.tolist())
