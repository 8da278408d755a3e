# -*- coding: utf-8 -*-
"""Entanglement measures

Pure two-qudit states are quantified by the generalized concurrence

.. math::

    C = \\sqrt{\\frac{n}{n - 1} (1 - \\mathrm{Tr} \\rho_A^2)}

and two-qubit density matrices by the concurrence of Wootters.

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
    docstrings, TOLERANCE, NORM_TOLERANCE, NotNormalized, NotDensityMatrix,
    DimensionMismatch, safe_sqrt)
from tlentangle.linalg import (
    as_cmatrix, hermitian_eig, is_hermitian, ket2dm, partial_trace, psd_sqrt,
    kron)


#: ``sigma_y x sigma_y`` in the standard basis
SIGMA_YY = kron(np.array([[0, -1j], [1j, 0]]), np.array([[0, -1j], [1j, 0]]))


_SchmidtSpectrum = namedtuple('_SchmidtSpectrum', ['coefficients', 'purity'])


class SchmidtSpectrum(_SchmidtSpectrum):
    """The Schmidt coefficients of a pure bipartite state

    ``coefficients`` are the nonnegative Schmidt coefficients in descending
    order, ``purity`` is ``Tr rho_A^2 = sum kappa^4``"""

    @property
    def rank(self):
        """The number of Schmidt coefficients above ``1e-10``"""
        return int(np.sum(self.coefficients > 1e-10))


_ConcurrenceValue = namedtuple('_ConcurrenceValue', ['value', 'method'])


class ConcurrenceValue(_ConcurrenceValue):
    """A concurrence together with the method it has been computed with

    ``method`` is one of ``'generalized'``, ``'wootters'``, ``'x-state'``
    or ``'analytic'``"""

    def __float__(self):
        return float(self.value)


def _check_state(state, n):
    state = np.asarray(state, dtype=complex).ravel()
    if len(state) != n * n:
        raise DimensionMismatch(
            "State of length %i does not describe two sites of dimension %i!"
            % (len(state), n))
    norm = np.vdot(state, state).real
    if abs(norm - 1) > NORM_TOLERANCE:
        raise NotNormalized("State is not normalized: <Psi|Psi> = %s" % norm)
    return state


@docstrings.get_sections(base='schmidt', sections=['Parameters', 'Raises'])
def schmidt(state, n):
    """The Schmidt spectrum of a pure two-qudit state

    Parameters
    ----------
    state: np.ndarray
        The normalized state of length ``n**2`` with the amplitude of
        ``|lambda mu>`` at ``lambda * n + mu``
    n: int
        The dimension of one site

    Returns
    -------
    SchmidtSpectrum
        The square roots of the eigenvalues of ``rho_A = Tr_B |Psi><Psi|``

    Raises
    ------
    NotNormalized
        If `state` is not normalized"""
    state = _check_state(state, n)
    rho_a = partial_trace(ket2dm(state), (n, n), 'A')
    probs = hermitian_eig(rho_a).values[::-1]
    kappa = safe_sqrt(probs)
    return SchmidtSpectrum(kappa, float(np.sum(kappa ** 4)))


@docstrings.dedent
def linear_entropy(state, n):
    """
    The linear entropy ``1 - Tr rho_A^2`` of a pure two-qudit state

    Parameters
    ----------
    %(schmidt.parameters)s

    Returns
    -------
    float
        The linear entropy in ``[0, 1 - 1/n]``"""
    return 1. - schmidt(state, n).purity


@docstrings.dedent
def generalized_concurrence(state, n):
    """
    The generalized concurrence of a pure two-qudit state

    Parameters
    ----------
    %(schmidt.parameters)s

    Returns
    -------
    ConcurrenceValue
        ``sqrt(n / (n - 1) * (1 - sum kappa^4))``. It is 1 for maximally
        entangled states and 0 for product states

    Raises
    ------
    %(schmidt.raises)s"""
    value = safe_sqrt(n / (n - 1.) * linear_entropy(state, n))
    return ConcurrenceValue(value, 'generalized')


def check_density_matrix(rho, tol=TOLERANCE):
    """Validate a density matrix

    Parameters
    ----------
    rho: np.ndarray
        The square matrix
    tol: float
        The tolerance for hermiticity, positivity and the trace

    Returns
    -------
    np.ndarray
        `rho` as complex matrix

    Raises
    ------
    NotDensityMatrix
        If `rho` is not Hermitian, has a negative eigenvalue below ``-tol`` or
        a trace different from 1"""
    rho = as_cmatrix(rho)
    if rho.shape[0] != rho.shape[1] or not is_hermitian(rho, tol):
        raise NotDensityMatrix("Density matrix must be square and Hermitian!")
    trace = np.trace(rho)
    if abs(trace - 1) > tol:
        raise NotDensityMatrix("Density matrix has trace %s!" % trace)
    lowest = hermitian_eig(rho, tol).values[0]
    if lowest < -tol:
        raise NotDensityMatrix(
            "Density matrix has the negative eigenvalue %s!" % lowest)
    return rho


def wootters_concurrence(rho, tol=TOLERANCE):
    """The concurrence of a two-qubit density matrix

    The decreasing square roots ``sqrt(lambda_i)`` of the eigenvalues of
    ``rho (sigma_y x sigma_y) rho^* (sigma_y x sigma_y)`` are computed as the
    singular values of ``sqrt(rho) sqrt(rho~)`` with the spin flipped matrix
    ``rho~``. Both have the same spectrum, but the latter only needs
    Hermitian eigenproblems.

    Parameters
    ----------
    rho: np.ndarray
        The 4x4 density matrix in the standard basis
        ``{|00>, |01>, |10>, |11>}``
    tol: float
        The tolerance for the validation of `rho`

    Returns
    -------
    ConcurrenceValue
        ``max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4))``

    Raises
    ------
    NotDensityMatrix
        If `rho` is no valid 4x4 density matrix"""
    rho = check_density_matrix(rho, tol)
    if rho.shape != (4, 4):
        raise NotDensityMatrix("Expected a 4x4 density matrix, not %s!" % (
            rho.shape, ))
    root = psd_sqrt(rho, tol=tol)
    root_flipped = SIGMA_YY @ root.conj() @ SIGMA_YY
    sv = np.linalg.svd(root @ root_flipped, compute_uv=False)
    return ConcurrenceValue(max(0., sv[0] - sv[1:].sum()), 'wootters')


def x_state_concurrence(rho, tol=TOLERANCE):
    """The concurrence of a two-qubit X state

    X states only have nonzero entries on the diagonal and the anti-diagonal.
    The thermal and evolved states of the spin model are of this form.

    Parameters
    ----------
    rho: np.ndarray
        The 4x4 density matrix
    tol: float
        Entries outside the X pattern larger than `tol` raise an error

    Returns
    -------
    ConcurrenceValue
        ``2 max(0, |r14| - sqrt(r22 r33), |r23| - sqrt(r11 r44))``"""
    rho = as_cmatrix(rho)
    if rho.shape != (4, 4):
        raise NotDensityMatrix("Expected a 4x4 density matrix, not %s!" % (
            rho.shape, ))
    mask = np.eye(4, dtype=bool) | np.eye(4, dtype=bool)[::-1]
    if np.abs(rho[~mask]).max() > tol:
        raise ValueError("Density matrix is not an X state!")
    p = rho.diagonal().real
    value = 2 * max(0.,
                    abs(rho[0, 3]) - safe_sqrt(p[1] * p[2]),
                    abs(rho[1, 2]) - safe_sqrt(p[0] * p[3]))
    return ConcurrenceValue(value, 'x-state')
