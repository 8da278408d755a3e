# -*- coding: utf-8 -*-
"""Dense complex linear algebra

This module contains the small set of matrix operations the package builds
on: Kronecker products and embeddings of two-site operators, a cyclic
Jacobi eigensolver for Hermitian matrices, functions of Hermitian matrices
and the partial trace.

Every matrix is a two-dimensional :class:`numpy.ndarray` of dtype
``complex128`` in row-major order. The state ``|lambda mu>`` of two sites
of dimension ``n`` has the index ``lambda * n + mu``.

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
from functools import reduce
import numpy as np
from tlentangle.common import (
    docstrings, TOLERANCE, JACOBI_TOLERANCE, JACOBI_MAX_SWEEPS,
    NotHermitian, NoConvergence, DimensionMismatch)


_HermEig = namedtuple('_HermEig', ['values', 'vectors'])


class HermEig(_HermEig):
    """Eigendecomposition of a Hermitian matrix

    ``values`` are the real eigenvalues in ascending order, ``vectors`` the
    unitary matrix whose columns are the corresponding eigenvectors"""

    def reconstruct(self):
        """The matrix ``V diag(values) V^dagger``"""
        return (self.vectors * self.values) @ self.vectors.conj().T

    def apply(self, func):
        """Apply a scalar function to the matrix

        Parameters
        ----------
        func: callable
            A function that takes the array of eigenvalues and returns the
            transformed eigenvalues

        Returns
        -------
        np.ndarray
            ``V diag(func(values)) V^dagger``"""
        return (self.vectors * func(self.values)) @ self.vectors.conj().T


def as_cmatrix(a):
    """Convert `a` into a finite two-dimensional complex array

    Parameters
    ----------
    a: array_like
        The matrix

    Returns
    -------
    np.ndarray
        `a` as array of dtype ``complex128``

    Raises
    ------
    DimensionMismatch
        If `a` is not two-dimensional
    ValueError
        If `a` contains NaN or infinite entries"""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2:
        raise DimensionMismatch(
            "Expected a two-dimensional matrix, got shape %s!" % (a.shape, ))
    if not np.all(np.isfinite(a)):
        raise ValueError("Matrix contains non-finite entries!")
    return a


def identity(n):
    """The ``n x n`` complex identity matrix"""
    return np.eye(n, dtype=complex)


def dagger(a):
    """The conjugate transpose of `a`"""
    return np.conj(a).T


def frobenius(a):
    """The Frobenius norm of `a`"""
    return float(np.linalg.norm(a))


def max_abs(a):
    """The largest absolute entry of `a` (0 for empty arrays)"""
    a = np.asarray(a)
    return float(np.abs(a).max()) if a.size else 0.0


def ket2dm(psi):
    """The projector ``|psi><psi|`` of a state vector"""
    psi = np.asarray(psi, dtype=complex).ravel()
    return np.outer(psi, psi.conj())


def kron(a, b, *others):
    """Kronecker product of two or more matrices

    The entry ``(i, j)`` of `a` and ``(k, l)`` of `b` end up at
    ``(i * rows_b + k, j * cols_b + l)``.

    Parameters
    ----------
    a: np.ndarray
        The left factor
    b: np.ndarray
        The right factor
    ``*others``
        Further factors that are multiplied from the right

    Returns
    -------
    np.ndarray
        The Kronecker product"""
    return reduce(np.kron, (as_cmatrix(m) for m in (a, b) + others))


def embed_two_site(op, site, n, sites):
    """Embed an operator acting on two neighbouring sites into a chain

    Parameters
    ----------
    op: np.ndarray
        The ``n**2 x n**2`` two-site operator
    site: int
        The first site (starting at 0) that `op` acts on
    n: int
        The dimension of one site
    sites: int
        The total number of sites

    Returns
    -------
    np.ndarray
        ``1 x ... x op x ... x 1`` of shape ``(n**sites, n**sites)``"""
    op = as_cmatrix(op)
    if op.shape != (n * n, n * n):
        raise DimensionMismatch(
            "Two-site operator must have shape %s, not %s!" % (
                (n * n, n * n), op.shape))
    if not 0 <= site <= sites - 2:
        raise DimensionMismatch(
            "Cannot place a two-site operator at site %i of %i!" % (
                site, sites))
    left = identity(n ** site)
    right = identity(n ** (sites - site - 2))
    return kron(left, op, right)


def is_hermitian(a, tol=TOLERANCE):
    """Check whether ``||A - A^dagger||_F <= tol * max(1, ||A||_F)``"""
    a = np.asarray(a)
    return (a.ndim == 2 and a.shape[0] == a.shape[1] and
            frobenius(a - dagger(a)) <= tol * max(1., frobenius(a)))


def _off_diagonal_norm(a):
    return np.linalg.norm(a - np.diag(np.diag(a)))


def _jacobi_rotate(a, v, p, q):
    """Annihilate ``a[p, q]`` with a complex Jacobi rotation (in place)"""
    apq = a[p, q]
    mag = abs(apq)
    if mag == 0:
        return
    phase = apq / mag
    app = a[p, p].real
    aqq = a[q, q].real
    tau = (aqq - app) / (2 * mag)
    t = (1. if tau >= 0 else -1.) / (abs(tau) + np.hypot(1., tau))
    c = 1. / np.sqrt(1. + t * t)
    s = t * c
    cphase = np.conj(phase)

    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s * cphase * col_q
    a[:, q] = s * col_p + c * cphase * col_q

    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * phase * row_q
    a[q, :] = s * row_p + c * phase * row_q

    a[p, p] = app - t * mag
    a[q, q] = aqq + t * mag
    a[p, q] = a[q, p] = 0

    vec_p = v[:, p].copy()
    vec_q = v[:, q].copy()
    v[:, p] = c * vec_p - s * cphase * vec_q
    v[:, q] = s * vec_p + c * cphase * vec_q


@docstrings.get_sections(base='hermitian_eig')
def hermitian_eig(a, tol=TOLERANCE, max_sweeps=JACOBI_MAX_SWEEPS):
    """Eigendecomposition of a Hermitian matrix via cyclic Jacobi rotations

    Parameters
    ----------
    a: np.ndarray
        The square Hermitian matrix
    tol: float
        The tolerance for the Hermiticity check
        ``||A - A^dagger||_F <= tol * max(1, ||A||_F)``
    max_sweeps: int
        The maximum number of sweeps over all off-diagonal pairs

    Returns
    -------
    HermEig
        The eigenvalues in ascending order and the eigenvectors

    Raises
    ------
    NotHermitian
        If `a` is not square or not Hermitian within `tol`
    NoConvergence
        If the off-diagonal mass does not drop below
        ``JACOBI_TOLERANCE * ||A||_F`` within `max_sweeps` sweeps"""
    a = as_cmatrix(a)
    n, m = a.shape
    if n != m:
        raise NotHermitian("Matrix of shape %s is not square!" % (a.shape, ))
    if not is_hermitian(a, tol):
        raise NotHermitian(
            "Matrix is not Hermitian: ||A - A^H||_F = %s" % frobenius(
                a - dagger(a)))
    a = 0.5 * (a + dagger(a))
    v = identity(n)
    threshold = JACOBI_TOLERANCE * frobenius(a)
    sweep = 0
    while _off_diagonal_norm(a) > threshold:
        if sweep == max_sweeps:
            raise NoConvergence(
                "Jacobi iteration did not converge within %i sweeps!" % (
                    max_sweeps))
        for p in range(n - 1):
            for q in range(p + 1, n):
                _jacobi_rotate(a, v, p, q)
        sweep += 1
    values = a.diagonal().real.copy()
    order = np.argsort(values, kind='stable')
    return HermEig(values[order], v[:, order])


docstrings.keep_params('hermitian_eig.parameters', 'tol')


@docstrings.dedent
def mat_exp_hermitian(a, scale, tol=TOLERANCE):
    """
    Exponential ``exp(scale * A)`` of a Hermitian matrix

    Parameters
    ----------
    a: np.ndarray
        The square Hermitian matrix
    scale: float or complex
        The factor in the exponent. Real factors give a Hermitian
        positive definite result, imaginary factors a unitary one
    %(hermitian_eig.parameters.tol)s

    Returns
    -------
    np.ndarray
        ``V diag(exp(scale * lambda)) V^dagger``

    Raises
    ------
    NotHermitian, NoConvergence
        See :func:`hermitian_eig`"""
    eig = hermitian_eig(a, tol)
    return eig.apply(lambda values: np.exp(scale * values))


@docstrings.dedent
def psd_sqrt(a, tol=TOLERANCE):
    """Square root of a positive semidefinite Hermitian matrix

    Parameters
    ----------
    a: np.ndarray
        The matrix
    %(hermitian_eig.parameters.tol)s

    Returns
    -------
    np.ndarray
        The positive semidefinite square root of `a`. Negative round-off in
        the eigenvalues is clipped to zero, tiny positive eigenvalues are
        kept"""
    eig = hermitian_eig(a, tol)
    return eig.apply(lambda values: np.sqrt(np.clip(values, 0., None)))


def partial_trace(rho, dims, keep='A'):
    """Reduced density matrix of a bipartite system

    Parameters
    ----------
    rho: np.ndarray
        The square matrix of size ``n_A * n_B``
    dims: tuple of int
        The dimensions ``(n_A, n_B)`` of the two subsystems
    keep: {'A', 'B'}
        The subsystem to keep. ``'A'`` traces out B and vice versa

    Returns
    -------
    np.ndarray
        The reduced matrix of shape ``(n_A, n_A)`` or ``(n_B, n_B)``

    Raises
    ------
    DimensionMismatch
        If the shape of `rho` does not match `dims`"""
    rho = as_cmatrix(rho)
    n_a, n_b = dims
    if rho.shape != (n_a * n_b, n_a * n_b):
        raise DimensionMismatch(
            "Matrix of shape %s does not match the dimensions %s!" % (
                rho.shape, (n_a, n_b)))
    tensor = rho.reshape(n_a, n_b, n_a, n_b)
    if keep == 'A':
        return np.trace(tensor, axis1=1, axis2=3)
    elif keep == 'B':
        return np.trace(tensor, axis1=0, axis2=2)
    raise ValueError("keep must be 'A' or 'B', not %r!" % (keep, ))
