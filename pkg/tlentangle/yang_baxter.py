# -*- coding: utf-8 -*-
"""Trigonometric Yang-Baxterization of the qubit generator

The braid operator with multiplicative spectral parameter ``x`` is

.. math::

    \\breve{R}(x) = N(x) [(q x - (q x)^{-1}) I - (x - x^{-1}) U], \\quad
    N(x) = (q^2 + q^{-2} - x^2 - x^{-2})^{-1/2}

where the square root is the principal branch. It satisfies

.. math::

    \\breve{R}_1(x) \\breve{R}_2(x y) \\breve{R}_1(y) =
    \\breve{R}_2(y) \\breve{R}_1(x y) \\breve{R}_2(x)

and is unitary for ``x`` on the unit circle.

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
import numpy as np
from tlentangle.common import (
    docstrings, TOLERANCE, SINGULAR_GUARD, ResidualReport,
    SingularNormalization, DimensionMismatch)
from tlentangle.linalg import identity, kron, dagger, frobenius


class BraidOperator(object):
    """The Yang-Baxterized operator ``R(x)`` of a qubit generator

    Attributes
    ----------
    q: float
        The deformation parameter
    d: float
        The loop parameter of the generator
    x: complex
        The spectral parameter
    u: np.ndarray
        The 4x4 generator
    normalization: complex
        The scalar ``N(x)``
    r: np.ndarray
        The 4x4 matrix ``R(x)``"""

    def __init__(self, u, d, q, x):
        x = complex(x)
        if x == 0:
            raise ValueError("The spectral parameter must not vanish!")
        radicand = q * q + 1 / (q * q) - x * x - 1 / (x * x)
        if abs(radicand) < SINGULAR_GUARD:
            raise SingularNormalization(
                "Normalization of R(x) vanishes for q = %s, x = %s!" % (q, x))
        self.u = u
        self.d = d
        self.q = q
        self.x = x
        self.normalization = 1 / np.sqrt(complex(radicand))
        eye = identity(4)
        self.r = self.normalization * (
            (q * x - 1 / (q * x)) * eye - (x - 1 / x) * u)

    def inverse(self):
        """The closed form inverse

        ``N(x) [(q/x - x/q) I + (x - 1/x) U]``"""
        q, x = self.q, self.x
        return self.normalization * (
            (q / x - x / q) * identity(4) + (x - 1 / x) * self.u)

    def at(self, x):
        """The operator of the same generator at another spectral parameter
        """
        return self.__class__(self.u, self.d, self.q, x)

    def unitarity_residuals(self):
        """Frobenius residuals of the inversion identities at :attr:`x`

        Returns
        -------
        dict
            ``'R R^-1 - I'``, ``'R^dagger - R^-1'``, ``'R^-1 - R(1/x)'`` and
            ``'R^-1 - R(-x)'``"""
        inv = self.inverse()
        return {
            'R R^-1 - I': frobenius(self.r @ inv - identity(4)),
            'R^dagger - R^-1': frobenius(dagger(self.r) - inv),
            'R^-1 - R(1/x)': frobenius(inv - self.at(1 / self.x).r),
            'R^-1 - R(-x)': frobenius(inv - self.at(-self.x).r),
            }

    def __repr__(self):
        return '%s(q=%s, x=%s)' % (self.__class__.__name__, self.q, self.x)


@docstrings.get_sections(base='yang_baxterize',
                         sections=['Parameters', 'Raises'])
def yang_baxterize(gen, x, q=None):
    """Promote a qubit generator to the braid operator ``R(x)``

    Parameters
    ----------
    gen: tlentangle.temperley_lieb.TLGenerator
        The 4x4 generator of the qubit family
    x: complex
        The nonzero spectral parameter
    q: float
        The deformation parameter. If None, it is read off the ``<01|u|01>``
        entry of the generator, which equals `q` for the qubit family

    Returns
    -------
    BraidOperator
        The operator ``R(x)``

    Raises
    ------
    SingularNormalization
        If ``|q^2 + q^-2 - x^2 - x^-2| < SINGULAR_GUARD``"""
    if gen.n != 2:
        raise DimensionMismatch(
            "Only generators on two qubits can be Yang-Baxterized, not n=%i!"
            % gen.n)
    if q is None:
        q = float(gen.u[1, 1].real)
    return BraidOperator(gen.u, gen.d, q, x)


docstrings.keep_params('yang_baxterize.parameters', 'gen', 'q')


@docstrings.dedent
def verify_ybe(gen, x, y, q=None):
    """
    The residual of the Yang-Baxter equation on three qubits

    Parameters
    ----------
    %(yang_baxterize.parameters.gen|q)s
    x: complex
        The first spectral parameter
    y: complex
        The second spectral parameter

    Returns
    -------
    float
        ``||R1(x) R2(xy) R1(y) - R2(y) R1(xy) R2(x)||_F`` with
        ``R1 = R x 1`` and ``R2 = 1 x R``

    Raises
    ------
    %(yang_baxterize.raises)s"""
    rx, rxy, ry = (yang_baxterize(gen, val, q).r for val in [x, x * y, y])
    eye = identity(2)

    def first(r):
        return kron(r, eye)

    def second(r):
        return kron(eye, r)

    lhs = first(rx) @ second(rxy) @ first(ry)
    rhs = second(ry) @ first(rxy) @ second(rx)
    return frobenius(lhs - rhs)


@docstrings.dedent
def verify_unitarity(gen, thetas, q=None, tol=TOLERANCE):
    """
    Check the inversion identities on the unit circle

    For ``x = exp(i theta)`` the operator satisfies
    ``R(x)^dagger = R(x)^-1 = R(1/x)``. The identity ``R(x)^-1 = R(-x)``
    only holds at ``x = i`` (and everywhere for ``q = 1``). It is checked at
    ``theta = pi/2`` and its maximum over `thetas` is kept in the
    :attr:`~tlentangle.common.ResidualReport.notes` of the report.

    Parameters
    ----------
    %(yang_baxterize.parameters.gen|q)s
    thetas: list of float
        The angles of the spectral parameters
    tol: float
        The tolerance of the report

    Returns
    -------
    tlentangle.common.ResidualReport
        The maximum Frobenius residuals over `thetas`

    Raises
    ------
    %(yang_baxterize.raises)s"""
    report = ResidualReport('unitarity', tol)
    keys = ['R R^-1 - I', 'R^dagger - R^-1', 'R^-1 - R(1/x)']
    results = [yang_baxterize(gen, np.exp(1j * theta), q).unitarity_residuals()
               for theta in np.ravel(thetas)]
    for key in keys:
        report.add(key, max((res[key] for res in results), default=0.))
    report.add('R^-1 - R(-x) at x = i',
               yang_baxterize(gen, 1j, q).unitarity_residuals()[
                   'R^-1 - R(-x)'])
    report.note('R^-1 - R(-x)',
                max((res['R^-1 - R(-x)'] for res in results), default=0.))
    return report
