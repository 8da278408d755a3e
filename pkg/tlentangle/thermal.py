# -*- coding: utf-8 -*-
"""Thermal entanglement of the conjugated spin model

The thermal state ``rho(T) = exp(-H/T) / Z`` of the conjugated Hamiltonian is
an X state whose concurrence is

.. math::

    C(T) = \\max\\left(0, \\frac{k e^{g/2T} \\sinh(|J|/T) - 1}
                                {\\cosh(B/T) + e^{g/2T} \\cosh(J/T)}\\right)

with ``k = 4 sqrt(d^2 - 4) / d^2``. It vanishes above the critical
temperature where the numerator changes its sign.

All exponentials are evaluated relative to the largest exponent, so that the
closed forms stay finite for small temperatures.

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
import warnings
from collections import namedtuple
import numpy as np
import pandas as pd
from scipy.optimize import bisect
from tlentangle.common import (
    docstrings, TemperatureNonPositive, LoopOutOfDomain,
    NoSignChange, safe_sqrt)
from tlentangle.linalg import hermitian_eig, mat_exp_hermitian, identity
from tlentangle.entanglement import (
    ConcurrenceValue, wootters_concurrence, x_state_concurrence)
from tlentangle.spin_model import ModelParams, conjugated_hamiltonian


#: relative tolerance to detect the critical field ``|B| = |J| + g/2``
CRITICAL_FIELD_RTOL = 1e-12


ThermalPoint = namedtuple('ThermalPoint', ['T', 'rho', 'Z', 'C', 'log_z'])
ThermalPoint.__doc__ = """The thermal state at one temperature

Attributes
----------
T: float
    The temperature
rho: np.ndarray
    The 4x4 density matrix
Z: float
    The partition function (may overflow to ``inf`` for tiny `T`)
C: tlentangle.entanglement.ConcurrenceValue
    The concurrence of `rho`
log_z: float
    The logarithm of the partition function"""


CriticalTemperature = namedtuple(
    'CriticalTemperature', ['Tc', 'bracket', 'residual', 'sign_change'])
CriticalTemperature.__doc__ = """The root of the critical temperature equation

Attributes
----------
Tc: float
    The critical temperature (0 if the concurrence vanishes at all ``T``)
bracket: tuple of float
    The bracket with a sign change that the bisection started from
residual: float
    ``k exp(g/2Tc) sinh(|J|/Tc) - 1``
sign_change: bool
    False if no bracket with a sign change has been found"""


def _check_temperature(T):
    T = float(T)
    if not T > 0:
        raise TemperatureNonPositive(
            "The temperature must be positive, not %s!" % T)
    return T


def _scaled_weights(params, T):
    """The Boltzmann factors relative to the largest one

    Returns the scale ``S``, the weights ``a = exp(-B/T - S)`` of ``|00>``,
    ``e = exp(B/T - S)`` of ``|11>`` and the scaled ``cosh`` and ``sinh`` of
    the middle block (including the factor ``exp(g/2T)``)."""
    B, J, g = params.B, params.J, params.g
    scale = max(abs(B) / T, g / (2 * T) + abs(J) / T)
    a = np.exp(-B / T - scale)
    e = np.exp(B / T - scale)
    plus = np.exp(g / (2 * T) + J / T - scale)
    minus = np.exp(g / (2 * T) - J / T - scale)
    return scale, a, e, (plus + minus) / 2, (plus - minus) / 2


def _closed_form_state(params, T):
    scale, a, e, ch, sh = _scaled_weights(params, T)
    c = params.diagonal_factor
    k = params.coupling_factor
    den = a + e + 2 * ch
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = a
    rho[3, 3] = e
    rho[1, 1] = ch - c * sh
    rho[2, 2] = ch + c * sh
    rho[1, 2] = k * sh * np.exp(1j * params.phi)
    rho[2, 1] = k * sh * np.exp(-1j * params.phi)
    log_z = scale - params.g / (4 * T) + np.log(den)
    return rho / den, log_z


def _numeric_state(params, T):
    h = conjugated_hamiltonian(params, 'numeric').h
    emin = hermitian_eig(h).values[0]
    weights = mat_exp_hermitian(h - emin * identity(4), -1. / T)
    trace = np.trace(weights).real
    return weights / trace, np.log(trace) - emin / T


@docstrings.get_sections(base='thermal_state',
                         sections=['Parameters', 'Raises'])
def thermal_state(params, T, method='closed-form'):
    """The thermal state ``exp(-H/T) / Z``

    Parameters
    ----------
    params: tlentangle.spin_model.ModelParams
        The model parameters
    T: float
        The positive temperature (``k_B = 1``)
    method: {'closed-form', 'numeric'}
        ``'closed-form'`` evaluates the analytic X state matrix and its
        concurrence. ``'numeric'`` exponentiates the numerically conjugated
        Hamiltonian (shifted by its lowest eigenvalue) and computes the
        concurrence of Wootters

    Returns
    -------
    ThermalPoint
        The state and its concurrence

    Raises
    ------
    TemperatureNonPositive
        If ``T <= 0``"""
    T = _check_temperature(T)
    if method == 'closed-form':
        rho, log_z = _closed_form_state(params, T)
        C = thermal_concurrence(params, T)
    elif method == 'numeric':
        rho, log_z = _numeric_state(params, T)
        C = wootters_concurrence(rho)
    else:
        raise ValueError(
            "Unknown method %r! Use 'closed-form' or 'numeric'." % (method, ))
    with np.errstate(over='ignore'):
        Z = float(np.exp(log_z))
    return ThermalPoint(T, rho, Z, C, float(log_z))


docstrings.keep_params('thermal_state.parameters', 'params', 'T')


@docstrings.dedent
def thermal_concurrence(params, T, method='analytic'):
    """
    The concurrence of the thermal state

    Parameters
    ----------
    %(thermal_state.parameters.params|T)s
    method: {'analytic', 'wootters', 'x-state'}
        ``'analytic'`` uses the closed form expression, the other methods
        evaluate the corresponding concurrence of the numerical thermal state

    Returns
    -------
    tlentangle.entanglement.ConcurrenceValue
        The concurrence

    Raises
    ------
    %(thermal_state.raises)s"""
    T = _check_temperature(T)
    if method == 'wootters':
        return wootters_concurrence(_numeric_state(params, T)[0])
    elif method == 'x-state':
        return x_state_concurrence(_numeric_state(params, T)[0])
    elif method != 'analytic':
        raise ValueError("Unknown method %r!" % (method, ))
    scale, a, e, ch, sh = _scaled_weights(params, T)
    value = 2 * (params.coupling_factor * abs(sh) - np.exp(-scale)) / (
        a + e + 2 * ch)
    return ConcurrenceValue(max(0., float(value)), 'analytic')


def c_max(d):
    """The maximal zero temperature concurrence ``4 sqrt(d^2 - 4) / d^2``

    Parameters
    ----------
    d: float
        The loop parameter, at least 2

    Returns
    -------
    float
        The concurrence of the entangled eigenstates. It vanishes at ``d = 2``
        and takes its maximum 1 at ``d = 2 sqrt(2)``

    Raises
    ------
    LoopOutOfDomain
        If ``d < 2``"""
    d = float(d)
    if not d >= 2:
        raise LoopOutOfDomain("C_max is only defined for d >= 2, not %s!" % d)
    return 4 * safe_sqrt(d * d - 4) / (d * d)


def zero_t_limit(params, rtol=CRITICAL_FIELD_RTOL):
    """The concurrence in the limit ``T -> 0``

    Below the critical field ``B_c = |J| + g/2`` the ground state is one of
    the entangled eigenstates and the concurrence approaches ``C_max``. At
    ``|B| = B_c`` it is degenerate with ``|11>`` and the concurrence is halved.
    Above the critical field, the ground state ``|11>`` is not entangled.

    Parameters
    ----------
    params: tlentangle.spin_model.ModelParams
        The model parameters
    rtol: float
        The relative tolerance to detect ``|B| = B_c``

    Returns
    -------
    tlentangle.entanglement.ConcurrenceValue
        ``C_max``, ``C_max / 2`` or 0"""
    if params.J == 0:
        return ConcurrenceValue(0., 'analytic')
    B = abs(params.B)
    Bc = abs(params.J) + params.g / 2
    cmax = c_max(params.d)
    if abs(B - Bc) <= rtol * max(B, abs(Bc)):
        value = cmax / 2
    elif B < Bc:
        value = cmax
    else:
        value = 0.
    return ConcurrenceValue(value, 'analytic')


def _log_sinh(x):
    return x + np.log(-np.expm1(-2 * x)) - np.log(2)


def critical_temperature(params, tol=1e-12, max_expand=200, strict=False):
    """The temperature above which the thermal concurrence vanishes

    The critical temperature is the root of
    ``k exp(g/2T) sinh(|J|/T) = 1``, solved by bisection on its logarithm.
    The bracket is found by doubling (or halving) the temperature, starting
    from ``T = 1``.

    Parameters
    ----------
    params: tlentangle.spin_model.ModelParams
        The model parameters. Only `d`, `J` and `g` are used
    tol: float
        The relative width of the final bracket
    max_expand: int
        The maximum number of doubling or halving steps
    strict: bool
        If True, raise a :class:`~tlentangle.common.NoSignChange` error if no
        bracket is found. Otherwise warn and report ``Tc = 0``

    Returns
    -------
    CriticalTemperature
        The root, its bracket and the residual. ``Tc = 0`` for ``d = 2``

    Raises
    ------
    tlentangle.common.NoSignChange
        If `strict` and no sign change could be found"""
    k = params.coupling_factor
    absj, g = abs(params.J), params.g
    if k == 0:
        return CriticalTemperature(0., (0., 0.), 0., True)

    def func(T):
        return np.log(k) + g / (2 * T) + _log_sinh(absj / T)

    def no_sign_change(msg):
        if strict:
            raise NoSignChange(msg)
        warnings.warn(msg + ' Reporting Tc = 0.', RuntimeWarning)
        return CriticalTemperature(0., (0., 0.), float('nan'), False)

    if absj == 0:
        return no_sign_change(
            "The concurrence vanishes at all temperatures for J = 0.")
    lo = hi = 1.
    with np.errstate(over='ignore', divide='ignore'):
        if func(1.) > 0:
            for i in range(max_expand):
                hi = 2 * hi
                if func(hi) < 0:
                    lo = hi / 2
                    break
            else:
                return no_sign_change("No upper bracket for Tc found.")
        else:
            for i in range(max_expand):
                lo = lo / 2
                if func(lo) > 0:
                    hi = lo * 2
                    break
            else:
                return no_sign_change("No lower bracket for Tc found.")
        Tc = bisect(func, lo, hi, xtol=tol * max(1., lo), maxiter=500)
    residual = float(np.expm1(func(Tc)))
    return CriticalTemperature(Tc, (lo, hi), residual, True)


def thermal_table(d_values, T_values, B=0., J=1., g=1., phi=np.pi,
                  wootters=True):
    """The thermal concurrence on a grid of loop parameters and temperatures

    Parameters
    ----------
    d_values: list of float
        The loop parameters
    T_values: list of float
        The temperatures
    B: float
        The mean field
    J: float
        The field inhomogeneity
    g: float
        The Ising coupling
    phi: float
        The coupling phase
    wootters: bool
        If True, add the concurrence of Wootters of the numerical thermal
        state as a second column

    Returns
    -------
    pandas.DataFrame
        The columns ``'d'``, ``'T'``, ``'C'`` and (if `wootters`)
        ``'C_wootters'``, in the order of the grid"""
    rows = []
    for d in d_values:
        params = ModelParams.from_fields(B, J, g, d, phi)
        for T in T_values:
            row = {'d': float(d), 'T': float(T),
                   'C': thermal_concurrence(params, T).value}
            if wootters:
                row['C_wootters'] = thermal_concurrence(
                    params, T, 'wootters').value
            rows.append(row)
    columns = ['d', 'T', 'C'] + (['C_wootters'] if wootters else [])
    return pd.DataFrame(rows, columns=columns)


def critical_temperature_curve(d_values, J=1., g=1.):
    """The critical temperature as a function of the loop parameter

    Parameters
    ----------
    d_values: list of float
        The loop parameters (at least 2)
    J: float
        The field inhomogeneity
    g: float
        The Ising coupling

    Returns
    -------
    pandas.DataFrame
        The columns ``'d'``, ``'Tc'`` and ``'residual'``"""
    rows = []
    for d in d_values:
        res = critical_temperature(ModelParams.from_fields(0., J, g, d))
        rows.append((float(d), res.Tc, res.residual))
    return pd.DataFrame(rows, columns=['d', 'Tc', 'residual'])
