# -*- coding: utf-8 -*-
"""Time evolution and entanglement sudden death

The Werner-like initial state

.. math::

    \\rho_0 = \\frac{1 - \\gamma}{4} I + \\gamma |\\psi\\rangle\\langle\\psi|,
    \\quad |\\psi\\rangle = \\sin\\alpha |01\\rangle + \\cos\\alpha |10\\rangle

evolves with the conjugated Hamiltonian. For ``gamma = 1/2``,
``alpha = pi/4``, ``J = 1/2`` and ``phi = pi`` its concurrence is

.. math::

    C(t) = \\max\\left(0, \\frac{\\sqrt{(16(d^2 - 4) + (d^2 - 8)^2 \\cos t)^2
                  + d^4 (d^2 - 8)^2 \\sin^2 t}}{2 d^4} - \\frac{1}{4}\\right)

which vanishes on finite time windows (entanglement sudden death) when
``1/4 < 16 (d^2 - 4) / d^4 < 3/4``.

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
import pandas as pd
from scipy.optimize import bisect
from tlentangle.common import (
    docstrings, TOLERANCE, LoopOutOfDomain, InvalidParameters)
from tlentangle.linalg import mat_exp_hermitian, dagger
from tlentangle.entanglement import (
    ConcurrenceValue, wootters_concurrence, check_density_matrix)
from tlentangle.spin_model import conjugated_hamiltonian


#: Windows whose pre-clamp concurrence never drops below ``-ESD_DEPTH`` on
#: the scanning grid are considered as touching zero only
ESD_DEPTH = 1e-12


_InitialState = namedtuple('_InitialState', ['gamma', 'alpha'])


class InitialState(_InitialState):
    """The Werner-like initial state of the dynamics

    Attributes
    ----------
    gamma: float
        The weight of the pure part in ``(0, 1]``
    alpha: float
        The angle of the pure state ``sin(alpha)|01> + cos(alpha)|10>``"""

    def __new__(cls, gamma=0.5, alpha=np.pi / 4):
        gamma = float(gamma)
        if not 0 < gamma <= 1:
            raise InvalidParameters(
                "gamma must be in the interval (0, 1], not %s!" % gamma)
        return super(InitialState, cls).__new__(cls, gamma, float(alpha))

    @property
    def psi(self):
        """The pure part of the state"""
        return np.array([0, np.sin(self.alpha), np.cos(self.alpha), 0],
                        dtype=complex)

    @property
    def rho0(self):
        """The 4x4 density matrix"""
        psi = self.psi
        return ((1 - self.gamma) / 4 * np.eye(4) +
                self.gamma * np.outer(psi, psi.conj()))


EsdWindow = namedtuple('EsdWindow', ['t_death', 't_revival', 'closed'])
EsdWindow.__doc__ = """A time window without entanglement

Attributes
----------
t_death: float
    The time where the concurrence drops to zero
t_revival: float
    The time where the entanglement revives (or the end of the scanned time
    range, if the window is still open)
closed: bool
    False if the entanglement did not revive within the scanned range"""


def _closed_form_propagator(params, t):
    B, J, g, phi = params.B, params.J, params.g, params.phi
    c = params.diagonal_factor
    k = params.coupling_factor
    cos, sin = np.cos(J * t), np.sin(J * t)
    phase = np.exp(1j * g * t / 4)
    u = np.zeros((4, 4), dtype=complex)
    u[0, 0] = np.exp(-1j * (B + g / 4) * t)
    u[3, 3] = np.exp(1j * (B - g / 4) * t)
    u[1, 1] = phase * (cos - 1j * c * sin)
    u[2, 2] = phase * (cos + 1j * c * sin)
    u[1, 2] = phase * 1j * k * np.exp(1j * phi) * sin
    u[2, 1] = phase * 1j * k * np.exp(-1j * phi) * sin
    return u


def propagator(params, t, method='closed-form'):
    """The time evolution operator ``exp(-i H t)``

    Parameters
    ----------
    params: tlentangle.spin_model.ModelParams
        The model parameters
    t: float
        The time
    method: {'closed-form', 'numeric'}
        ``'closed-form'`` evaluates the analytic matrix elements,
        ``'numeric'`` exponentiates the numerically conjugated Hamiltonian

    Returns
    -------
    np.ndarray
        The unitary 4x4 propagator"""
    if method == 'closed-form':
        return _closed_form_propagator(params, float(t))
    elif method == 'numeric':
        h = conjugated_hamiltonian(params, 'numeric').h
        return mat_exp_hermitian(h, -1j * float(t))
    raise ValueError("Unknown method %r! Use 'closed-form' or 'numeric'." % (
        method, ))


def evolve(params, init, t, method='closed-form'):
    """The state ``U(t) rho0 U(t)^dagger``

    Parameters
    ----------
    params: tlentangle.spin_model.ModelParams
        The model parameters
    init: InitialState or np.ndarray
        The initial state or any 4x4 density matrix
    t: float
        The time
    method: {'closed-form', 'numeric'}
        The method for the :func:`propagator`

    Returns
    -------
    np.ndarray
        The evolved density matrix"""
    rho0 = init.rho0 if isinstance(init, InitialState) else \
        check_density_matrix(init)
    u = propagator(params, t, method)
    return u @ rho0 @ dagger(u)


def evolved_concurrence(params, init, t, method='closed-form',
                        tol=TOLERANCE):
    """The concurrence of Wootters of the evolved state

    Parameters
    ----------
    params: tlentangle.spin_model.ModelParams
        The model parameters
    init: InitialState or np.ndarray
        The initial state or any 4x4 density matrix
    t: float
        The time
    method: {'closed-form', 'numeric'}
        The method for the :func:`propagator`
    tol: float
        The tolerance for the validation of the evolved state

    Returns
    -------
    tlentangle.entanglement.ConcurrenceValue
        The concurrence"""
    return wootters_concurrence(evolve(params, init, t, method), tol)


def _check_loop(d):
    d = np.asarray(d, dtype=float)
    if np.any(~(d >= 2)):
        raise LoopOutOfDomain(
            "The sudden death closed form needs d >= 2, got %s!" % (d, ))
    return d


@docstrings.get_sections(base='esd_pre_clamp')
def esd_pre_clamp(d, t, J=0.5):
    """The closed form concurrence before clipping at zero

    Parameters
    ----------
    d: float or np.ndarray
        The loop parameter, at least 2
    t: float or np.ndarray
        The time
    J: float
        The field inhomogeneity. The closed form is a function of ``2 J t``

    Returns
    -------
    float or np.ndarray
        ``sqrt((16(d^2-4) + (d^2-8)^2 cos 2Jt)^2 + d^4 (d^2-8)^2 sin^2 2Jt)
        / (2 d^4) - 1/4``. Negative values indicate sudden death"""
    d = _check_loop(d)
    tau = 2 * J * np.asarray(t, dtype=float)
    d2 = d * d
    d4 = d2 * d2
    b = (d2 - 8) ** 2
    ret = np.sqrt((16 * (d2 - 4) + b * np.cos(tau)) ** 2 +
                  d4 * b * np.sin(tau) ** 2) / (2 * d4) - 0.25
    return ret if ret.ndim else float(ret)


@docstrings.dedent
def esd_closed_form(d, t, J=0.5):
    """
    The concurrence of the Werner-like state with ``gamma = 1/2``

    Valid for ``alpha = pi/4`` and ``phi = pi``. It depends neither on the
    mean field nor on the Ising coupling.

    Parameters
    ----------
    %(esd_pre_clamp.parameters)s

    Returns
    -------
    tlentangle.entanglement.ConcurrenceValue
        ``max(0, esd_pre_clamp(d, t, J))``

    Raises
    ------
    tlentangle.common.LoopOutOfDomain
        If ``d < 2``"""
    return ConcurrenceValue(max(0., float(esd_pre_clamp(d, t, J))),
                            'analytic')


def esd_windows(d, t_max, grid_step=None, J=0.5, xtol=1e-12):
    """Find the time windows of entanglement sudden death

    The pre-clamp closed form is sampled on a uniform grid, sign changes are
    bracketed and every boundary is refined by bisection.

    Parameters
    ----------
    d: float
        The loop parameter, at least 2
    t_max: float
        The end of the scanned time range ``[0, t_max]``
    grid_step: float
        The step of the scanning grid. Defaults to ``t_max / 4096``
    J: float
        The field inhomogeneity
    xtol: float
        The absolute tolerance of the bisection

    Returns
    -------
    list of EsdWindow
        The maximal time windows where the concurrence vanishes. The list is
        empty if there is no sudden death in ``[0, t_max]``"""
    _check_loop(d)
    if not t_max > 0:
        raise ValueError("t_max must be positive, not %s!" % t_max)
    if grid_step is None:
        grid_step = t_max / 4096.
    if not grid_step > 0:
        raise ValueError("grid_step must be positive, not %s!" % grid_step)
    nsteps = int(np.ceil(t_max / grid_step - 1e-9))
    grid = np.linspace(0, t_max, nsteps + 1)
    values = esd_pre_clamp(d, grid, J)
    dead = values < 0

    def func(t):
        return esd_pre_clamp(d, t, J)

    windows = []
    i = 0
    while i <= nsteps:
        if not dead[i]:
            i += 1
            continue
        start = i
        while i <= nsteps and dead[i]:
            i += 1
        stop = i  # first alive index after the run (or nsteps + 1)
        if values[start:stop].min() > -ESD_DEPTH:
            continue
        t_death = grid[0] if start == 0 else bisect(
            func, grid[start - 1], grid[start], xtol=xtol)
        if stop > nsteps:
            windows.append(EsdWindow(t_death, float(t_max), False))
        else:
            t_revival = bisect(func, grid[stop - 1], grid[stop], xtol=xtol)
            windows.append(EsdWindow(t_death, t_revival, True))
    return windows


def esd_region():
    """The loop parameters with sudden death for the Werner-like state

    Sudden death occurs iff ``1/4 < k^2 < 3/4`` with
    ``k = 4 sqrt(d^2 - 4) / d^2``, i.e. on two intervals whose boundaries
    solve ``d^4 - 64 d^2 + 256 = 0`` and ``3 d^4 - 64 d^2 + 256 = 0``.

    Returns
    -------
    list of tuple
        The open intervals ``(d_lo, d_hi)``"""
    outer = np.sqrt([32 - np.sqrt(768), 32 + np.sqrt(768)])
    inner = np.sqrt([16 / 3., 16.])
    return [(float(outer[0]), float(inner[0])),
            (float(inner[1]), float(outer[1]))]


def esd_scan(d_values, t_max=4 * np.pi, grid_step=None, J=0.5):
    """Check for sudden death on a grid of loop parameters

    Parameters
    ----------
    d_values: list of float
        The loop parameters
    t_max: float
        The end of the scanned time range
    grid_step: float
        The step of the scanning grid (see :func:`esd_windows`)
    J: float
        The field inhomogeneity

    Returns
    -------
    pandas.DataFrame
        The columns ``'d'``, ``'esd'`` (whether any window has been found),
        ``'windows'`` (their number) and ``'first_death'``"""
    rows = []
    for d in d_values:
        windows = esd_windows(d, t_max, grid_step, J)
        rows.append((float(d), bool(windows), len(windows),
                     windows[0].t_death if windows else np.nan))
    return pd.DataFrame(rows, columns=['d', 'esd', 'windows', 'first_death'])


def esd_window_table(d_values, t_max=4 * np.pi, grid_step=None, J=0.5):
    """All sudden death windows for a grid of loop parameters

    Returns
    -------
    pandas.DataFrame
        One row per window with the columns ``'d'``, ``'t_death'``,
        ``'t_revival'`` and ``'closed'``"""
    rows = [(float(d), ) + tuple(window) for d in d_values
            for window in esd_windows(d, t_max, grid_step, J)]
    return pd.DataFrame(rows, columns=['d', 't_death', 't_revival', 'closed'])


def concurrence_series(d_values, t_values, J=0.5):
    """The closed form concurrence on a grid of loop parameters and times

    Parameters
    ----------
    d_values: list of float
        The loop parameters
    t_values: list of float
        The times
    J: float
        The field inhomogeneity

    Returns
    -------
    pandas.DataFrame
        Long format frame with the columns ``'d'``, ``'t'`` and ``'C'``"""
    d_values = _check_loop(np.ravel(d_values))
    t_values = np.asarray(t_values, dtype=float).ravel()
    dd, tt = np.meshgrid(d_values, t_values, indexing='ij')
    values = np.clip(esd_pre_clamp(dd, tt, J), 0, None)
    return pd.DataFrame({'d': dd.ravel(), 't': tt.ravel(),
                         'C': np.ravel(values)})
