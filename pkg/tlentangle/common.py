# -*- coding: utf-8 -*-
"""Module of commonly used python objects

This module holds the docstring processor, the numerical tolerances that
are shared by all modules and the exceptions of the package.

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
from collections import OrderedDict
import numpy as np
import pandas as pd
from docrep import DocstringProcessor

docstrings = DocstringProcessor()


#: Default tolerance for all matrix identities
TOLERANCE = 1e-10

#: Tolerance for normalization and trace conditions
NORM_TOLERANCE = 1e-12

#: Negative radicands down to ``-RADICAND_GUARD`` are clamped to zero
RADICAND_GUARD = 1e-12

#: Guard for the vanishing normalization of the Yang-Baxterized operator
SINGULAR_GUARD = 1e-12

#: Relative off-diagonal mass at which the Jacobi iteration stops
JACOBI_TOLERANCE = 1e-14

#: Maximum number of Jacobi sweeps
JACOBI_MAX_SWEEPS = 100


class NotHermitian(ValueError):
    """A matrix that should be Hermitian is not"""


class DimensionMismatch(ValueError):
    """The shape of an array does not fit the requested dimensions"""


class InvalidSpec(ValueError):
    """A representation family has been specified with invalid parameters"""


class NotNormalized(ValueError):
    """A state vector is not normalized"""


class NonPositiveLoop(ValueError):
    """The loop parameter is not strictly positive"""


class InvalidPermutation(ValueError):
    """The support pattern of the amplitude matrix is not a permutation"""


class NotDensityMatrix(ValueError):
    """A matrix is not Hermitian, positive semidefinite and of unit trace"""


class TemperatureNonPositive(ValueError):
    """A thermal quantity has been requested at ``T <= 0``"""


class LoopOutOfDomain(ValueError):
    """The loop parameter is outside of the domain of a closed form"""


class InvalidParameters(ValueError):
    """Model parameters violate the model restrictions"""


class NoConvergence(ArithmeticError):
    """An iterative method did not converge"""


class SingularNormalization(ArithmeticError):
    """The normalization of the Yang-Baxterized operator vanishes"""


class NoSignChange(ArithmeticError):
    """No bracket with a sign change could be found"""


class NumericalError(ArithmeticError):
    """A numerical guard has been violated (e.g. a negative radicand)"""


def safe_sqrt(x, guard=RADICAND_GUARD):
    """Square root that clamps tiny negative radicands to zero

    Parameters
    ----------
    x: float or np.ndarray
        The radicand
    guard: float
        Radicands in ``[-guard, 0)`` are treated as zero

    Returns
    -------
    float or np.ndarray
        The square root of `x`

    Raises
    ------
    NumericalError
        If any radicand is smaller than ``-guard``"""
    x = np.asarray(x, dtype=float)
    if np.any(x < -guard):
        raise NumericalError(
            "Negative radicand %s below the guard %s!" % (x.min(), guard))
    ret = np.sqrt(np.clip(x, 0, None))
    return ret if ret.ndim else float(ret)


class ResidualReport(object):
    """An ordered collection of named residuals of numerical identities

    Each identity passes if its residual does not exceed :attr:`tol`."""

    def __init__(self, name='', tol=TOLERANCE):
        """
        Parameters
        ----------
        name: str
            A name for the checked object, used as prefix in
            :meth:`to_frame`
        tol: float
            The tolerance that every residual has to satisfy"""
        self.name = name
        self.tol = tol
        self.residuals = OrderedDict()
        self.notes = OrderedDict()

    def __getitem__(self, key):
        return self.residuals[key]

    def __iter__(self):
        return iter(self.residuals)

    def __len__(self):
        return len(self.residuals)

    def __repr__(self):
        return '%s(%r, passed=%s, max_residual=%s)' % (
            self.__class__.__name__, self.name, self.passed,
            self.max_residual)

    def add(self, key, residual):
        """Register the `residual` of the identity `key`"""
        self.residuals[key] = float(residual)

    def note(self, key, value):
        """Register an informative value that does not enter :attr:`passed`"""
        self.notes[key] = float(value)

    def extend(self, other):
        """Copy the residuals of another report into this one

        The keys of `other` are prefixed by its :attr:`name`."""
        for key, val in other.residuals.items():
            self.add('%s: %s' % (other.name, key) if other.name else key,
                     val)
        for key, val in other.notes.items():
            self.note('%s: %s' % (other.name, key) if other.name else key,
                      val)

    @property
    def max_residual(self):
        """The largest registered residual (0 for an empty report)"""
        return max(self.residuals.values(), default=0.0)

    @property
    def passed(self):
        """True if every residual is within :attr:`tol`"""
        return all(val <= self.tol for val in self.residuals.values())

    def failed(self):
        """The names of all identities whose residual exceeds :attr:`tol`"""
        return [key for key, val in self.residuals.items() if val > self.tol]

    def to_frame(self):
        """The report as a :class:`pandas.DataFrame`

        Returns
        -------
        pandas.DataFrame
            One row per identity with the columns ``'residual'`` and
            ``'passed'``. The index is named ``'identity'``"""
        df = pd.DataFrame(
            {'residual': list(self.residuals.values())},
            index=pd.Index(list(self.residuals), name='identity'))
        df['passed'] = df['residual'] <= self.tol
        return df
