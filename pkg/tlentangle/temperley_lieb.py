# -*- coding: utf-8 -*-
"""Projector representations of the Temperley-Lieb algebra

This module builds the two-site generator ``U = d |Psi><Psi|`` from an
entangled state ``|Psi> = sum alpha_{lambda mu} |lambda mu>`` and checks the
defining relations

.. math::

    U_i^2 = d U_i, \\quad U_i U_{i\\pm 1} U_i = U_i, \\quad
    U_i U_j = U_j U_i \\; (|i - j| > 1)

It provides the three representation families

:class:`MaxEntangled`
    ``n`` diagonal amplitudes ``1/sqrt(n)`` with ``d = n``
:class:`TwoDim`
    the qubit family with ``d = q + 1/q``
:class:`ThreeDim`
    the three qutrit branches with ``d = q + 1/q + 1``

and a multistart least squares solver for the quartic constraint system that
the amplitudes have to satisfy.

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
import logging
from collections import namedtuple
import numpy as np
from scipy.optimize import least_squares
from tlentangle.common import (
    TOLERANCE, NORM_TOLERANCE, ResidualReport, InvalidSpec,
    NotNormalized, NonPositiveLoop, InvalidPermutation, DimensionMismatch,
    LoopOutOfDomain)
from tlentangle.linalg import (
    as_cmatrix, embed_two_site, max_abs, is_hermitian, hermitian_eig)


logger = logging.getLogger(__name__)


#: Marker for :func:`solve_constraints` to treat the loop parameter as an
#: unknown
FREE = 'free'

#: The names of the representation families as used on the command line
FAMILIES = ('max-entangled', 'two-dim', 'three-dim')


def _check_permutation(perm, n):
    """Validate `perm` as a permutation of ``range(n)``"""
    try:
        perm = np.asarray(perm, dtype=int)
    except (TypeError, ValueError):
        raise InvalidPermutation("Could not interpret %r as permutation!" % (
            perm, ))
    if perm.shape != (n, ) or sorted(perm.tolist()) != list(range(n)):
        raise InvalidPermutation(
            "%s is not a permutation of {0, ..., %i}!" % (perm.tolist(),
                                                         n - 1))
    return perm


class AmplitudeMatrix(object):
    """The coefficient matrix ``alpha`` of a two-qudit state

    The state is ``sum_{lambda, mu} alpha[lambda, mu] |lambda mu>``. Every row
    and every column of ``alpha`` holds exactly one nonzero entry, i.e. the
    support is ``{(lambda, perm[lambda])}`` for a permutation ``perm``."""

    def __init__(self, alpha, tol=NORM_TOLERANCE):
        """
        Parameters
        ----------
        alpha: np.ndarray
            The square complex amplitude matrix
        tol: float
            The tolerance for the normalization ``sum |alpha|^2 = 1``

        Raises
        ------
        NotNormalized
            If the amplitudes are not normalized
        InvalidPermutation
            If the support is not a permutation pattern"""
        alpha = as_cmatrix(alpha)
        n, m = alpha.shape
        if n != m:
            raise DimensionMismatch(
                "Amplitude matrix must be square, not %s!" % (alpha.shape, ))
        norm = np.sum(np.abs(alpha) ** 2)
        if abs(norm - 1) > tol:
            raise NotNormalized(
                "Amplitudes are not normalized: sum |alpha|^2 = %s" % norm)
        support = alpha != 0
        if not (np.all(support.sum(axis=0) == 1) and
                np.all(support.sum(axis=1) == 1)):
            raise InvalidPermutation(
                "Every row and column of alpha needs exactly one nonzero "
                "entry!")
        self.alpha = alpha

    @classmethod
    def from_moduli(cls, moduli, perm, phases=None, tol=NORM_TOLERANCE):
        """Construct the matrix from moduli, support pattern and phases

        Parameters
        ----------
        moduli: np.ndarray
            The positive moduli ``a_lambda = |alpha[lambda, perm[lambda]]|``
        perm: list of int
            The permutation describing the support
        phases: np.ndarray
            The phases ``k_lambda`` of the nonzero entries. Zero if None
        tol: float
            The normalization tolerance

        Returns
        -------
        AmplitudeMatrix
            The matrix with ``alpha[lambda, perm[lambda]] =
            moduli[lambda] * exp(1j * phases[lambda])``"""
        moduli = np.asarray(moduli, dtype=float)
        n = len(moduli)
        perm = _check_permutation(perm, n)
        if np.any(moduli <= 0):
            raise InvalidSpec("Moduli must be positive, got %s!" % (moduli, ))
        phases = np.zeros(n) if phases is None else np.asarray(
            phases, dtype=float)
        alpha = np.zeros((n, n), dtype=complex)
        alpha[np.arange(n), perm] = moduli * np.exp(1j * phases)
        return cls(alpha, tol)

    @classmethod
    def from_state(cls, state, n=None, tol=NORM_TOLERANCE):
        """Reshape a state vector of length ``n**2`` into its amplitudes"""
        state = np.asarray(state, dtype=complex).ravel()
        if n is None:
            n = int(round(np.sqrt(len(state))))
        if len(state) != n * n:
            raise DimensionMismatch(
                "State of length %i does not describe two sites of "
                "dimension %i!" % (len(state), n))
        return cls(state.reshape(n, n), tol)

    @property
    def n(self):
        """The dimension of one site"""
        return self.alpha.shape[0]

    @property
    def perm(self):
        """The permutation ``lambda -> mu`` of the support"""
        return np.argmax(self.alpha != 0, axis=1)

    @property
    def moduli(self):
        """The moduli ``a_lambda`` of the nonzero entries, ordered by row"""
        return np.abs(self.alpha[np.arange(self.n), self.perm])

    @property
    def phases(self):
        """The phases ``k_lambda`` of the nonzero entries, ordered by row"""
        return np.angle(self.alpha[np.arange(self.n), self.perm])

    @property
    def state(self):
        """The state vector with the entry ``alpha[l, m]`` at ``l * n + m``"""
        return self.alpha.ravel()

    def with_phases(self, phases):
        """A copy of this matrix with the given phases ``k_lambda``"""
        return self.from_moduli(self.moduli, self.perm, phases)

    def __repr__(self):
        return '%s(n=%i, perm=%s, moduli=%s)' % (
            self.__class__.__name__, self.n, self.perm.tolist(),
            np.array2string(self.moduli, precision=6))


class TLGenerator(object):
    """A two-site Temperley-Lieb generator ``u = d |Psi><Psi|``

    Attributes
    ----------
    n: int
        The dimension of one site
    d: float
        The loop parameter
    u: np.ndarray
        The ``n**2 x n**2`` matrix"""

    def __init__(self, u, d, n=None, tol=TOLERANCE, validate=True):
        """
        Parameters
        ----------
        u: np.ndarray
            The generator matrix
        d: float
            The loop parameter. Must be positive
        n: int
            The dimension of one site. If None, it is inferred from `u`
        tol: float
            The tolerance for the validation
        validate: bool
            If True, check hermiticity, ``u^2 = d u`` and that `u` has rank
            one. Set this to False to build test matrices that violate the
            algebra

        Raises
        ------
        NonPositiveLoop
            If ``d <= 0``
        ValueError
            If `validate` and any of the invariants is violated"""
        u = as_cmatrix(u)
        if n is None:
            n = int(round(np.sqrt(u.shape[0])))
        if u.shape != (n * n, n * n):
            raise DimensionMismatch(
                "Generator of shape %s does not act on two sites of "
                "dimension %i!" % (u.shape, n))
        d = float(d)
        if not d > 0:
            raise NonPositiveLoop("Loop parameter must be positive, not %s!"
                                  % d)
        self.u = u
        self.d = d
        self.n = n
        if validate:
            self.validate(tol)

    def validate(self, tol=TOLERANCE):
        """Check the projector invariants of the generator

        Raises
        ------
        ValueError
            If `u` is not Hermitian, violates ``u^2 = d u`` or has a rank
            different from one"""
        u, d = self.u, self.d
        scale = max(1., max_abs(u))
        if not is_hermitian(u, tol):
            raise ValueError("Generator is not Hermitian!")
        res = max_abs(u @ u - d * u)
        if res > tol * scale * max(1., d):
            raise ValueError("Generator violates u^2 = d u (residual %s)!" %
                             res)
        values = hermitian_eig(u, tol).values
        if abs(values[-1] - d) > tol * scale or (
                len(values) > 1 and np.abs(values[:-1]).max() > tol * scale):
            raise ValueError("Generator does not have rank one with "
                             "eigenvalue d = %s!" % d)

    def embed(self, site, sites):
        """Embed the generator at `site` into a chain of `sites` sites"""
        return embed_two_site(self.u, site, self.n, sites)

    def __repr__(self):
        return '%s(n=%i, d=%s)' % (self.__class__.__name__, self.n, self.d)


# ---------------------------------------------------------------------------
# Representation families
# ---------------------------------------------------------------------------


class FamilySpec(object):
    """Base class for the representation families

    Subclasses implement :attr:`n`, :attr:`d` and :meth:`amplitudes`."""

    #: The name of the family on the command line
    kind = None

    #: The dimension of one site
    n = None

    @property
    def d(self):
        """The loop parameter of the family"""
        raise NotImplementedError

    def amplitudes(self):
        """The :class:`AmplitudeMatrix` of the family's entangled state"""
        raise NotImplementedError

    def _check_q(self, q):
        try:
            q = float(q)
        except (TypeError, ValueError):
            raise InvalidSpec("q must be a real number, not %r!" % (q, ))
        if not np.isfinite(q) or q <= 0:
            raise InvalidSpec("q must be positive and finite, not %s!" % q)
        return q

    def _check_phases(self, phases):
        phases = np.zeros(self.n) if phases is None else np.asarray(
            phases, dtype=float).ravel()
        if phases.shape != (self.n, ):
            raise InvalidSpec("Expected %i phases, got %i!" % (
                self.n, phases.size))
        if not np.all(np.isfinite(phases)):
            raise InvalidSpec("Phases must be finite!")
        return phases


class MaxEntangled(FamilySpec):
    """The maximally entangled family ``sum_l exp(i k_l) |l l> / sqrt(n)``

    Its loop parameter is ``d = n``."""

    kind = 'max-entangled'

    def __init__(self, n, phases=None):
        """
        Parameters
        ----------
        n: int
            The dimension of one site (at least 2)
        phases: np.ndarray
            The phases ``k_{ll}``. Zero if None"""
        if int(n) != n or n < 2:
            raise InvalidSpec("n must be an integer >= 2, not %r!" % (n, ))
        self.n = int(n)
        self.phases = self._check_phases(phases)

    @property
    def d(self):
        return float(self.n)

    def amplitudes(self):
        return AmplitudeMatrix.from_moduli(
            np.full(self.n, 1. / np.sqrt(self.n)), np.arange(self.n),
            self.phases)

    def __repr__(self):
        return 'MaxEntangled(n=%i)' % self.n


class TwoDim(FamilySpec):
    """The qubit family ``(q e^{i k01} |01> + e^{i k10} |10>) / sqrt(1+q^2)``

    Its loop parameter is ``d = q + 1/q``."""

    kind = 'two-dim'
    n = 2

    def __init__(self, q, k01=0., k10=0.):
        """
        Parameters
        ----------
        q: float
            The positive deformation parameter
        k01: float
            The phase of the ``|01>`` amplitude
        k10: float
            The phase of the ``|10>`` amplitude"""
        self.q = self._check_q(q)
        self.phases = self._check_phases([k01, k10])

    @property
    def d(self):
        return self.q + 1. / self.q

    def amplitudes(self):
        q = self.q
        return AmplitudeMatrix.from_moduli(
            np.array([q, 1.]) / np.sqrt(1 + q * q), [1, 0], self.phases)

    def __repr__(self):
        return 'TwoDim(q=%s)' % self.q


class ThreeDim(FamilySpec):
    """The three qutrit families with ``d = q + 1/q + 1``

    The branches have the (unnormalized) amplitudes

    1. ``q |02> + sqrt(q) |11> + |20>``
    2. ``q |01> + |10> + sqrt(q) |22>``
    3. ``sqrt(q) |00> + q |12> + |21>``

    and share the normalization ``(1 + q + q^2)^(-1/2)``. The phases are
    given per row of the amplitude matrix, i.e. in the order listed above."""

    kind = 'three-dim'
    n = 3

    #: permutation and the moduli (as functions of q) of the branches
    _branches = {
        1: ([2, 1, 0], lambda q: [q, np.sqrt(q), 1.]),
        2: ([1, 0, 2], lambda q: [q, 1., np.sqrt(q)]),
        3: ([0, 2, 1], lambda q: [np.sqrt(q), q, 1.]),
        }

    def __init__(self, branch, q, phases=None):
        """
        Parameters
        ----------
        branch: {1, 2, 3}
            The branch of the family
        q: float
            The positive deformation parameter
        phases: np.ndarray
            The three phases of the nonzero amplitudes. Zero if None"""
        if branch not in self._branches:
            raise InvalidSpec("branch must be 1, 2 or 3, not %r!" % (
                branch, ))
        self.branch = int(branch)
        self.q = self._check_q(q)
        self.phases = self._check_phases(phases)

    @property
    def d(self):
        return self.q + 1. / self.q + 1.

    @property
    def perm(self):
        """The support pattern of the branch"""
        return list(self._branches[self.branch][0])

    def amplitudes(self):
        perm, moduli = self._branches[self.branch]
        q = self.q
        return AmplitudeMatrix.from_moduli(
            np.asarray(moduli(q)) / np.sqrt(1 + q + q * q), perm,
            self.phases)

    def __repr__(self):
        return 'ThreeDim(branch=%i, q=%s)' % (self.branch, self.q)


def family_from_name(kind, q=1., n=2, branch=1, phases=None):
    """Create a :class:`FamilySpec` from its command line name

    Parameters
    ----------
    kind: {'max-entangled', 'two-dim', 'three-dim'}
        The name of the family
    q: float
        The deformation parameter (two-dim and three-dim)
    n: int
        The site dimension (max-entangled)
    branch: int
        The branch (three-dim)
    phases: list of float
        The phases of the nonzero amplitudes

    Returns
    -------
    FamilySpec
        The family"""
    if kind == 'max-entangled':
        return MaxEntangled(n, phases)
    elif kind == 'two-dim':
        phases = [0., 0.] if phases is None else phases
        if len(phases) != 2:
            raise InvalidSpec("The two-dim family needs two phases!")
        return TwoDim(q, *phases)
    elif kind == 'three-dim':
        return ThreeDim(branch, q, phases)
    raise InvalidSpec("Unknown family %r! Use one of %s" % (
        kind, ', '.join(FAMILIES)))


def loop_parameter(kind, q):
    """The loop parameter ``d`` for the deformation parameter `q`

    Parameters
    ----------
    kind: {'two-dim', 'three-dim'}
        The family
    q: float
        The positive deformation parameter

    Returns
    -------
    float
        ``q + 1/q`` or ``q + 1/q + 1``"""
    if kind == 'two-dim':
        return TwoDim(q).d
    elif kind == 'three-dim':
        return ThreeDim(1, q).d
    raise InvalidSpec("No deformation parameter for the family %r!" % (
        kind, ))


def q_from_loop(d, kind='two-dim', upper=False):
    """Invert :func:`loop_parameter`

    `d` determines `q` only up to ``q -> 1/q``. The lower branch ``q <= 1``
    is the one the spin model uses.

    Parameters
    ----------
    d: float
        The loop parameter (``>= 2`` for two-dim, ``>= 3`` for three-dim)
    kind: {'two-dim', 'three-dim'}
        The family
    upper: bool
        If True, return the branch ``q >= 1``

    Returns
    -------
    float
        The deformation parameter

    Raises
    ------
    LoopOutOfDomain
        If `d` is smaller than the family's minimum"""
    if kind == 'two-dim':
        s = float(d)
        dmin = 2.
    elif kind == 'three-dim':
        s = float(d) - 1
        dmin = 3.
    else:
        raise InvalidSpec("No deformation parameter for the family %r!" % (
            kind, ))
    if not d >= dmin:
        raise LoopOutOfDomain("d = %s is below the minimum %s of the %s "
                              "family!" % (d, dmin, kind))
    root = np.sqrt(max(s * s - 4, 0.))
    # q = 2 / (s + root) avoids the cancellation in (s - root) / 2
    return (s + root) / 2 if upper else 2 / (s + root)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def build_state(spec):
    """The normalized entangled state of a representation family

    Parameters
    ----------
    spec: FamilySpec
        The family

    Returns
    -------
    np.ndarray
        The state of length ``n**2``

    Raises
    ------
    InvalidSpec
        If `spec` is not a :class:`FamilySpec`"""
    if not isinstance(spec, FamilySpec):
        raise InvalidSpec("Expected a FamilySpec, got %r!" % (spec, ))
    return spec.amplitudes().state


def build_generator(state, d, n=None, tol=TOLERANCE):
    """Build the generator ``u = d |Psi><Psi|``

    Parameters
    ----------
    state: np.ndarray
        The normalized two-site state (or an :class:`AmplitudeMatrix`)
    d: float
        The positive loop parameter
    n: int
        The dimension of one site. If None, it is inferred from `state`
    tol: float
        The tolerance for the validation of the generator

    Returns
    -------
    TLGenerator
        The generator with
        ``u[l m, l' m'] = d alpha_{l m} conj(alpha_{l' m'})``

    Raises
    ------
    NotNormalized
        If `state` is not normalized
    NonPositiveLoop
        If ``d <= 0``"""
    if isinstance(state, AmplitudeMatrix):
        state = state.state
    state = np.asarray(state, dtype=complex).ravel()
    norm = np.vdot(state, state).real
    if abs(norm - 1) > NORM_TOLERANCE:
        raise NotNormalized("State is not normalized: <Psi|Psi> = %s" % norm)
    if not d > 0:
        raise NonPositiveLoop("Loop parameter must be positive, not %s!" % d)
    u = d * np.outer(state, state.conj())
    return TLGenerator(u, d, n, tol)


def family_generator(spec, tol=TOLERANCE):
    """The generator of a representation family at its own loop parameter"""
    return build_generator(build_state(spec), spec.d, spec.n, tol)


def two_dim_generator(q, phi=0., tol=TOLERANCE):
    """The qubit generator with coupling phase `phi`

    In the standard basis its only nonzero block is
    ``[[q, exp(i phi)], [exp(-i phi), 1/q]]`` on ``{|01>, |10>}``.

    Parameters
    ----------
    q: float
        The positive deformation parameter
    phi: float
        The coupling phase (the difference ``k01 - k10`` of the amplitude
        phases)
    tol: float
        The tolerance for the validation of the generator

    Returns
    -------
    TLGenerator
        The 4x4 generator with ``d = q + 1/q``"""
    return family_generator(TwoDim(q, k01=phi, k10=0.), tol)


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------


def verify_tl_relations(gen, sites=3, tol=TOLERANCE):
    """Check the Temperley-Lieb relations of a generator on a short chain

    Parameters
    ----------
    gen: TLGenerator
        The two-site generator
    sites: {3, 4}
        The length of the chain. With 3 sites, ``U1 = u x 1`` and
        ``U2 = 1 x u`` are checked. 4 sites add ``U3`` and the commutativity
        of the distant generators ``U1`` and ``U3``
    tol: float
        The tolerance for every residual

    Returns
    -------
    ResidualReport
        The largest absolute entries of ``U_i^2 - d U_i``,
        ``U_i U_j U_i - U_i`` and (4 sites) ``U1 U3 - U3 U1``"""
    if sites not in (3, 4):
        raise ValueError("Relations can be checked on 3 or 4 sites, not %r!"
                         % (sites, ))
    d = gen.d
    ops = [gen.embed(i, sites) for i in range(sites - 1)]
    report = ResidualReport('TL relations (%i sites)' % sites, tol)
    for i, op in enumerate(ops, 1):
        report.add('U%i^2 - d U%i' % (i, i), max_abs(op @ op - d * op))
    for i, (op1, op2) in enumerate(zip(ops[:-1], ops[1:]), 1):
        j = i + 1
        report.add('U%i U%i U%i - U%i' % (i, j, i, i),
                   max_abs(op1 @ op2 @ op1 - op1))
        report.add('U%i U%i U%i - U%i' % (j, i, j, j),
                   max_abs(op2 @ op1 @ op2 - op2))
    if sites == 4:
        report.add('U1 U3 - U3 U1', max_abs(ops[0] @ ops[2] -
                                             ops[2] @ ops[0]))
    return report


def constraint_sums(alpha, d):
    """The two quartic sums whose identity is required of the amplitudes

    Parameters
    ----------
    alpha: AmplitudeMatrix or np.ndarray
        The amplitudes
    d: float
        The loop parameter

    Returns
    -------
    np.ndarray
        ``d^2 sum conj(a_nl) a_lm a_ns conj(a_sb)`` over ``n, l, s``
    np.ndarray
        ``d^2 sum a_ml conj(a_ln) conj(a_bs) a_sn`` over ``l, n, s``

    Both have to equal the identity matrix (indices ``mu, beta``)."""
    a = alpha.alpha if isinstance(alpha, AmplitudeMatrix) else as_cmatrix(
        alpha)
    ac = a.conj()
    first = d * d * np.einsum('nl,lm,ns,sb->mb', ac, a, a, ac)
    second = d * d * np.einsum('ml,ln,bs,sn->mb', a, ac, ac, a)
    return first, second


def verify_constraints(alpha, d, tol=TOLERANCE):
    """Check the quartic constraints of the amplitude matrix

    Parameters
    ----------
    alpha: AmplitudeMatrix
        The amplitudes
    d: float
        The loop parameter
    tol: float
        The tolerance for both residuals

    Returns
    -------
    ResidualReport
        The largest absolute deviation of both quartic sums from the identity
    """
    first, second = constraint_sums(alpha, d)
    eye = np.eye(first.shape[0])
    report = ResidualReport('constraints', tol)
    report.add('first condition', max_abs(first - eye))
    report.add('second condition', max_abs(second - eye))
    return report


def reduced_constraints(moduli, perm, d):
    """The diagonal of the constraint system for permutation supports

    For an amplitude matrix supported on ``(lambda, perm[lambda])`` the
    off-diagonal entries of both quartic sums vanish and the diagonal reduces
    to ``d^2 a_lambda^2 a_perm(lambda)^2 = 1``.

    Parameters
    ----------
    moduli: np.ndarray
        The moduli ``a_lambda``
    perm: list of int
        The support pattern
    d: float
        The loop parameter

    Returns
    -------
    np.ndarray
        ``d^2 a_lambda^2 a_perm(lambda)^2 - 1`` for every ``lambda``"""
    moduli = np.asarray(moduli, dtype=float)
    perm = _check_permutation(perm, len(moduli))
    return (d * moduli * moduli[perm]) ** 2 - 1


ConstraintSolution = namedtuple('ConstraintSolution',
                                ['alpha', 'd', 'residual'])
ConstraintSolution.__doc__ = """A solution of the constraint system

Attributes
----------
alpha: AmplitudeMatrix
    The gauge fixed amplitudes (all phases zero)
d: float
    The loop parameter
residual: float
    The larger residual of :func:`verify_constraints`"""


def _lm_problem(n, perm, logd):
    """Residuals and jacobian in the logarithmic parameters

    The parameters are ``y = log(a)`` (and ``z = log(d)`` if `logd` is None).
    """
    rows = np.arange(n)

    def split(x):
        return x[:n], (x[n] if logd is None else logd)

    def fun(x):
        y, z = split(x)
        e = np.exp(2 * z + 2 * y + 2 * y[perm])
        return np.r_[e - 1, np.exp(2 * y).sum() - 1]

    def jac(x):
        y, z = split(x)
        e = np.exp(2 * z + 2 * y + 2 * y[perm])
        ret = np.zeros((n + 1, len(x)))
        np.add.at(ret, (rows, rows), 2 * e)
        np.add.at(ret, (rows, perm), 2 * e)
        if logd is None:
            ret[:n, n] = 2 * e
        ret[n, :n] = 2 * np.exp(2 * y)
        return ret

    return fun, jac


def solve_constraints(n, perm, d=FREE, nstarts=32, seed=0, max_iter=200,
                      tol=1e-9):
    """Search permutation supported solutions of the constraint system

    The moduli ``a_lambda > 0`` (and `d` if it is :data:`FREE`) are fitted
    with a Levenberg-Marquardt least squares in logarithmic parameters, from
    `nstarts` random starting points on the unit sphere. Each converged
    result is projected onto ``sum a^2 = 1`` and certified with
    :func:`verify_constraints`.

    Parameters
    ----------
    n: int
        The dimension of one site
    perm: list of int
        The support pattern ``lambda -> perm[lambda]``
    d: float or :data:`FREE`
        The loop parameter or :data:`FREE` (or None) to solve for it
    nstarts: int
        The number of random starting points
    seed: int
        The seed for :func:`numpy.random.default_rng`
    max_iter: int
        The maximum number of function evaluations per start
    tol: float
        The residual that a certified solution must not exceed

    Returns
    -------
    list of ConstraintSolution
        The distinct certified solutions, sorted by moduli and `d`. Two
        solutions are considered equal if their moduli and loop parameters
        agree within ``1e-8``. The list is empty if no start converged

    Raises
    ------
    InvalidPermutation
        If `perm` is not a permutation of ``range(n)``
    NonPositiveLoop
        If a fixed `d` is not positive"""
    n = int(n)
    perm = _check_permutation(perm, n)
    free = d is None or (isinstance(d, str) and d == FREE)
    if not free:
        d = float(d)
        if not d > 0:
            raise NonPositiveLoop("Loop parameter must be positive, not %s!"
                                  % d)
    fun, jac = _lm_problem(n, perm, None if free else np.log(d))
    rng = np.random.default_rng(seed)
    starts = np.sqrt(rng.dirichlet(np.ones(n), size=nstarts))
    found = []
    nfailed = 0
    for a0 in starts:
        a0 = np.clip(a0, 1e-8, None)
        x0 = np.log(a0)
        if free:
            p = a0 * a0[perm]
            x0 = np.r_[x0, np.log(p.sum() / (p * p).sum())]
        with np.errstate(over='ignore', invalid='ignore', under='ignore'):
            res = least_squares(fun, x0, jac=jac, method='lm', xtol=1e-15,
                                ftol=1e-15, gtol=1e-15, max_nfev=max_iter)
            moduli = np.exp(res.x[:n])
            moduli /= np.linalg.norm(moduli)
            dsol = float(np.exp(res.x[n])) if free else d
        if not (np.all(np.isfinite(moduli)) and np.all(moduli > 0) and
                np.isfinite(dsol)):
            nfailed += 1
            continue
        alpha = AmplitudeMatrix.from_moduli(moduli, perm, tol=1e-8)
        report = verify_constraints(alpha, dsol, tol)
        if not report.passed:
            nfailed += 1
            continue
        found.append(ConstraintSolution(alpha, dsol, report.max_residual))
    found.sort(key=lambda sol: tuple(sol.alpha.moduli) + (sol.d, ))
    ret = []
    for sol in found:
        if not any(np.abs(sol.alpha.moduli - other.alpha.moduli).max() <=
                   1e-8 and abs(sol.d - other.d) <= 1e-8 for other in ret):
            ret.append(sol)
    logger.debug('Constraint solver for n=%i, perm=%s: %i of %i starts '
                 'failed, %i distinct solutions', n, perm.tolist(), nfailed,
                 nstarts, len(ret))
    return ret


def family_report(spec, sites=3, tol=TOLERANCE):
    """Run all algebraic checks for one representation family

    Parameters
    ----------
    spec: FamilySpec
        The family
    sites: {3, 4}
        The chain length for :func:`verify_tl_relations`
    tol: float
        The tolerance of every check

    Returns
    -------
    ResidualReport
        The combined report of :func:`verify_tl_relations` and
        :func:`verify_constraints`, together with the trace condition
        ``Tr u = d``"""
    gen = family_generator(spec, tol)
    report = ResidualReport(repr(spec), tol)
    report.extend(verify_tl_relations(gen, sites, tol))
    report.extend(verify_constraints(spec.amplitudes(), spec.d, tol))
    report.add('Tr u - d', abs(np.trace(gen.u) - gen.d))
    return report

