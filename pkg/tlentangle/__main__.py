# -*- coding: utf-8 -*-
"""Command line interface of tlentangle

The subcommands write the data behind the concurrence, thermal and sudden
death curves as CSV and run the numerical verification suites. The exit code
is 0 on success, 1 if a check fails or an input is invalid and 2 on a
numerical breakdown (e.g. a non-converging iteration).

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
along with this program. If not, see <https://www.gnu.org/licenses/>."""
import sys
import inspect
import logging
import os.path as osp
import numpy as np
import pandas as pd
from funcargparse import FuncArgParser
import tlentangle
from tlentangle.common import docstrings, TOLERANCE, ResidualReport
from tlentangle.linalg import max_abs, identity, frobenius
from tlentangle.temperley_lieb import (
    FAMILIES, family_from_name, family_report, build_state, q_from_loop,
    TwoDim, ThreeDim, MaxEntangled, solve_constraints, two_dim_generator,
    FREE)
from tlentangle.entanglement import generalized_concurrence
from tlentangle.yang_baxter import (
    verify_ybe, verify_unitarity, yang_baxterize)
from tlentangle.spin_model import (
    ModelParams, conjugated_hamiltonian, eigensystem, build_h0)
from tlentangle.thermal import (
    thermal_concurrence, c_max, critical_temperature, zero_t_limit,
    critical_temperature_curve)
from tlentangle.dynamics import (
    InitialState, evolved_concurrence, esd_closed_form, esd_window_table,
    concurrence_series)


logger = logging.getLogger(__name__)


#: Format of all floating point numbers in the CSV output
FLOAT_FORMAT = '%.17g'

#: The operations that can be used with the ``sweep`` command
SWEEP_OPERATIONS = ['c_max', 'critical_temperature', 'zero_t_limit',
                    'thermal_concurrence', 'esd_closed_form',
                    'evolved_concurrence']

#: The parameters that can be swept
SWEEP_PARAMETERS = ['d', 'T', 't', 'B', 'J', 'g', 'phi', 'gamma', 'alpha']


def _grid(d_min, d_max, steps, lower=2.):
    if not d_min >= lower:
        raise ValueError("d-min must be at least %s, not %s!" % (lower, d_min))
    if not d_max > d_min:
        raise ValueError("d-max (%s) must be larger than d-min (%s)!" % (
            d_max, d_min))
    if steps < 2:
        raise ValueError("steps must be at least 2, not %s!" % steps)
    return np.linspace(d_min, d_max, steps)


def _gnuplot_script(csv, xlabel, ylabel, ncols, long_format=False):
    lines = ["set datafile separator ','",
             "set key autotitle columnhead",
             "set xlabel '%s'" % xlabel,
             "set ylabel '%s'" % ylabel]
    fname = osp.basename(csv)
    if long_format:
        lines.append("plot '%s' using 2:3:1 with points palette pt 7 ps 0.3"
                     % fname)
    else:
        lines.append('plot ' + ', '.join(
            "'%s' using 1:%i with lines" % (fname, i)
            for i in range(2, ncols + 1)))
    return '\n'.join(lines) + '\n'


docstrings.params['cli.output'] = docstrings.dedents("""
    out: str
        The path of the CSV file. If not given, the data is printed to
        stdout
    gnuplot: bool
        If True, write a gnuplot script ``<out>.gp`` next to the CSV file""")


def _write(df, out, gnuplot=False, xlabel='d', ylabel='C',
           long_format=False):
    if out is None:
        df.to_csv(sys.stdout, index=False, float_format=FLOAT_FORMAT)
        return
    logger.info('Writing %s', out)
    df.to_csv(out, index=False, float_format=FLOAT_FORMAT)
    if gnuplot:
        script = out + '.gp'
        logger.info('Writing %s', script)
        with open(script, 'w') as f:
            f.write(_gnuplot_script(out, xlabel, ylabel, len(df.columns),
                                    long_format))


def _random_phases(rng, n):
    return rng.uniform(0, 2 * np.pi, n)


def _family_suite(rng):
    specs = [MaxEntangled(n, _random_phases(rng, n)) for n in [2, 3, 4]]
    specs += [TwoDim(q, *_random_phases(rng, 2))
              for q in [0.2, 0.5, 1., 2., 5.]]
    specs += [ThreeDim(branch, q, _random_phases(rng, 3))
              for branch in [1, 2, 3] for q in [0.5, 1., 2.]]
    return specs


def _braid_suite(tol):
    report = ResidualReport('braid operator', tol)
    thetas = [0.3, 0.7, 1.1, 1.9, 2.3]
    for q in [0.5, 1., 2., 4.]:
        gen = two_dim_generator(q)
        report.add('YBE (q=%s)' % q, max(
            verify_ybe(gen, np.exp(1j * tx), np.exp(1j * ty))
            for tx in thetas for ty in thetas))
        sub = verify_unitarity(gen, np.linspace(0.1, 3.0, 30), tol=tol)
        sub.name = 'q=%s' % q
        report.extend(sub)
        r = yang_baxterize(gen, 1j).r
        report.add('R(i)^2 + I (q=%s)' % q, frobenius(r @ r + identity(4)))
    return report


def _random_params(rng):
    return ModelParams.from_fields(
        B=rng.uniform(0, 3), J=rng.uniform(-2, 2), g=rng.uniform(-1, 2),
        d=rng.uniform(2, 20), phi=rng.uniform(0, 2 * np.pi))


def _hamiltonian_suite(rng, nrandom, tol):
    report = ResidualReport('spin model', tol)
    conj, eig, spec = 0., 0., 0.
    for i in range(nrandom):
        params = _random_params(rng)
        ham = conjugated_hamiltonian(params)
        h = ham.h
        conj = max(conj, max_abs(
            h - conjugated_hamiltonian(params, 'numeric').h))
        system = eigensystem(params)
        eig = max(eig, max_abs(h @ system.states -
                               system.states * system.energies))
        spec = max(spec, max_abs(
            ham.spectrum() -
            np.sort(build_h0(params).diagonal().real)))
    report.add('analytic H - R(i) H0 R(i)^-1', conj)
    report.add('H Psi - E Psi', eig)
    report.add('spectrum H - spectrum H0', spec)
    return report


def _thermal_suite(tol):
    report = ResidualReport('thermal', tol)
    res = 0.
    for d in [2., 2.5, np.sqrt(8.), 4., 8.]:
        for B in [0., 1., 3.]:
            for J in [0.5, 1.]:
                for g in [0., 1.]:
                    params = ModelParams.from_fields(B, J, g, d, np.pi)
                    for T in [0.1, 0.5, 1., 2.]:
                        res = max(res, abs(
                            thermal_concurrence(params, T).value -
                            thermal_concurrence(params, T, 'wootters').value))
    report.add('analytic C(T) - Wootters C(T)', res)
    return report


def _dynamics_suite(nsamples, tol):
    report = ResidualReport('dynamics', tol)
    init = InitialState(0.5, np.pi / 4)
    res = 0.
    for d in [2.1, 3., 4., 5., 8.]:
        for B, g in [(0., 0.), (1.5, 0.7)]:
            params = ModelParams.from_fields(B, 0.5, g, d, np.pi)
            for t in np.linspace(0, 4 * np.pi, nsamples):
                res = max(res, abs(
                    esd_closed_form(d, t).value -
                    evolved_concurrence(params, init, t).value))
    report.add('closed form C(t) - Wootters C(t)', res)
    return report


def _solver_suite(tol):
    report = ResidualReport('constraint solver', tol)
    for n, perm in [(2, [1, 0]), (2, [0, 1]), (3, [2, 1, 0])]:
        solutions = solve_constraints(n, perm, FREE)
        if not solutions:
            report.add('solutions for perm %s' % perm, np.inf)
            continue
        report.add('perm %s' % perm,
                   max(sol.residual for sol in solutions))
    return report


def verify(family=None, q=2., n=2, branch=1, tolerance=TOLERANCE,
           nrandom=100, nsamples=256, seed=0, out=None):
    """
    Run the numerical verification suites

    Parameters
    ----------
    family: str
        Check only one representation family (one of ``'max-entangled'``,
        ``'two-dim'`` and ``'three-dim'``). If not given, all suites are run
    q: float
        The deformation parameter of the `family`
    n: int
        The dimension of one site for the ``'max-entangled'`` family
    branch: int
        The branch of the ``'three-dim'`` family
    tolerance: float
        The tolerance for every residual
    nrandom: int
        The number of random parameter sets for the Hamiltonian checks
    nsamples: int
        The number of times on ``[0, 4 pi]`` for the comparison of the
        evolved concurrence with its closed form
    seed: int
        The seed for the random phases and parameters
    out: str
        The path of a CSV file for the table of residuals

    Returns
    -------
    int
        0 if all residuals are within `tolerance`, otherwise 1"""
    report = ResidualReport('', tolerance)
    if family is not None:
        spec = family_from_name(family, q=q, n=n, branch=branch)
        report.extend(family_report(spec, 3, tolerance))
        report.extend(family_report(spec, 4, tolerance))
    else:
        rng = np.random.default_rng(seed)
        for spec in _family_suite(rng):
            report.extend(family_report(spec, 3, tolerance))
        report.extend(family_report(TwoDim(2.), 4, tolerance))
        report.extend(_solver_suite(tolerance))
        report.extend(_braid_suite(tolerance))
        report.extend(_hamiltonian_suite(rng, nrandom, tolerance))
        report.extend(_thermal_suite(tolerance))
        report.extend(_dynamics_suite(nsamples, tolerance))
    df = report.to_frame()
    if out is not None:
        logger.info('Writing %s', out)
        df.to_csv(out, float_format=FLOAT_FORMAT)
    with pd.option_context('display.max_rows', None, 'display.width', 120,
                           'display.max_colwidth', 80):
        print(df.to_string(float_format=lambda x: '%.3e' % x))
    failed = report.failed()
    if failed:
        print('%i of %i checks failed!' % (len(failed), len(report)),
              file=sys.stderr)
        return 1
    print('All %i checks passed.' % len(report))
    return 0


@docstrings.dedent
def fig2(d_min=2., d_max=12., steps=101, tolerance=TOLERANCE, out=None,
         gnuplot=False):
    """
    The concurrence of the qubit and qutrit families versus d

    The concurrences are computed from the entangled states of the families
    and compared to ``2/d`` and ``sqrt(3/d)``.

    Parameters
    ----------
    d_min: float
        The smallest loop parameter (at least 2)
    d_max: float
        The largest loop parameter
    steps: int
        The number of loop parameters
    tolerance: float
        The tolerance for the comparison with the closed forms
    %(cli.output)s"""
    rows = []
    for d in _grid(d_min, d_max, steps):
        c2 = generalized_concurrence(build_state(TwoDim(q_from_loop(d))),
                                     2).value
        if abs(c2 - 2 / d) > tolerance:
            raise ValueError("Qubit concurrence %s differs from 2/d at d=%s"
                             % (c2, d))
        c3 = np.nan
        if d >= 3:
            states = [build_state(ThreeDim(b, q_from_loop(d, 'three-dim')))
                      for b in [1, 2, 3]]
            values = [generalized_concurrence(s, 3).value for s in states]
            if max(abs(c - np.sqrt(3 / d)) for c in values) > tolerance:
                raise ValueError("Qutrit concurrences %s differ from "
                                 "sqrt(3/d) at d=%s" % (values, d))
            c3 = values[0]
        rows.append((d, c2, c3))
    df = pd.DataFrame(rows, columns=['d', 'C_n2', 'C_n3'])
    _write(df, out, gnuplot)
    return 0


@docstrings.dedent
def fig3(d_min=2., d_max=12., steps=101, out=None, gnuplot=False):
    """
    The maximal zero temperature concurrence versus d

    Parameters
    ----------
    d_min: float
        The smallest loop parameter (at least 2)
    d_max: float
        The largest loop parameter
    steps: int
        The number of loop parameters
    %(cli.output)s"""
    grid = _grid(d_min, d_max, steps)
    df = pd.DataFrame({'d': grid, 'C_max': [c_max(d) for d in grid]})
    _write(df, out, gnuplot, ylabel='C_max')
    return 0


@docstrings.dedent
def fig4(d_min=2., d_max=8., steps=121, J=1., g=1., out=None,
         gnuplot=False):
    """
    The critical temperature versus d

    Parameters
    ----------
    d_min: float
        The smallest loop parameter (at least 2)
    d_max: float
        The largest loop parameter
    steps: int
        The number of loop parameters
    J: float
        The field inhomogeneity
    g: float
        The Ising coupling
    %(cli.output)s"""
    df = critical_temperature_curve(_grid(d_min, d_max, steps), J, g)
    _write(df[['d', 'Tc']], out, gnuplot, ylabel='T_c')
    return 0


@docstrings.dedent
def fig5(d=None, d_min=2., d_max=8., steps=61, t_max=4 * np.pi,
         t_steps=257, out=None, gnuplot=False):
    """
    The sudden death concurrence versus time and d

    Parameters
    ----------
    d: list of float
        The loop parameters. If not given, the range from `d_min` to `d_max`
        is used
    d_min: float
        The smallest loop parameter (at least 2)
    d_max: float
        The largest loop parameter
    steps: int
        The number of loop parameters
    t_max: float
        The end of the time range
    t_steps: int
        The number of times
    %(cli.output)s

    Notes
    -----
    The time windows without entanglement are written to
    ``<out>_windows.csv`` (or printed after the data)"""
    if d:
        d_values = np.asarray(d, dtype=float)
        if np.any(~(d_values >= 2)):
            raise ValueError("All loop parameters must be at least 2!")
    else:
        d_values = _grid(d_min, d_max, steps)
    if not t_max > 0 or t_steps < 2:
        raise ValueError("Need t-max > 0 and at least 2 time steps!")
    df = concurrence_series(d_values, np.linspace(0, t_max, t_steps))
    windows = esd_window_table(d_values, t_max)
    _write(df, out, gnuplot, xlabel='t', long_format=True)
    if out is None:
        print()
        _write(windows, None)
    else:
        root, ext = osp.splitext(out)
        _write(windows, root + '_windows' + (ext or '.csv'))
    return 0


def _sweep_value(operation, p):
    def model():
        return ModelParams.from_fields(p['B'], p['J'], p['g'], p['d'],
                                       p['phi'])

    if operation == 'c_max':
        return c_max(p['d'])
    elif operation == 'critical_temperature':
        return critical_temperature(model()).Tc
    elif operation == 'zero_t_limit':
        return zero_t_limit(model()).value
    elif operation == 'thermal_concurrence':
        return thermal_concurrence(model(), p['T']).value
    elif operation == 'esd_closed_form':
        return esd_closed_form(p['d'], p['t'], p['J']).value
    elif operation == 'evolved_concurrence':
        return evolved_concurrence(
            model(), InitialState(p['gamma'], p['alpha']), p['t']).value
    raise ValueError("Unknown operation %r! Use one of %s" % (
        operation, ', '.join(SWEEP_OPERATIONS)))


def sweep(operation, parameter='d', start=2., stop=8., steps=61,
          d=2 * np.sqrt(2), B=0., J=1., g=1., phi=np.pi, T=1., t=0.,
          gamma=0.5, alpha=np.pi / 4, out=None, gnuplot=False):
    """
    Evaluate an operation over a range of one parameter

    Parameters
    ----------
    operation: str
        The operation to evaluate
    parameter: str
        The parameter to sweep
    start: float
        The first value of `parameter`
    stop: float
        The last value of `parameter`
    steps: int
        The number of values
    d: float
        The loop parameter
    B: float
        The mean field
    J: float
        The field inhomogeneity
    g: float
        The Ising coupling
    phi: float
        The coupling phase
    T: float
        The temperature
    t: float
        The time
    gamma: float
        The weight of the pure part of the initial state
    alpha: float
        The angle of the pure part of the initial state
    out: str
        The path of the CSV file. If not given, the data is printed to
        stdout
    gnuplot: bool
        If True, write a gnuplot script ``<out>.gp`` next to the CSV file"""
    if parameter not in SWEEP_PARAMETERS:
        raise ValueError("Unknown parameter %r! Use one of %s" % (
            parameter, ', '.join(SWEEP_PARAMETERS)))
    if steps < 2:
        raise ValueError("steps must be at least 2, not %s!" % steps)
    fixed = dict(d=d, B=B, J=J, g=g, phi=phi, T=T, t=t, gamma=gamma,
                 alpha=alpha)
    values = np.linspace(start, stop, steps)
    rows = []
    for val in values:
        fixed[parameter] = val
        rows.append((val, _sweep_value(operation, fixed)))
    df = pd.DataFrame(rows, columns=[parameter, operation])
    _write(df, out, gnuplot, xlabel=parameter, ylabel=operation)
    return 0


def get_parser(create=True):
    """Create an argument parser for the command line handling

    This function creates a :class:`funcargparse.FuncArgParser` with one
    subparser per command. The argument types are interpreted from the
    docstrings of the commands

    Parameters
    ----------
    create: bool
        If True, the :meth:`funcargparse.FuncArgParser.create_arguments`
        method is called"""
    parser = FuncArgParser(
        prog='tlentangle',
        description='Entanglement of Temperley-Lieb representations')
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='Show informative log messages')
    parser.add_argument('-V', '--version', action='version',
                        version=tlentangle.__version__)
    parser.add_subparsers(title='Commands', dest='command')

    for func in [verify, fig2, fig3, fig4, fig5, sweep]:
        sp = parser.setup_subparser(func, name=func.__name__,
                                    return_parser=True)
        sp.set_defaults(func=func)
        for arg in list(sp.unfinished_arguments):
            sp.update_arg(arg, short=None, long=arg.replace('_', '-'))
        sp.update_arg('out', short='o')
        for arg in ['steps', 'n', 'nrandom', 'nsamples', 'seed']:
            sp.update_arg(arg, type=int)
        sp.update_arg('family', choices=list(FAMILIES))
        sp.update_arg('branch', type=int, choices=[1, 2, 3])
        if func is fig5:
            sp.update_arg('d', type=float, nargs='+', metavar='d')
        elif func is sweep:
            sp.update_arg('operation', positional=True,
                          choices=SWEEP_OPERATIONS)
            sp.update_arg('parameter', short='p', choices=SWEEP_PARAMETERS)
            sp.update_arg('d', type=float)

    if create:
        parser.create_arguments(subparsers=True)
    parser.epilog = docstrings.dedents("""
    tlentangle  Copyright (C) 2026  the tlentangle developers

    This program comes with ABSOLUTELY NO WARRANTY.
    This is free software, and you are welcome to redistribute it
    under the conditions of the GNU GENERAL PUBLIC LICENSE, Version 3.""")
    return parser


def main(args=None):
    """Run the command line interface

    Parameters
    ----------
    args: list of str
        The command line arguments. If None, :data:`sys.argv` is used

    Returns
    -------
    int
        The exit code"""
    parser = get_parser()
    ns = vars(parser.parse_args(args))
    if ns.pop('verbose', False):
        logging.basicConfig(level=logging.INFO)
    func = ns.pop('func', None)
    if func is None:
        parser.print_help()
        return 1
    params = inspect.signature(func).parameters
    kwargs = {key: val for key, val in ns.items() if key in params}
    try:
        return func(**kwargs) or 0
    except ValueError as e:
        print('Error: %s' % e, file=sys.stderr)
        return 1
    except ArithmeticError as e:
        print('Numerical error: %s' % e, file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())
