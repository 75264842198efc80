""" High level runners behind the dephasing_run.py commands """
import csv
from functools import partial
import logging
from multiprocessing import Pool
import sys

import numpy as np

from dephasing import checks
from dephasing.bath import spectral_function
from dephasing.entanglement import (
    ScanPoint,
    analytic_concurrence,
    analytic_mu,
    concurrence,
    scan_point_from_factors,
)
from dephasing.errors import DephasingError
from dephasing.evolution import evolved_bell_family, factors_from_decoherence

logger = logging.getLogger(__name__)

SIMULATE_COLUMNS = [
    't', 'G1', 'G2', 'q1', 'q2', 're_p1', 'im_p1', 're_p2', 'im_p2',
    'mu1', 'mu2', 'concurrence_general', 'concurrence_analytic',
]
FIG1_COLUMNS = ['xi', 'eta', 'mu1', 'mu2']
# property suites never draw more than this, the upper bound scan uses all samples
MAX_PROPERTY_SAMPLES = 1000


def format_value(x):
    """ 17 significant digits: exact round trip of a double """
    return f'{x:.17g}'


def write_csv(stream, columns, rows):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(x) for x in row])


def simulate_row(params1, params2, alpha, t):
    """ One time step of the alpha family: decoherence, factors and both concurrences

    Parameters
    ----------
    params1, params2 : QubitParams
        Splitting and bath of each qubit
    alpha : complex
        Initial state parameter
    t : float
        Time

    Returns
    -------
    row : tuple
        Values in the order of SIMULATE_COLUMNS

    """
    try:
        g1 = spectral_function(params1.bath, t)
        g2 = spectral_function(params2.bath, t)
        f = factors_from_decoherence(params1.a, params2.a, g1, g2, t)
        c_general = concurrence(evolved_bell_family(alpha, f)).c
        point = scan_point_from_factors(alpha, f)
        mu1, mu2 = analytic_mu(point)
        c_analytic = analytic_concurrence(point)
    except DephasingError as e:
        raise type(e)(f'{e} (at t={t!r})') from e
    return (t, g1, g2, f.q1, f.q2, f.p1.real, f.p1.imag, f.p2.real, f.p2.imag,
            mu1, mu2, c_general, c_analytic)


def run_simulate(config, stream=None, cores=1):
    """ Time series of the evolved alpha family written as CSV

    Parameters
    ----------
    config : SimConfig
        Qubits, baths, alpha and time grid
    stream : file object
        Output text stream (standard output by default)
    cores : int
        Number of processes for the time steps. Row order does not depend on it

    Returns
    -------
    rows : list of tuple
        Rows written, without the header

    """
    stream = sys.stdout if stream is None else stream
    params1, params2 = config.qubit1.to_params(), config.qubit2.to_params()
    if params1.a != params2.a:
        logger.warning('Qubits are detuned (a1=%g, a2=%g): concurrence_analytic follows the closed '
                       'form with eta = 2(a2 - a1)t and is not expected to match concurrence_general',
                       params1.a, params2.a)
    times = [float(t) for t in config.times()]
    row_func = partial(simulate_row, params1, params2, config.alpha)
    logger.info('Simulating %d time steps up to t=%g', len(times), config.t_max)
    if cores > 1:
        with Pool(cores) as pool:
            rows = pool.map(row_func, times)
    else:
        rows = [row_func(t) for t in times]
    write_csv(stream, SIMULATE_COLUMNS, rows)
    return rows


def run_fig1(config, stream=None):
    """ Closed-form eigenvalues mu1, mu2 on the (xi, eta) grid of a Fig1Config, as CSV """
    stream = sys.stdout if stream is None else stream
    rows = []
    for xi in config.xi_values:
        for eta in config.etas():
            point = ScanPoint(xi, float(eta), config.alpha)
            mu1, mu2 = analytic_mu(point, suppress_prefactor=config.suppress_prefactor)
            rows.append((xi, float(eta), mu1, mu2))
    write_csv(stream, FIG1_COLUMNS, rows)
    return rows


def verification_suite(seed, samples, cores=1, tolerance_scale=1.):
    """ Ordered (name, callable) pairs of all verification checks """
    n = min(samples, MAX_PROPERTY_SAMPLES)
    rngs = iter(np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(16))
    s = tolerance_scale
    return [
        ('eigen_reconstruction', partial(checks.check_eigen_reconstruction, next(rngs), n, s)),
        ('eigen_trace_det', partial(checks.check_eigen_trace_det, next(rngs), n, s)),
        ('psd_sqrt_reconstruction', partial(checks.check_psd_sqrt_reconstruction, next(rngs), n, s)),
        ('psd_sqrt_unitary_covariance', partial(checks.check_psd_sqrt_unitary_covariance, next(rngs), n, s)),
        ('spectral_function_single_mode', partial(checks.check_spectral_function_single_mode, s)),
        ('spectral_function_temperature', partial(checks.check_spectral_function_temperature, next(rngs), n, s)),
        ('dephasing_table', checks.check_dephasing_table),
        ('channel_invariants', partial(checks.check_channel_invariants, next(rngs), n, s)),
        ('channel_composition', partial(checks.check_channel_composition, next(rngs), n, s)),
        ('single_qubit_decoherence', partial(checks.check_single_qubit_decoherence, next(rngs), n, s)),
        ('bell_concurrence', partial(checks.check_bell_concurrence, s)),
        ('analytic_agreement', partial(checks.check_analytic_agreement, next(rngs), n, s)),
        ('product_law', partial(checks.check_product_law, s)),
        ('detuned_concurrence', partial(checks.check_detuned_concurrence, next(rngs), n, s)),
        ('fig1_structure', partial(checks.check_fig1_structure, s)),
        ('upper_bound', partial(checks.check_upper_bound, seed, samples, cores, s)),
    ]


def run_verify(seed=0, samples=10000, cores=1, tolerance_scale=1., stream=None):
    """ Run every verification check and write one report line per check

    Parameters
    ----------
    seed : int
        Seed of all sampled checks
    samples : int
        Draws of the upper bound scan; property suites use min(samples, 1000)
    cores : int
        Processes for the upper bound scan
    tolerance_scale : float
        Multiplier of every declared tolerance (0 forces tolerance checks to fail)
    stream : file object
        Report destination (standard output by default)

    Returns
    -------
    results : list of CheckResult
        In execution order

    """
    stream = sys.stdout if stream is None else stream
    results = []
    for name, check in verification_suite(seed, samples, cores, tolerance_scale):
        try:
            result = check()
        except DephasingError as e:
            logger.error('%s raised %s: %s', name, type(e).__name__, e)
            result = checks.CheckResult(name, False, f'{type(e).__name__}: {e}')
        logger.info('%s: %s', name, 'pass' if result.passed else 'FAIL')
        stream.write(result.line() + '\n')
        results.append(result)
    failed = [r.name for r in results if not r.passed]
    if failed:
        stream.write(f'FIRST FAILURE: {failed[0]}\n')
    else:
        stream.write(f'ALL {len(results)} CHECKS PASSED\n')
    return results
