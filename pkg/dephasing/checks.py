""" Numerical checks run by the verify command

Every check returns a CheckResult. Sampled checks draw from their own
Generator; `scale` multiplies the declared tolerance.
"""
from dataclasses import dataclass
import math

import numpy as np

from dephasing.bath import Bath, BathMode, OhmicSpec, discretize_ohmic, spectral_envelope, spectral_function
from dephasing.entanglement import (
    ScanPoint,
    analytic_concurrence,
    analytic_mu,
    concurrence,
    verify_upper_bound,
)
from dephasing.evolution import (
    DensityMatrix,
    bell_family_state,
    coherence,
    dephasing_factors,
    evolve,
    evolved_bell_family,
    factor_exponents,
    max_offdiagonal_gain,
    product_state,
    reduced_state,
    QubitParams,
)
from dephasing.linalg import adjoint, hermitian_eigen, hermiticity_error, max_abs, psd_sqrt
from dephasing.utils import (
    random_alpha,
    random_density_matrix,
    random_factors,
    random_hermitian,
    random_psd,
    random_qubit_state,
    random_unitary,
)

EIGEN_RECONSTRUCTION_TOL = 1e-11
EIGEN_UNITARITY_TOL = 1e-12
EIGEN_INVARIANTS_TOL = 1e-10
PSD_SQRT_TOL = 1e-10
SPECTRAL_TOL = 1e-12
TRACE_TOL = 1e-14
HERMITIAN_TOL = 1e-13
POSITIVE_TOL = 1e-10
COMPOSITION_TOL = 1e-13
DECOHERENCE_TOL = 1e-14
AGREEMENT_TOL = 1e-10
PRODUCT_LAW_TOL = 1e-12
FIG1_TOL = 1e-12
UPPER_BOUND_TOL = 1e-12

# Dephasing factor of every element of the evolved two-qubit state, row by row
DEPHASING_TABLE = (
    ('1', 'p2* q2', 'p1* q1', 'p1* q1 p2* q2'),
    ('p2 q2', '1', 'p1* q1 p2 q2', 'p1* q1'),
    ('p1 q1', 'p1 q1 p2* q2', '1', 'p2* q2'),
    ('p1 q1 p2 q2', 'p1 q1', 'p2 q2', '1'),
)

FIG1_XI_VALUES = (0., 0.25, 0.5, 0.75, 1.)

# (alpha, bath of qubit 1, bath of qubit 2) for the product-law time series
PRODUCT_LAW_CASES = (
    (1.0, OhmicSpec(0.5, 1., 5.), OhmicSpec(0.5, 1., 5.), math.inf),
    (0.3 + 0.4j, OhmicSpec(0.2, 0.5, 2.), OhmicSpec(1.0, 1., 10.), 5.),
    (-2.5j, OhmicSpec(0.8, 3., 1.), OhmicSpec(0.1, 1., 4.), 0.5),
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self):
        return f"CHECK {self.name}: {'PASS' if self.passed else 'FAIL'} ({self.detail})"


def parse_factor(symbol):
    """ Exponent tuple (p1, q1, p2, q2) of a factor written like 'p1* q1 p2 q2' """
    exponents = {'p1': 0, 'q1': 0, 'p2': 0, 'q2': 0}
    for token in symbol.split():
        if token == '1':
            continue
        if token.endswith('*'):
            exponents[token[:-1]] = -1
        else:
            exponents[token] = 1
    return exponents['p1'], exponents['q1'], exponents['p2'], exponents['q2']


def check_eigen_reconstruction(rng, n, scale=1.):
    recon, unitarity = 0., 0.
    for _ in range(n):
        h = random_hermitian(rng)
        eig = hermitian_eigen(h)
        v = eig.eigenvectors
        recon = max(recon, max_abs(eig.reconstruct() - h))
        unitarity = max(unitarity, max_abs(adjoint(v) @ v - np.eye(4)))
    passed = recon <= EIGEN_RECONSTRUCTION_TOL * scale and unitarity <= EIGEN_UNITARITY_TOL * scale
    return CheckResult('eigen_reconstruction', passed,
                       f'n={n}, max reconstruction {recon:.2e}, max unitarity {unitarity:.2e}')


def check_eigen_trace_det(rng, n, scale=1.):
    error = 0.
    for _ in range(n):
        h = random_hermitian(rng)
        w = hermitian_eigen(h).eigenvalues
        error = max(error, abs(w.sum() - np.trace(h).real), abs(np.prod(w) - np.linalg.det(h).real))
    return CheckResult('eigen_trace_det', error <= EIGEN_INVARIANTS_TOL * scale,
                       f'n={n}, max error {error:.2e}')


def check_psd_sqrt_reconstruction(rng, n, scale=1.):
    error = 0.
    for _ in range(n):
        m = random_psd(rng)
        s = psd_sqrt(m)
        error = max(error, max_abs(s @ s - m))
    return CheckResult('psd_sqrt_reconstruction', error <= PSD_SQRT_TOL * scale,
                       f'n={n}, max error {error:.2e}')


def check_psd_sqrt_unitary_covariance(rng, n, scale=1.):
    error = 0.
    for _ in range(n):
        m = random_psd(rng)
        u = random_unitary(rng)
        rotated = u @ m @ adjoint(u)
        rotated = (rotated + adjoint(rotated)) / 2
        error = max(error, max_abs(psd_sqrt(rotated) - u @ psd_sqrt(m) @ adjoint(u)))
    return CheckResult('psd_sqrt_unitary_covariance', error <= PSD_SQRT_TOL * scale,
                       f'n={n}, max error {error:.2e}')


def check_spectral_function_single_mode(scale=1.):
    bath = Bath([BathMode(2., 1.)], np.inf)
    t = np.linspace(0, 10, 1000)
    error = float(np.max(np.abs(spectral_function(bath, t) - 0.5 * np.sin(t)**2)))
    return CheckResult('spectral_function_single_mode', error <= SPECTRAL_TOL * scale,
                       f'max |G - sin^2(t)/2| = {error:.2e}')


def check_spectral_function_temperature(rng, n, scale=1.):
    betas = [np.inf, 10., 1., 0.1, 0.01]
    decrease, excess = 0., 0.
    for _ in range(n):
        n_modes = rng.integers(1, 6)
        modes = [BathMode(rng.uniform(0.1, 5.), complex(*rng.uniform(-1, 1, 2))) for _ in range(n_modes)]
        t = rng.uniform(0, 10)
        values = [spectral_function(Bath(modes, beta), t) for beta in betas]
        decrease = max(decrease, max(a - b for a, b in zip(values[:-1], values[1:])))
        envelope = spectral_envelope(Bath(modes, betas[-1]))
        excess = max(excess, (values[-1] - envelope) / max(1., envelope))
    passed = decrease <= SPECTRAL_TOL * scale and excess <= SPECTRAL_TOL * scale
    return CheckResult('spectral_function_temperature', passed,
                       f'n={n}, max decrease with temperature {decrease:.2e}, max excess over envelope {excess:.2e}')


def check_dephasing_table():
    mismatches = []
    for row in range(4):
        for col in range(4):
            if factor_exponents(row, col) != parse_factor(DEPHASING_TABLE[row][col]):
                mismatches.append((row, col))
    detail = 'all 16 entries match' if not mismatches else f'mismatch at {mismatches}'
    return CheckResult('dephasing_table', not mismatches, detail)


def check_channel_invariants(rng, n, scale=1.):
    trace, herm, lowest, gain, diagonal_ok = 0., 0., math.inf, 0., True
    for _ in range(n):
        rho0 = random_density_matrix(rng)
        rho = evolve(rho0, random_factors(rng))
        trace = max(trace, abs(np.trace(rho.m) - np.trace(rho0.m)))
        herm = max(herm, hermiticity_error(rho.m))
        lowest = min(lowest, rho.eigenvalues()[0])
        gain = max(gain, max_offdiagonal_gain(rho0, rho) - 1e-15 * max_abs(rho0.m))
        diagonal_ok = diagonal_ok and np.array_equal(np.diag(rho.m), np.diag(rho0.m))
    passed = (trace <= TRACE_TOL * scale and herm <= HERMITIAN_TOL * scale and
              lowest >= -POSITIVE_TOL * scale and gain <= 0 and diagonal_ok)
    return CheckResult('channel_invariants', passed,
                       f'n={n}, trace {trace:.2e}, hermiticity {herm:.2e}, min eigenvalue {lowest:.2e}, '
                       f'off-diagonal gain {gain:.2e}, diagonal unchanged {diagonal_ok}')


def check_channel_composition(rng, n, scale=1.):
    error = 0.
    for _ in range(n):
        rho0 = random_density_matrix(rng)
        f, g = random_factors(rng), random_factors(rng)
        error = max(error, max_abs(evolve(evolve(rho0, f), g).m - evolve(rho0, f * g).m))
    return CheckResult('channel_composition', error <= COMPOSITION_TOL * scale,
                       f'n={n}, max error {error:.2e}')


def check_single_qubit_decoherence(rng, n, scale=1.):
    error = 0.
    for _ in range(n):
        rho0 = product_state(random_qubit_state(rng), random_qubit_state(rng))
        f = random_factors(rng)
        rho = evolve(rho0, f)
        for qubit, q in [(1, f.q1), (2, f.q2)]:
            expected = q * coherence(reduced_state(rho0, qubit))
            error = max(error, abs(coherence(reduced_state(rho, qubit)) - expected))
        error = max(error, abs(abs(rho.m[0, 3]) - f.q1 * f.q2 * abs(rho0.m[0, 3])))
    return CheckResult('single_qubit_decoherence', error <= DECOHERENCE_TOL * scale,
                       f'n={n}, max error {error:.2e}')


def check_bell_concurrence(scale=1.):
    bell = concurrence(bell_family_state(1.)).c
    up_up = np.zeros((4, 4))
    up_up[0, 0] = 1
    product = concurrence(DensityMatrix(up_up)).c
    error = max(abs(bell - 1), abs(product))
    return CheckResult('bell_concurrence', error <= AGREEMENT_TOL * scale,
                       f'C(Bell) = {bell:.17g}, C(up-up) = {product:.17g}')


def check_analytic_agreement(rng, n, scale=1.):
    """ General path against the closed form on identical qubits (eta = 0) """
    error = 0.
    for _ in range(n):
        alpha = random_alpha(rng)
        f = random_factors(rng, common_phase=True)
        general = concurrence(evolved_bell_family(alpha, f)).c
        analytic = analytic_concurrence(ScanPoint(f.q1 * f.q2, 0., alpha))
        error = max(error, abs(general - analytic))
    return CheckResult('analytic_agreement', error <= AGREEMENT_TOL * scale,
                       f'n={n}, max |C_general - C_analytic| = {error:.2e}')


def product_law_error(alpha, params1, params2, times):
    """ Largest deviation of the concurrence from (2|alpha|/(1+|alpha|^2)) q1 q2 on a time grid """
    c0 = 2 * abs(alpha) / (1 + abs(alpha)**2)
    error = 0.
    for t in times:
        f = dephasing_factors(params1, params2, t)
        c = concurrence(evolved_bell_family(alpha, f)).c
        error = max(error, abs(c - c0 * f.q1 * f.q2))
    return error


def check_product_law(scale=1.):
    times = np.linspace(0, 20, 200)
    error = 0.
    for alpha, spec1, spec2, beta in PRODUCT_LAW_CASES:
        params1 = QubitParams(0.7, Bath(discretize_ohmic(spec1, 100, 30.), beta))
        params2 = QubitParams(0.7, Bath(discretize_ohmic(spec2, 100, 30.), beta))
        error = max(error, product_law_error(alpha, params1, params2, times))
    return CheckResult('product_law', error <= PRODUCT_LAW_TOL * scale,
                       f'{len(PRODUCT_LAW_CASES)} configurations x {len(times)} times, max error {error:.2e}')


def check_detuned_concurrence(rng, n, scale=1.):
    """ Detuned qubits: exact concurrence stays at C_(eta=0), the closed form gives |cos eta| C_(eta=0) """
    exact, closed = 0., 0.
    for _ in range(n):
        alpha = random_alpha(rng)
        f = random_factors(rng)
        eta = float(np.angle(np.conj(f.p1) * f.p2))
        c0 = analytic_concurrence(ScanPoint(f.q1 * f.q2, 0., alpha))
        exact = max(exact, abs(concurrence(evolved_bell_family(alpha, f)).c - c0))
        closed = max(closed, abs(analytic_concurrence(ScanPoint(f.q1 * f.q2, eta, alpha)) - abs(math.cos(eta)) * c0))
    passed = exact <= AGREEMENT_TOL * scale and closed <= PRODUCT_LAW_TOL * scale
    return CheckResult('detuned_concurrence', passed,
                       f'n={n}, max |C_general - C_eta0| = {exact:.2e}, '
                       f'max |C_analytic - |cos eta| C_eta0| = {closed:.2e}')


def check_fig1_structure(scale=1.):
    error = 0.
    for xi in FIG1_XI_VALUES:
        mu1, mu2 = analytic_mu(ScanPoint(xi, 0.), suppress_prefactor=True)
        error = max(error, abs(mu1 - (1 + xi)**2), abs(mu2 - (1 - xi)**2))
    mu1, mu2 = analytic_mu(ScanPoint(1., math.pi / 2), suppress_prefactor=True)
    error = max(error, abs(mu1 - mu2))
    return CheckResult('fig1_structure', error <= FIG1_TOL * scale,
                       f'max error at eta = 0 and eta = pi/2 {error:.2e}')


def check_upper_bound(seed, samples, cores=1, scale=1.):
    report = verify_upper_bound(samples, seed, cores=cores)
    p = report.worst_point
    return CheckResult('upper_bound', report.max_violation <= UPPER_BOUND_TOL * scale,
                       f'samples={samples}, max C_eta - C_eta0 = {report.max_violation:.2e} '
                       f'at xi={p.xi:.6f}, eta={p.eta:.6f}, |alpha|={abs(p.alpha):.6f}')
