""" Two-qubit concurrence: general construction and the closed form of the alpha family """
from dataclasses import dataclass
import logging
import math
from multiprocessing import Pool

import numpy as np
from scipy.special import xlogy

from dephasing.errors import InvalidArgument
from dephasing.evolution import as_density_matrix
from dephasing.linalg import clamp_eigenvalues, hermitian_eigen, psd_sqrt
from dephasing.utils import chunk_generators, chunk_sizes, random_alpha

logger = logging.getLogger(__name__)

SIGMA_Y = np.array([[0, -1j], [1j, 0]])
SIGMA_YY = np.kron(SIGMA_Y, SIGMA_Y)
UPPER_BOUND_CHUNK = 1000


@dataclass(frozen=True)
class ConcurrenceResult:
    """ lambdas: square roots of the eigenvalues of sqrt(rho) rho~ sqrt(rho), descending """
    lambdas: np.ndarray
    c: float


@dataclass(frozen=True)
class ScanPoint:
    """ Combined decay xi = q1 q2, detuning phase eta = 2 (A2 - A1) t, and alpha """
    xi: float
    eta: float
    alpha: complex = 1 + 0j

    def __post_init__(self):
        if not (np.isfinite(self.xi) and 0 <= self.xi <= 1):
            raise InvalidArgument(f'xi must lie in [0, 1], got {self.xi}')
        if not np.isfinite(self.eta):
            raise InvalidArgument(f'eta must be finite, got {self.eta}')
        if not np.isfinite(complex(self.alpha)):
            raise InvalidArgument(f'alpha must be finite, got {self.alpha}')
        object.__setattr__(self, 'alpha', complex(self.alpha))

    @property
    def prefactor(self):
        """ |alpha|^2 / (1 + |alpha|^2)^2 """
        return abs(self.alpha)**2 / (1 + abs(self.alpha)**2)**2


@dataclass(frozen=True)
class UpperBoundReport:
    samples: int
    seed: int
    max_violation: float
    worst_point: ScanPoint


def spin_flip(rho):
    """ (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y) """
    m = as_density_matrix(rho).m
    return SIGMA_YY @ m.conj() @ SIGMA_YY


def concurrence(rho):
    """ Wootters concurrence of a two-qubit state

    Parameters
    ----------
    rho : DensityMatrix or array_like
        Two-qubit state

    Returns
    -------
    result : ConcurrenceResult
        lambdas sorted descending and c = max(0, l1 - l2 - l3 - l4)

    """
    rho = as_density_matrix(rho)
    root = psd_sqrt(rho.m)
    mu = clamp_eigenvalues(hermitian_eigen(root @ spin_flip(rho) @ root).eigenvalues)
    lambdas = np.sqrt(mu)[::-1]
    c = lambdas[0] - lambdas[1:].sum()
    return ConcurrenceResult(lambdas=lambdas, c=float(min(max(c, 0.), 1.)))


def entanglement_of_formation(c):
    """ Entanglement of formation (bits) of a two-qubit state with concurrence c """
    if not 0 <= c <= 1:
        raise InvalidArgument(f'Concurrence must lie in [0, 1], got {c}')
    x = (1 + math.sqrt(1 - c * c)) / 2
    return float(-(xlogy(x, x) + xlogy(1 - x, 1 - x)) / math.log(2))


def scan_point_from_factors(alpha, f):
    """ (xi, eta) seen by the alpha family under factors f """
    return ScanPoint(xi=f.q1 * f.q2, eta=float(np.angle(np.conj(f.p1) * f.p2)), alpha=alpha)


def _suppressed_mu(xi, eta):
    # 1 + xi^2 cos 2eta and 1 - xi^2 sin^2 eta written as sums of non-negative terms
    one_minus = (1 - xi) * (1 + xi)
    cos2 = math.cos(eta)**2
    base = one_minus + 2 * xi**2 * cos2
    cross = abs(2 * xi * math.cos(eta)) * math.sqrt(cos2 + one_minus * math.sin(eta)**2)
    mu1 = base + cross
    # mu1 * mu2 = (1 - xi^2)^2
    mu2 = min(one_minus**2 / mu1, mu1) if mu1 > 0 else 0.
    return mu1, mu2, cross


def analytic_mu(point, suppress_prefactor=False):
    """ Closed-form nonzero eigenvalues mu1 >= mu2 of rho rho~ for the alpha family

    mu = |alpha|^2/(1+|alpha|^2)^2 (1 + xi^2 cos 2eta +- 2 xi cos eta sqrt(1 - xi^2 sin^2 eta))
    """
    mu1, mu2, _ = _suppressed_mu(point.xi, point.eta)
    if suppress_prefactor:
        return mu1, mu2
    return point.prefactor * mu1, point.prefactor * mu2


def analytic_lambdas(point):
    """ (sqrt(mu1), sqrt(mu2), 0, 0) """
    mu1, mu2 = analytic_mu(point)
    return np.array([math.sqrt(mu1), math.sqrt(mu2), 0., 0.])


def analytic_concurrence(point):
    """ |sqrt(mu1) - sqrt(mu2)| from the closed-form eigenvalues """
    mu1, mu2, cross = _suppressed_mu(point.xi, point.eta)
    denominator = math.sqrt(mu1) + math.sqrt(mu2)
    if denominator == 0:
        return 0.
    # mu1 - mu2 = 2 cross
    return math.sqrt(point.prefactor) * 2 * cross / denominator


def sample_scan_points(rng, n):
    """ alpha log-uniform in modulus, xi uniform in [0, 1], eta uniform in [0, 2 pi) """
    points = []
    for _ in range(n):
        alpha = random_alpha(rng)
        xi, eta = rng.uniform(0, 1), rng.uniform(0, 2 * math.pi)
        points.append(ScanPoint(xi=xi, eta=eta, alpha=alpha))
    return points


def _upper_bound_chunk(rng, n):
    worst_violation, worst_point = -math.inf, None
    for point in sample_scan_points(rng, n):
        reference = analytic_concurrence(ScanPoint(point.xi, 0., point.alpha))
        violation = analytic_concurrence(point) - reference
        if violation > worst_violation:
            worst_violation, worst_point = violation, point
    return worst_violation, worst_point


def _run_chunk(args):
    return _upper_bound_chunk(*args)


def verify_upper_bound(samples, seed, cores=1):
    """ Seeded scan of C_eta - C_(eta=0) over random (alpha, xi, eta)

    Parameters
    ----------
    samples : int
        Number of random points, >= 1
    seed : int
        Seed of the scan
    cores : int
        Number of worker processes. The result does not depend on it

    Returns
    -------
    report : UpperBoundReport
        Largest violation and the point where it occurs

    """
    if samples < 1:
        raise InvalidArgument(f'samples must be >= 1, got {samples}')
    sizes = chunk_sizes(samples, UPPER_BOUND_CHUNK)
    tasks = list(zip(chunk_generators(seed, len(sizes)), sizes))
    if cores > 1:
        with Pool(cores) as pool:
            results = pool.map(_run_chunk, tasks)
    else:
        results = list(map(_run_chunk, tasks))
    violation, point = max(results, key=lambda r: r[0])
    logger.info('Upper bound scan: %d samples, max violation %.3e', samples, violation)
    return UpperBoundReport(samples=samples, seed=seed, max_violation=violation, worst_point=point)
