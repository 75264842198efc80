""" Bosonic baths and the thermal spectral function G(t)

G(t) = 2 sum_k |g_k|^2 / w_k^2 sin^2(w_k t / 2) coth(beta w_k / 2)

Units follow hbar = 1: frequencies and couplings share one unit, time is its
inverse. Zero temperature is beta = numpy.inf.
"""
from dataclasses import dataclass
import logging
import math

import numpy as np

from dephasing.errors import InvalidArgument, InvalidTime

logger = logging.getLogger(__name__)

# below this value of beta*omega/2 coth is evaluated from its Laurent series
COTH_SERIES_LIMIT = 1e-4


def _check_beta(beta):
    beta = float(beta)
    if math.isnan(beta) or beta <= 0:
        raise InvalidArgument(f'Inverse temperature must be positive or inf, got {beta}')
    return beta


@dataclass(frozen=True)
class BathMode:
    """ One bosonic mode: angular frequency omega > 0 and complex coupling g """
    omega: float
    g: complex

    def __post_init__(self):
        if not (np.isfinite(self.omega) and self.omega > 0):
            raise InvalidArgument(f'Mode frequency must be positive and finite, got {self.omega}')
        if not np.isfinite(complex(self.g)):
            raise InvalidArgument(f'Mode coupling must be finite, got {self.g}')


@dataclass(frozen=True)
class Bath:
    """ Independent bosonic modes of one qubit in thermal equilibrium

    Parameters
    ----------
    modes : tuple of BathMode
        Bath modes. An empty bath gives G(t) = 0
    beta : float
        Inverse temperature 1/(k_B T), numpy.inf for zero temperature

    """
    modes: tuple = ()
    beta: float = np.inf

    def __post_init__(self):
        object.__setattr__(self, 'modes', tuple(self.modes))
        object.__setattr__(self, 'beta', _check_beta(self.beta))

    @property
    def omegas(self):
        return np.array([m.omega for m in self.modes], dtype=float)

    @property
    def couplings(self):
        return np.array([m.g for m in self.modes], dtype=complex)

    def with_beta(self, beta):
        """ Same modes at another temperature """
        return Bath(self.modes, beta)


@dataclass(frozen=True)
class OhmicSpec:
    """ Spectral density J(w) = amplitude * w**s * exp(-w / omega_c) """
    amplitude: float
    s: float
    omega_c: float

    def __post_init__(self):
        for name in ['amplitude', 's', 'omega_c']:
            value = getattr(self, name)
            if not (np.isfinite(value) and value > 0):
                raise InvalidArgument(f'Ohmic parameter {name} must be positive and finite, got {value}')

    def density(self, omega):
        omega = np.asarray(omega, dtype=float)
        return self.amplitude * omega**self.s * np.exp(-omega / self.omega_c)


def thermal_coth(beta, omega):
    """ coth(beta * omega / 2), equal to 1 at zero temperature

    Parameters
    ----------
    beta : float
        Inverse temperature, > 0 or inf
    omega : float or numpy.ndarray
        Mode frequencies, > 0

    Returns
    -------
    coth : float or numpy.ndarray
        Thermal occupation factor 2n(omega) + 1

    """
    beta = _check_beta(beta)
    omega_arr = np.asarray(omega, dtype=float)
    if not np.all(np.isfinite(omega_arr)) or np.any(omega_arr <= 0):
        raise InvalidArgument(f'Frequency must be positive and finite, got {omega}')
    if np.isinf(beta):
        result = np.ones_like(omega_arr)
    else:
        x = np.atleast_1d(beta * omega_arr / 2)
        small = x < COTH_SERIES_LIMIT
        result = np.empty_like(x)
        xs = x[small]
        result[small] = 1 / xs + xs / 3 - xs**3 / 45
        result[~small] = 1 / np.tanh(x[~small])
        result = result.reshape(omega_arr.shape)
    if result.ndim == 0:
        return float(result)
    return result


def spectral_function(bath, t):
    """ Decoherence function G(t) of a bath

    Parameters
    ----------
    bath : Bath
        Bath modes and inverse temperature
    t : float or numpy.ndarray
        Time(s), >= 0

    Returns
    -------
    G : float or numpy.ndarray
        Spectral function, same shape as t, G(0) = 0

    """
    t_arr = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(t_arr)) or np.any(t_arr < 0):
        raise InvalidTime(f'Time must be finite and non-negative, got {t}')
    if len(bath.modes) == 0:
        g_t = np.zeros_like(t_arr)
    else:
        omega = bath.omegas
        weight = 2 * np.abs(bath.couplings)**2 / omega**2 * thermal_coth(bath.beta, omega)
        g_t = np.sin(np.multiply.outer(t_arr, omega) / 2)**2 @ weight
    if g_t.ndim == 0:
        return float(g_t)
    return g_t


def spectral_envelope(bath):
    """ Upper bound of G(t) over all t (sin^2 <= 1) """
    if len(bath.modes) == 0:
        return 0.
    omega = bath.omegas
    return float(np.sum(2 * np.abs(bath.couplings)**2 / omega**2 * thermal_coth(bath.beta, omega)))


def suppression_factor(bath, t):
    """ Single-qubit coherence decay q(t) = exp(-4 G(t)) """
    return np.exp(-4 * spectral_function(bath, t))


def discretize_ohmic(spec, n_modes, omega_max):
    """ Sample an ohmic-family spectral density on a uniform midpoint grid

    Parameters
    ----------
    spec : OhmicSpec
        Spectral density J(w)
    n_modes : int
        Number of modes, >= 1
    omega_max : float
        Upper edge of the frequency grid, > 0

    Returns
    -------
    modes : tuple of BathMode
        Modes at w_k = (k + 1/2) dw with real couplings g_k = sqrt(J(w_k) dw)

    """
    if int(n_modes) != n_modes or n_modes < 1:
        raise InvalidArgument(f'Number of modes must be a positive integer, got {n_modes}')
    if not (np.isfinite(omega_max) and omega_max > 0):
        raise InvalidArgument(f'omega_max must be positive and finite, got {omega_max}')
    n_modes = int(n_modes)
    d_omega = omega_max / n_modes
    omega = (np.arange(n_modes) + 0.5) * d_omega
    g = np.sqrt(spec.density(omega) * d_omega)
    logger.debug('Ohmic grid: %d modes, d_omega=%g', n_modes, d_omega)
    return tuple(BathMode(float(w), complex(gk)) for w, gk in zip(omega, g))
