""" Exact pure-dephasing evolution of two independent qubits

Basis order is up-up, up-down, down-up, down-down; spin value gamma = +1
for up and -1 for down. Element (row, col) of the two-qubit density matrix
is multiplied by

    exp[i A1 (g2_1 - g1_1) t + i A2 (g2_2 - g1_2) t] T(g1_1, g2_1) T(g1_2, g2_2)

with T(g1, g2) = exp[-G(t) (g1 - g2)^2], where g1_r / g2_r are the spins of
qubit r in the row / column state. With p_r = exp(2i A_r t) and
q_r = exp(-4 G_r(t)) every factor is a product of p_r, conj(p_r) and q_r.
"""
from dataclasses import dataclass
import math

import numpy as np

from dephasing.bath import Bath, spectral_function
from dephasing.errors import InvalidArgument, InvalidState
from dephasing.linalg import adjoint, as_matrix, hermiticity_error, hermitian_eigen

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
POSITIVE_TOL = 1e-10
PHASE_TOL = 1e-12


def spins(index):
    """ (gamma_1, gamma_2) of a basis index 0..3 """
    return 1 - 2 * (index // 2), 1 - 2 * (index % 2)


def factor_exponents(row, col):
    """ Exponents (p1, q1, p2, q2) of the dephasing factor of one matrix element

    A p exponent of -1 stands for the complex conjugate of p.
    """
    exponents = []
    for g1, g2 in zip(spins(row), spins(col)):
        exponents.append((g2 - g1) // 2)
        exponents.append((g1 - g2)**2 // 4)
    return tuple(exponents)


_EXPONENTS = np.array([[factor_exponents(row, col) for col in range(4)] for row in range(4)])


@dataclass(frozen=True)
class QubitParams:
    """ Splitting coefficient a of H_S = a sigma_z and the qubit's own bath """
    a: float
    bath: Bath

    def __post_init__(self):
        if not np.isfinite(self.a):
            raise InvalidArgument(f'Qubit splitting must be finite, got {self.a}')


@dataclass(frozen=True)
class DephasingFactors:
    """ Phases p_r = exp(2i A_r t) and decay factors q_r = exp(-4 G_r(t))

    q_r = 0 is admitted as the underflow limit of a very large G_r.
    """
    p1: complex
    p2: complex
    q1: float
    q2: float

    def __post_init__(self):
        for name in ['p1', 'p2']:
            value = complex(getattr(self, name))
            if not np.isfinite(value) or abs(abs(value) - 1) > PHASE_TOL:
                raise InvalidArgument(f'{name} must have unit modulus, got {value}')
            object.__setattr__(self, name, value)
        for name in ['q1', 'q2']:
            value = float(getattr(self, name))
            if not 0 <= value <= 1:
                raise InvalidArgument(f'{name} must lie in [0, 1], got {value}')
            object.__setattr__(self, name, value)

    @classmethod
    def identity(cls):
        return cls(1 + 0j, 1 + 0j, 1., 1.)

    def __mul__(self, other):
        """ Factors of two consecutive evolutions """
        return DephasingFactors(self.p1 * other.p1, self.p2 * other.p2,
                                self.q1 * other.q1, self.q2 * other.q2)

    def matrix(self):
        """ 4x4 array of the multiplicative factors of every element """
        def phase(p, exponent):
            return np.where(exponent == 1, p, np.where(exponent == -1, np.conj(p), 1))
        e = _EXPONENTS
        return (phase(self.p1, e[..., 0]) * self.q1**e[..., 1] *
                phase(self.p2, e[..., 2]) * self.q2**e[..., 3])


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """ Validated two-qubit density matrix

    Hermitian within 1e-12, unit trace within 1e-12 and no eigenvalue below
    -1e-10. The wrapped array is read-only.
    """
    m: np.ndarray

    def __post_init__(self):
        try:
            m = as_matrix(self.m)
        except InvalidArgument as e:
            raise InvalidState(str(e)) from e
        deviation = hermiticity_error(m)
        if deviation > HERMITIAN_TOL:
            raise InvalidState(f'Density matrix is not Hermitian: max |rho - rho^H| = {deviation:.3e}')
        trace = np.trace(m)
        if abs(trace - 1) > TRACE_TOL:
            raise InvalidState(f'Density matrix trace is {trace}, not 1')
        lowest = hermitian_eigen(m).eigenvalues[0]
        if lowest < -POSITIVE_TOL:
            raise InvalidState(f'Density matrix has negative eigenvalue {lowest:.3e}')
        m.setflags(write=False)
        object.__setattr__(self, 'm', m)

    def __array__(self, dtype=None, copy=None):
        return np.array(self.m, dtype=dtype)

    def eigenvalues(self):
        return hermitian_eigen(self.m).eigenvalues

    def purity(self):
        """ tr(rho^2) """
        return float(np.trace(self.m @ self.m).real)


def as_density_matrix(rho):
    if isinstance(rho, DensityMatrix):
        return rho
    return DensityMatrix(rho)


def factors_from_decoherence(a1, a2, g1, g2, t):
    """ DephasingFactors from splittings and already evaluated G_1(t), G_2(t) """
    return DephasingFactors(
        p1=np.exp(2j * a1 * t),
        p2=np.exp(2j * a2 * t),
        q1=math.exp(-4 * g1),
        q2=math.exp(-4 * g2),
    )


def dephasing_factors(params1, params2, t):
    """ Dephasing factors of both qubits at time t

    Parameters
    ----------
    params1, params2 : QubitParams
        Splitting and bath of qubit 1 and qubit 2
    t : float
        Time, >= 0

    Returns
    -------
    f : DephasingFactors
        p_r = exp(2i A_r t), q_r = exp(-4 G_r(t))

    """
    g1 = spectral_function(params1.bath, t)
    g2 = spectral_function(params2.bath, t)
    return factors_from_decoherence(params1.a, params2.a, g1, g2, t)


def evolve(rho0, f):
    """ Apply the exact dephasing map to a two-qubit density matrix

    Off-diagonal elements are multiplied by their factor from the general
    (gamma_1, gamma_2) rule, the diagonal is copied unchanged.

    Parameters
    ----------
    rho0 : DensityMatrix or array_like
        Initial state
    f : DephasingFactors
        Factors at the target time

    Returns
    -------
    rho : DensityMatrix
        Evolved state

    """
    m0 = as_density_matrix(rho0).m
    m = m0 * f.matrix()
    np.fill_diagonal(m, np.diag(m0))
    return DensityMatrix(m)


def bell_family_state(alpha):
    """ |psi><psi| with |psi> = (|up,down> + alpha |down,up>) / sqrt(1 + |alpha|^2) """
    alpha = complex(alpha)
    if not np.isfinite(alpha):
        raise InvalidArgument(f'alpha must be finite, got {alpha}')
    psi = np.array([0, 1, alpha, 0], dtype=np.complex128) / math.sqrt(1 + abs(alpha)**2)
    return DensityMatrix(np.outer(psi, psi.conj()))


def evolved_bell_family(alpha, f):
    """ Closed-form evolved state of the alpha family

    Diagonal (0, 1, |alpha|^2, 0) / (1 + |alpha|^2) and coherence
    conj(p1) q1 p2 q2 conj(alpha) / (1 + |alpha|^2) at (up-down, down-up).
    """
    alpha = complex(alpha)
    if not np.isfinite(alpha):
        raise InvalidArgument(f'alpha must be finite, got {alpha}')
    norm = 1 + abs(alpha)**2
    coherence = np.conj(f.p1) * f.q1 * f.p2 * f.q2 * np.conj(alpha) / norm
    m = np.zeros((4, 4), dtype=np.complex128)
    m[1, 1] = 1 / norm
    m[2, 2] = abs(alpha)**2 / norm
    m[1, 2] = coherence
    m[2, 1] = np.conj(coherence)
    return DensityMatrix(m)


def _check_qubit_state(rho, name):
    try:
        m = as_matrix(rho, dim=2)
    except InvalidArgument as e:
        raise InvalidState(f'{name}: {e}') from e
    if hermiticity_error(m) > HERMITIAN_TOL:
        raise InvalidState(f'{name} is not Hermitian')
    if abs(np.trace(m) - 1) > TRACE_TOL:
        raise InvalidState(f'{name} trace is {np.trace(m)}, not 1')
    if np.linalg.eigvalsh((m + adjoint(m)) / 2)[0] < -POSITIVE_TOL:
        raise InvalidState(f'{name} is not positive semidefinite')
    return m


def product_state(rho1, rho2):
    """ Uncorrelated two-qubit state rho1 (x) rho2 from single-qubit density matrices """
    m1 = _check_qubit_state(rho1, 'rho1')
    m2 = _check_qubit_state(rho2, 'rho2')
    return DensityMatrix(np.kron(m1, m2))


def reduced_state(rho, qubit):
    """ Single-qubit density matrix of qubit 1 or 2 (partial trace over the other) """
    m = as_density_matrix(rho).m.reshape(2, 2, 2, 2)
    if qubit == 1:
        return np.einsum('ijkj->ik', m)
    if qubit == 2:
        return np.einsum('ijil->jl', m)
    raise InvalidArgument(f'qubit must be 1 or 2, got {qubit}')


def coherence(rho_1q):
    """ |<up|rho|down>| of a single-qubit density matrix """
    return float(abs(as_matrix(rho_1q, dim=2)[0, 1]))


def max_offdiagonal_gain(rho0, rho):
    """ Largest |rho_jk| - |rho0_jk| over off-diagonal elements, 0 if none grew """
    mask = ~np.eye(4, dtype=bool)
    gain = np.abs(np.asarray(rho)) - np.abs(np.asarray(rho0))
    return float(np.max(np.where(mask, gain, 0.)))
