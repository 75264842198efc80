""" Complex linear algebra at the fixed dimension of two qubits

Matrices are (4, 4) complex128 numpy arrays, rows and columns ordered
as up-up, up-down, down-up, down-down.
"""
from dataclasses import dataclass
import logging
import math

import numpy as np

from dephasing.errors import InvalidArgument, NoConvergence, NotHermitian, NotPositive

logger = logging.getLogger(__name__)

DIM = 4
HERMITIAN_TOL = 1e-12
NEGATIVE_TOL = 1e-12
OFFDIAG_TOL = 1e-13
MAX_SWEEPS = 100
# eigenvalues below this fraction of the spectral radius are roundoff
ROUNDOFF_FLOOR = 64 * np.finfo(float).eps


@dataclass(frozen=True)
class EigenDecomposition:
    """ Eigenvalues (ascending) and orthonormal eigenvectors (columns) """
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self):
        """ V diag(w) V^H """
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def as_matrix(a, dim=DIM):
    """ Convert input to a finite complex (dim, dim) array

    Parameters
    ----------
    a : array_like
        Input matrix
    dim : int
        Required dimension

    Returns
    -------
    m : numpy.ndarray
        complex128 copy of the input

    """
    m = np.array(a, dtype=np.complex128)
    if m.shape != (dim, dim):
        raise InvalidArgument(f'Expected a {dim}x{dim} matrix, got shape {m.shape}')
    if not np.all(np.isfinite(m)):
        raise InvalidArgument('Matrix has non-finite entries')
    return m


def max_abs(a):
    """ Largest entry modulus """
    return float(np.max(np.abs(a)))


def hermiticity_error(a):
    """ Max-abs deviation of a from its adjoint """
    return max_abs(a - adjoint(a))


def matmul(a, b):
    return as_matrix(a) @ as_matrix(b)


def adjoint(a):
    return np.conj(np.transpose(a))


def _off_diagonal_norm(a):
    return np.linalg.norm(a[~np.eye(DIM, dtype=bool)])


def _rotation(a, p, q):
    """ 2x2 unitary annihilating a[p, q] of a Hermitian matrix """
    apq = complex(a[p, q])
    mag = abs(apq)
    phase = (apq / mag).conjugate()
    theta = (a[q, q].real - a[p, p].real) / (2 * mag)
    if abs(theta) > 1e150:
        t = 0.5 / theta
    else:
        t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1))
    c = 1 / math.sqrt(t * t + 1)
    s = t * c
    return np.array([[c, s], [-s * phase, c * phase]])


def hermitian_eigen(h):
    """ Eigen-decomposition of a Hermitian 4x4 matrix by cyclic Jacobi rotations

    Parameters
    ----------
    h : array_like
        Hermitian matrix (max-abs of h - h^H not above 1e-12)

    Returns
    -------
    eig : EigenDecomposition
        eigenvalues sorted ascending (stable with respect to the Jacobi
        output order) and the matching unitary matrix of eigenvectors

    """
    a = as_matrix(h)
    deviation = hermiticity_error(a)
    if deviation > HERMITIAN_TOL:
        raise NotHermitian(f'Matrix is not Hermitian: max |h - h^H| = {deviation:.3e}')
    a = (a + adjoint(a)) / 2
    v = np.eye(DIM, dtype=np.complex128)
    tol = OFFDIAG_TOL * np.linalg.norm(a)

    for sweep in range(MAX_SWEEPS):
        if _off_diagonal_norm(a) <= tol:
            break
        for p in range(DIM - 1):
            for q in range(p + 1, DIM):
                if a[p, q] == 0:
                    continue
                g = _rotation(a, p, q)
                pq = [p, q]
                a[:, pq] = a[:, pq] @ g
                a[pq, :] = adjoint(g) @ a[pq, :]
                v[:, pq] = v[:, pq] @ g
                a[p, q] = a[q, p] = 0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
    else:
        if _off_diagonal_norm(a) > tol:
            raise NoConvergence(f'Jacobi iteration did not converge in {MAX_SWEEPS} sweeps')
    logger.debug('Jacobi converged after %d sweeps', sweep)

    w = np.diag(a).real
    order = np.argsort(w, kind='stable')
    return EigenDecomposition(eigenvalues=w[order], eigenvectors=v[:, order])


def clamp_eigenvalues(w, floor=ROUNDOFF_FLOOR):
    """ Zero roundoff-level eigenvalues of a positive semidefinite matrix

    Eigenvalues below -1e-12 raise NotPositive. Values with modulus below
    floor * max|w| are set to 0.
    """
    w = np.asarray(w, dtype=float)
    if w.size and w.min() < -NEGATIVE_TOL:
        raise NotPositive(f'Matrix is not positive semidefinite: eigenvalue {w.min():.3e}')
    scale = np.max(np.abs(w)) if w.size else 0.
    return np.where(w > floor * scale, w, 0.)


def psd_sqrt(m, floor=ROUNDOFF_FLOOR):
    """ Principal square root of a Hermitian positive semidefinite matrix

    Parameters
    ----------
    m : array_like
        Hermitian PSD matrix. Eigenvalues in [-1e-12, 0) are clamped to 0
    floor : float
        Relative threshold below which eigenvalues count as roundoff

    Returns
    -------
    s : numpy.ndarray
        Hermitian PSD matrix with s @ s == m

    """
    eig = hermitian_eigen(m)
    w = clamp_eigenvalues(eig.eigenvalues, floor=floor)
    v = eig.eigenvectors
    s = (v * np.sqrt(w)) @ adjoint(v)
    return (s + adjoint(s)) / 2
