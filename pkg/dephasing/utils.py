""" Seeded random inputs for property checks and parameter scans

All generators take a numpy.random.Generator. Independent substreams for
chunked or parallel work come from numpy.random.SeedSequence.spawn, so a
scan gives the same numbers for a fixed seed whatever the number of workers.
"""
import math

import numpy as np

from dephasing.evolution import DensityMatrix, DephasingFactors
from dephasing.linalg import DIM, hermitian_eigen

# |alpha| is drawn log-uniformly in [10**ALPHA_LOG10_MIN, 10**ALPHA_LOG10_MAX]
ALPHA_LOG10_MIN = -2
ALPHA_LOG10_MAX = 2


def chunk_generators(seed, n_chunks):
    """ One independent Generator per chunk, derived from a single seed """
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(n_chunks)]


def chunk_sizes(total, chunk_size):
    """ Split total into consecutive chunks of at most chunk_size """
    sizes = [chunk_size] * (total // chunk_size)
    if total % chunk_size:
        sizes.append(total % chunk_size)
    return sizes


def random_complex_matrix(rng, low=-1., high=1., shape=(DIM, DIM)):
    return rng.uniform(low, high, shape) + 1j * rng.uniform(low, high, shape)


def random_hermitian(rng, low=-1., high=1.):
    """ Hermitian matrix with real and imaginary parts of every entry in [low, high] """
    upper = np.triu(random_complex_matrix(rng, low, high), 1)
    diag = rng.uniform(low, high, DIM)
    return upper + upper.conj().T + np.diag(diag)


def random_psd(rng):
    """ A^H A for a random complex A """
    a = random_complex_matrix(rng)
    return a.conj().T @ a


def random_unitary(rng):
    """ Eigenvector matrix of a random Hermitian matrix """
    return hermitian_eigen(random_hermitian(rng)).eigenvectors


def random_density_matrix(rng, rank=DIM):
    """ Random two-qubit state A A^H / tr(A A^H) with A of shape (4, rank) """
    a = rng.normal(size=(DIM, rank)) + 1j * rng.normal(size=(DIM, rank))
    m = a @ a.conj().T
    m = m / np.trace(m).real
    return DensityMatrix((m + m.conj().T) / 2)


def random_qubit_state(rng):
    """ Random single-qubit density matrix """
    a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    m = a @ a.conj().T
    m = m / np.trace(m).real
    return (m + m.conj().T) / 2


def random_phase(rng):
    return complex(np.exp(1j * rng.uniform(0, 2 * math.pi)))


def random_factors(rng, common_phase=False):
    """ DephasingFactors with uniform phases and q uniform in (0, 1]

    With common_phase=True both qubits share p (identical splittings, eta = 0).
    """
    p1 = random_phase(rng)
    p2 = p1 if common_phase else random_phase(rng)
    q1, q2 = 1 - rng.random(2)
    return DephasingFactors(p1, p2, q1, q2)


def random_alpha(rng):
    """ alpha with log-uniform modulus and uniform phase """
    modulus = 10**rng.uniform(ALPHA_LOG10_MIN, ALPHA_LOG10_MAX)
    return modulus * random_phase(rng)
