import numpy as np
import pytest

from dephasing.linalg import hermiticity_error
from dephasing.utils import (
    ALPHA_LOG10_MAX,
    ALPHA_LOG10_MIN,
    chunk_generators,
    chunk_sizes,
    random_alpha,
    random_density_matrix,
    random_factors,
    random_hermitian,
    random_unitary,
)


@pytest.mark.parametrize('total, chunk, expected', [
    (10000, 1000, [1000] * 10),
    (2500, 1000, [1000, 1000, 500]),
    (1, 1000, [1]),
    (0, 1000, []),
])
def test_chunk_sizes(total, chunk, expected):
    assert chunk_sizes(total, chunk) == expected


def test_chunk_generators_are_reproducible():
    first = [g.random(3) for g in chunk_generators(7, 4)]
    second = [g.random(3) for g in chunk_generators(7, 4)]
    assert all(np.array_equal(a, b) for a, b in zip(first, second))
    assert not np.array_equal(first[0], first[1])


def test_random_hermitian():
    h = random_hermitian(np.random.default_rng(0))
    assert hermiticity_error(h) == 0
    assert np.all(np.abs(h.real) <= 1) and np.all(np.abs(h.imag) <= 1)


def test_random_unitary():
    u = random_unitary(np.random.default_rng(1))
    assert np.allclose(u.conj().T @ u, np.eye(4), atol=1e-12)


@pytest.mark.parametrize('rank', [1, 2, 4])
def test_random_density_matrix_rank(rank):
    rho = random_density_matrix(np.random.default_rng(2), rank=rank)
    assert np.sum(rho.eigenvalues() > 1e-12) == rank


def test_random_factors():
    rng = np.random.default_rng(3)
    for _ in range(100):
        f = random_factors(rng, common_phase=True)
        assert f.p1 == f.p2
        assert 0 < f.q1 <= 1 and 0 < f.q2 <= 1


def test_random_alpha_range():
    rng = np.random.default_rng(4)
    moduli = np.abs([random_alpha(rng) for _ in range(1000)])
    assert np.all(moduli >= 10.**ALPHA_LOG10_MIN * (1 - 1e-12))
    assert np.all(moduli <= 10.**ALPHA_LOG10_MAX * (1 + 1e-12))
