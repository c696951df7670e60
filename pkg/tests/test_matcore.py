import numpy as np
import pytest

from xyentangle import matcore
from xyentangle.errors import (ContractViolation, InvalidInputError, NotPSDError,
                               NumericalFailure)
from xyentangle.spinmodel import ModelParams, hamiltonian
from xyentangle.thermal import gibbs_state
from conftest import random_hermitian, random_params

pytestmark = pytest.mark.usefixtures("backend")


def test_hermitize_examples():
    eye = np.eye(4, dtype=complex)
    assert np.array_equal(matcore.hermitize(eye), eye)
    m = np.zeros((4, 4), dtype=complex)
    m[0, 1] = 1j
    h = matcore.hermitize(m)
    assert h[0, 1] == 0.5j and h[1, 0] == -0.5j


def test_hermitize_exact(rng):
    for _ in range(100):
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        h = matcore.hermitize(a)
        assert np.array_equal(h, h.conj().T)


def test_hamiltonian_is_fixed_point(rng):
    for _ in range(100):
        h = hamiltonian(random_params(rng))
        assert np.array_equal(matcore.hermitize(h), h)


def test_rejects_non_finite():
    m = np.eye(4, dtype=complex)
    m[2, 2] = np.nan
    with pytest.raises(InvalidInputError):
        matcore.hermitize(m)
    with pytest.raises(InvalidInputError):
        matcore.eig_hermitian(m)


def test_eig_diagonal():
    d = matcore.eig_hermitian(np.diag([1.0, 2.0, 3.0, 4.0]))
    assert list(d.eigenvalues) == [1, 2, 3, 4]
    assert np.array_equal(np.abs(d.eigenvectors), np.eye(4))


@pytest.mark.parametrize("params, expect", [
    (dict(J=1), (-1, 0, 0, 1)),
    (dict(J=1, K=0.5), (-1, -0.5, 0.5, 1)),
])
def test_eig_model_spectra(params, expect):
    d = matcore.eig_hermitian(hamiltonian(ModelParams(**params)))
    np.testing.assert_allclose(d.eigenvalues, expect, atol=1e-14)


def test_eig_rejects_non_hermitian():
    m = np.zeros((4, 4), dtype=complex)
    m[0, 1] = 1.0
    with pytest.raises(ContractViolation):
        matcore.eig_hermitian(m)


def test_eig_reports_nonconvergence(monkeypatch):
    from xyentangle import kernels
    monkeypatch.setattr(kernels, "jacobi_eigh",
                        lambda m: (np.zeros(4), np.eye(4, dtype=complex), -1))
    with pytest.raises(NumericalFailure):
        matcore.eig_hermitian(np.eye(4))


def test_eig_deterministic(rng):
    m = random_hermitian(rng)
    a, b = matcore.eig_hermitian(m), matcore.eig_hermitian(m.copy())
    assert np.array_equal(a.eigenvalues, b.eigenvalues)
    assert np.array_equal(a.eigenvectors, b.eigenvectors)


def test_eig_random_reconstruction(rng):
    for _ in range(1000):
        m = random_hermitian(rng)
        d = matcore.eig_hermitian(m)
        v, e = d.eigenvectors, d.eigenvalues
        assert np.all(np.diff(e) >= 0)
        assert np.abs(d.reconstruct() - m).max() < 1e-10
        assert np.abs(v.conj().T @ v - np.eye(4)).max() < 1e-12
        assert np.abs(m @ v - v * e).max() < 1e-11 * max(1.0, np.abs(e).max())
        assert abs(e.sum() - np.trace(m).real) < 1e-10
        det = np.linalg.det(m).real
        assert abs(np.prod(e) - det) <= 1e-8 * max(abs(det), 1e-300) + 1e-10


def test_exp_examples():
    np.testing.assert_array_equal(matcore.mat_exp_hermitian(np.zeros((4, 4))), np.eye(4))
    d = np.array([0.5, -1.0, 2.0, 0.0])
    np.testing.assert_allclose(matcore.mat_exp_hermitian(np.diag(d)), np.diag(np.exp(d)),
                               rtol=1e-15)


def test_exp_inverse_and_commutation(rng):
    for _ in range(200):
        m = random_hermitian(rng, scale=2.0)
        e = matcore.mat_exp_hermitian(m)
        assert np.abs(e @ matcore.mat_exp_hermitian(-m) - np.eye(4)).max() < 1e-10
        shift = matcore.eig_hermitian(m).eigenvalues[-1]
        es = matcore.mat_exp_hermitian(m, shift)
        assert np.abs(matcore.commutator(es, m)).max() < 1e-9
        assert matcore.asymmetry(es) < 1e-12


def test_sqrt_examples():
    np.testing.assert_allclose(matcore.mat_sqrt_psd(np.eye(4)), np.eye(4), atol=1e-15)
    np.testing.assert_allclose(matcore.mat_sqrt_psd(np.diag([4.0, 1.0, 0.0, 9.0])),
                               np.diag([2.0, 1.0, 0.0, 3.0]), atol=1e-15)
    rho = gibbs_state(ModelParams(J=1, T=1)).rho
    s = matcore.mat_sqrt_psd(rho)
    assert np.abs(s @ s - rho).max() < 1e-10


def test_sqrt_random_psd(rng):
    for _ in range(200):
        a = random_hermitian(rng, 1.0)
        m = a @ a
        s = matcore.mat_sqrt_psd(m)
        assert np.abs(s @ s - m).max() < 1e-10
        assert matcore.eig_hermitian(matcore.hermitize(s)).eigenvalues[0] >= -1e-12


def test_sqrt_clamps_and_rejects():
    s = matcore.mat_sqrt_psd(np.diag([1.0, -5e-13, 0.0, 4.0]))
    np.testing.assert_allclose(np.diag(s).real, [1, 0, 0, 2], atol=1e-15)
    with pytest.raises(NotPSDError):
        matcore.mat_sqrt_psd(np.diag([1.0, -1e-6, 0.0, 4.0]))


def test_singular_values(rng):
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    s = matcore.singular_values(a)
    assert np.all(np.diff(s) <= 0)
    np.testing.assert_allclose(s, np.linalg.svd(a, compute_uv=False), rtol=1e-13)


def test_small_ops(rng):
    m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    assert matcore.trace(matcore.identity()) == 4
    assert np.array_equal(matcore.adjoint(matcore.adjoint(m)), m)
    assert np.array_equal(matcore.conj(m), m.conj())
    assert np.array_equal(matcore.matmul(m, matcore.identity()), m)
    assert np.array_equal(matcore.scale(m, 2.0), 2.0 * m)
    assert not matcore.zeros().any()
    assert abs(matcore.trace(gibbs_state(random_params(rng)).rho) - 1) < 1e-12
