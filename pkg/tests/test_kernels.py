import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xyentangle import _pycore, kernels
from conftest import random_hermitian

finite = st.floats(-10, 10, allow_nan=False)
hermitian = st.lists(finite, min_size=32, max_size=32).map(
    lambda x: (lambda a: 0.5 * (a + a.conj().T))(
        np.array(x[:16]).reshape(4, 4) + 1j * np.array(x[16:]).reshape(4, 4)))


def test_backend_is_known():
    assert kernels.BACKEND in kernels.BACKENDS


@pytest.mark.skipif("compiled" not in kernels.BACKENDS, reason="extension not built")
def test_compiled_matches_python(rng):
    c = kernels.BACKENDS["compiled"]
    for _ in range(200):
        m = random_hermitian(rng)
        w1, v1, s1 = c.jacobi_eigh(m)
        w2, v2, s2 = _pycore.jacobi_eigh(m)
        assert s1 == s2
        np.testing.assert_allclose(w1, w2, rtol=0, atol=1e-12)
        np.testing.assert_allclose(v1, v2, rtol=0, atol=1e-12)
        a = m @ random_hermitian(rng)
        np.testing.assert_allclose(np.sort(c.jacobi_svals(a)[0]),
                                   np.sort(_pycore.jacobi_svals(a)[0]), rtol=1e-13, atol=0)


@settings(max_examples=200, deadline=None)
@given(m=hermitian)
def test_eigh_residual(m):
    for mod in kernels.BACKENDS.values():
        w, v, sweeps = mod.jacobi_eigh(m)
        assert 0 <= sweeps <= _pycore.MAX_SWEEPS
        scale = max(1.0, np.abs(m).max())
        assert np.abs(m @ v - v * w).max() < 1e-11 * scale
        assert np.abs(v.conj().T @ v - np.eye(4)).max() < 1e-12


@settings(max_examples=200, deadline=None)
@given(m=hermitian)
def test_svals_match_numpy(m):
    a = m @ m.conj() + 1j * m
    ref = np.linalg.svd(a, compute_uv=False)
    for mod in kernels.BACKENDS.values():
        s, sweeps = mod.jacobi_svals(a)
        assert sweeps >= 0
        np.testing.assert_allclose(np.sort(s)[::-1], ref, rtol=0,
                                   atol=1e-13 * max(1.0, ref[0]))


def test_svals_rank_deficient():
    v = np.array([1, 1j, 0, 2]) / np.sqrt(6)
    a = np.outer(v, v.conj())
    for mod in kernels.BACKENDS.values():
        s, _ = mod.jacobi_svals(a)
        s = np.sort(s)[::-1]
        assert s[0] == pytest.approx(1.0, abs=1e-15)
        assert np.all(np.abs(s[1:]) < 1e-15)


def test_diagonal_needs_no_sweeps():
    for mod in kernels.BACKENDS.values():
        w, v, sweeps = mod.jacobi_eigh(np.diag([3.0, 1.0, 2.0, 0.0]).astype(complex))
        assert sweeps == 0
        assert list(w) == [3.0, 1.0, 2.0, 0.0]
