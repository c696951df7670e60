import numpy as np
import pytest

from xyentangle import kernels
from xyentangle.spinmodel import ModelParams


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request, monkeypatch):
    """Run a test once per available kernel backend."""
    mod = kernels.BACKENDS[request.param]
    monkeypatch.setattr(kernels, "jacobi_eigh", mod.jacobi_eigh)
    monkeypatch.setattr(kernels, "jacobi_svals", mod.jacobi_svals)
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_hermitian(rng, scale=10.0):
    a = rng.uniform(-scale, scale, (4, 4)) + 1j * rng.uniform(-scale, scale, (4, 4))
    return 0.5 * (a + a.conj().T)


def random_params(rng, b_par=True, T=None):
    bx, by = (rng.uniform(-2, 2), rng.uniform(-2, 2)) if b_par else (0.0, 0.0)
    return ModelParams(J=rng.uniform(-2, 2), K=rng.uniform(-2, 2),
                       gamma=rng.uniform(-1, 1), gamma_prime=rng.uniform(-1, 1),
                       Bx=bx, By=by, Bz=rng.uniform(-3, 3),
                       T=rng.uniform(0.05, 5) if T is None else T)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance
    if test_acceptance.LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(test_acceptance.LINES):
            terminalreporter.write_line(test_acceptance.LINES[n])
