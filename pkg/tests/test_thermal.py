import math

import numpy as np
import pytest

from xyentangle.errors import DomainError, InvalidStateError
from xyentangle.matcore import asymmetry, commutator, eig_hermitian
from xyentangle.spinmodel import ModelParams, analytic_eigenstates, hamiltonian
from xyentangle.thermal import (check_density_matrix, gibbs_state, ground_state,
                                record_states, state_from_density, thermal_state)
from conftest import random_params

pytestmark = pytest.mark.usefixtures("backend")


def assert_valid(st):
    assert abs(np.trace(st.rho) - 1) < 1e-12
    assert asymmetry(st.rho) < 1e-13
    assert eig_hermitian(st.rho).eigenvalues[0] >= -1e-12


def test_zero_hamiltonian_is_maximally_mixed():
    for T in (0.01, 1.0, 100.0):
        st = gibbs_state(ModelParams(T=T))
        np.testing.assert_allclose(st.rho, np.eye(4) / 4, atol=1e-15)
        assert st.logZ == pytest.approx(math.log(4), abs=1e-15)


def test_xy_populations():
    T = 0.7
    st = gibbs_state(ModelParams(J=1, T=T))
    z = 2 + 2 * math.cosh(1 / T)
    assert st.logZ == pytest.approx(math.log(z), rel=1e-14)
    np.testing.assert_allclose(st.populations,
                               [math.exp(1 / T) / z, 1 / z, 1 / z, math.exp(-1 / T) / z],
                               rtol=1e-14)


def test_partition_function_uses_mu(rng):
    for _ in range(100):
        p = random_params(rng, b_par=False)
        sq_mu = math.hypot(p.J, p.gamma_prime * p.K)
        lam = math.hypot(math.hypot(p.gamma * p.J, p.K), p.Bz)
        z = 2 * math.cosh(sq_mu / p.T) + 2 * math.cosh(lam / p.T)
        assert gibbs_state(p).logZ == pytest.approx(math.log(z), rel=1e-12)


def test_high_temperature_limit(rng):
    for _ in range(50):
        st = gibbs_state(random_params(rng, T=1e6))
        assert np.abs(st.rho - np.eye(4) / 4).max() < 1e-5


def test_low_temperature_is_finite(rng):
    for _ in range(100):
        st = gibbs_state(random_params(rng, T=1e-6))
        assert np.all(np.isfinite(st.rho)) and math.isfinite(st.logZ)
        assert_valid(st)


def test_gibbs_requires_positive_t():
    with pytest.raises(DomainError):
        gibbs_state(ModelParams(J=1))


def test_validity_and_commutation(rng):
    for _ in range(200):
        p = random_params(rng)
        h = hamiltonian(p)
        for T in (0.01, 0.1, 1.0, 10.0):
            st = gibbs_state(p.replace(T=T))
            assert_valid(st)
            assert np.abs(commutator(st.rho, h)).max() < 1e-10


def test_ground_state_bell():
    st = ground_state(ModelParams(J=1))
    assert st.ground_degeneracy == 1
    _, (_, v), _, _ = analytic_eigenstates(ModelParams(J=1))
    np.testing.assert_allclose(st.rho, np.outer(v, v.conj()), atol=1e-15)


def test_ground_state_degenerate_mixture():
    p = ModelParams(J=1, gamma=0.6, Bz=0.8)
    st = ground_state(p)
    assert st.ground_degeneracy == 2
    _, (_, psi), _, (_, phi) = analytic_eigenstates(p)
    expect = 0.5 * (np.outer(psi, psi.conj()) + np.outer(phi, phi.conj()))
    np.testing.assert_allclose(st.rho, expect, atol=1e-12)
    assert np.abs(gibbs_state(p.replace(T=1e-5)).rho - st.rho).max() < 1e-4


def test_ground_state_product():
    st = ground_state(ModelParams(J=1, Bz=2))
    expect = np.zeros((4, 4))
    expect[3, 3] = 1
    np.testing.assert_allclose(st.rho, expect, atol=1e-15)


def test_continuity_at_zero(rng):
    draws = [random_params(rng) for _ in range(100)]
    draws += [ModelParams(J=1, gamma=0.6, Bz=0.8), ModelParams(J=1, Bz=1)]
    for p in draws:
        diff = gibbs_state(p.replace(T=1e-5)).rho - ground_state(p).rho
        assert np.abs(diff).max() < 1e-3


def test_purity_decreases(rng):
    for _ in range(100):
        p = random_params(rng)
        pur = [gibbs_state(p.replace(T=T)).purity() for T in (0.1, 1.0, 10.0)]
        assert pur[0] >= pur[1] >= pur[2]


def test_sqrt_rho_squares_back(rng):
    for _ in range(100):
        st = thermal_state(random_params(rng, T=float(rng.choice([0.0, 0.3, 2.0]))))
        s = st.sqrt_rho()
        assert np.abs(s @ s - st.rho).max() < 1e-12


def test_check_density_matrix():
    check_density_matrix(np.eye(4) / 4)
    with pytest.raises(InvalidStateError):
        check_density_matrix(np.eye(4) / 2)
    with pytest.raises(InvalidStateError):
        check_density_matrix(np.diag([0.6, 0.6, -0.2, 0.0]))
    bad = np.eye(4, dtype=complex) / 4
    bad[0, 1] = 0.1
    with pytest.raises(InvalidStateError):
        check_density_matrix(bad)
    with pytest.raises(InvalidStateError):
        state_from_density(np.eye(3) / 3)


def test_record_states():
    with record_states() as seen:
        gibbs_state(ModelParams(J=1, T=1))
        ground_state(ModelParams(J=1))
    gibbs_state(ModelParams(J=1, T=2))
    assert len(seen) == 2
