"""Equilibrium density matrices rho = exp(-H/T) / Z.

States carry their spectral data (energies, eigenvectors, populations) so
that functions of rho such as its square root can be formed from exactly
computed Boltzmann weights instead of re-diagonalizing rho, whose smallest
eigenvalues are lost to rounding at low temperature.

The partition function for a field along z is
Z = 2 cosh(mu/T) + 2 cosh(lambda_phi/T), following from the spectrum
{+-mu, +-lambda_phi}.
"""
import contextlib
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidStateError
from .matcore import asymmetry, eig_hermitian, hermitize
from .spinmodel import hamiltonian

TRACE_TOL = 1e-12
HERMITIAN_TOL = 1e-13
PSD_TOL = 1e-12
DEGENERACY_TOL = 1e-9

_recorders = []


@contextlib.contextmanager
def record_states():
    """Collect every state built by gibbs_state/ground_state inside the block."""
    bucket = []
    _recorders.append(bucket)
    try:
        yield bucket
    finally:
        _recorders.remove(bucket)


@dataclass(frozen=True)
class ThermalState:
    """Density matrix with its eigendecomposition.

    ``logZ`` is the true log partition function, log(sum_i exp(-E_i/T)),
    evaluated as log(sum_i exp(-(E_i - E_min)/T)) - E_min/T. It is 0 on the
    T = 0 path, where Z is not defined.
    """

    rho: np.ndarray
    logZ: float
    T: float
    ground_degeneracy: int
    energies: np.ndarray
    eigenvectors: np.ndarray
    populations: np.ndarray

    def sqrt_rho(self):
        v = self.eigenvectors
        return hermitize((v * np.sqrt(self.populations)) @ v.conj().T)

    def purity(self):
        return float(np.sum(self.populations ** 2))


def _ground_count(energies):
    e0 = energies[0]
    tol = DEGENERACY_TOL * max(1.0, abs(e0))
    return int(np.sum(energies - e0 <= tol))


def _assemble(decomp, pops, T, logZ, degeneracy):
    v = decomp.eigenvectors
    rho = hermitize((v * pops) @ v.conj().T)
    st = ThermalState(rho, logZ, T, degeneracy, decomp.eigenvalues, v, pops)
    for bucket in _recorders:
        bucket.append(st)
    return st


def gibbs_state(p):
    """Gibbs state at temperature ``p.T`` > 0."""
    if p.T <= 0:
        raise DomainError("gibbs_state needs T > 0; use ground_state for T = 0")
    d = eig_hermitian(hamiltonian(p))
    e = d.eigenvalues
    w = np.exp(-(e - e[0]) / p.T)
    total = w.sum()
    logZ = math.log(total) - e[0] / p.T
    return _assemble(d, w / total, p.T, logZ, _ground_count(e))


def ground_state(p):
    """Uniform mixture over the lowest eigenspace, the T -> 0 limit of the
    Gibbs state. Levels within 1e-9 * max(1, |E_min|) of E_min count as
    degenerate. ``p.T`` is ignored."""
    d = eig_hermitian(hamiltonian(p))
    g = _ground_count(d.eigenvalues)
    pops = np.zeros(4)
    pops[:g] = 1.0 / g
    return _assemble(d, pops, 0.0, 0.0, g)


def thermal_state(p):
    """Gibbs state for T > 0, ground state for T == 0."""
    return gibbs_state(p) if p.T > 0 else ground_state(p)


def check_density_matrix(rho):
    """Raise :class:`InvalidStateError` unless ``rho`` has unit trace, is
    Hermitian and is positive semidefinite (within the module tolerances)."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4) or not np.all(np.isfinite(rho)):
        raise InvalidStateError("density matrix must be a finite 4x4 array")
    tr = np.trace(rho)
    if abs(tr - 1.0) > TRACE_TOL:
        raise InvalidStateError(f"trace is {tr}, not 1")
    if asymmetry(rho) > HERMITIAN_TOL:
        raise InvalidStateError("density matrix is not Hermitian")
    emin = eig_hermitian(hermitize(rho)).eigenvalues[0]
    if emin < -PSD_TOL:
        raise InvalidStateError(f"density matrix has negative eigenvalue {emin:.3g}")


def state_from_density(rho):
    """Wrap an arbitrary density matrix as a :class:`ThermalState` (T and
    logZ unknown, reported as nan)."""
    check_density_matrix(rho)
    d = eig_hermitian(hermitize(np.asarray(rho, dtype=complex)))
    pops = np.clip(d.eigenvalues, 0.0, None)
    return ThermalState(np.asarray(rho, dtype=complex), math.nan, math.nan, 0,
                        np.full(4, math.nan), d.eigenvectors, pops)
