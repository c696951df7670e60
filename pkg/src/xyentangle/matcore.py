"""Dense complex 4x4 linear algebra.

Matrices are ``numpy`` arrays of shape (4, 4) and dtype complex128, indexed
over the product basis

    0 = |up up>,  1 = |up down>,  2 = |down up>,  3 = |down down>

with qubit 1 the left tensor factor. The eigensolver is a cyclic complex
Jacobi iteration (see :mod:`xyentangle.kernels`); everything else is built
from its output.
"""
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ContractViolation, InvalidInputError, NotPSDError, NumericalFailure

HERMITIAN_TOL = 1e-12
PSD_TOL = 1e-12


@dataclass(frozen=True)
class SpectralDecomp:
    """Eigenvalues (ascending) and orthonormal eigenvectors (columns)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int = 0

    def reconstruct(self):
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def _check_finite(m):
    m = np.asarray(m, dtype=complex)
    if not np.all(np.isfinite(m)):
        raise InvalidInputError("matrix has non-finite entries")
    return m


def asymmetry(m):
    """Return max |m_ij - conj(m_ji)|."""
    m = np.asarray(m)
    return float(np.max(np.abs(m - m.conj().T)))


def hermitize(m):
    """Return (m + m^H) / 2, Hermitian bit-for-bit."""
    m = _check_finite(m)
    h = 0.5 * (m + m.conj().T)
    # enforce exact conjugate symmetry regardless of rounding order
    upper = np.triu(h, 1)
    return upper + upper.conj().T + np.diag(h.diagonal().real).astype(complex)


def eig_hermitian(m):
    """Eigendecomposition of a Hermitian matrix.

    Eigenvalues come back ascending (stable sort, so ties keep their
    rotation order) with eigenvectors as the matching columns.

    Raises
    ------
    ContractViolation
        If ``m`` is not Hermitian within 1e-12.
    NumericalFailure
        If the Jacobi iteration hits its sweep cap.
    """
    m = _check_finite(m)
    if asymmetry(m) > HERMITIAN_TOL:
        raise ContractViolation(f"matrix is not Hermitian (asymmetry {asymmetry(m):.3g})")
    w, v, sweeps = kernels.jacobi_eigh(m)
    if sweeps < 0:
        raise NumericalFailure("Jacobi eigensolver did not converge in 100 sweeps")
    order = np.argsort(w, kind="stable")
    return SpectralDecomp(w[order], v[:, order], sweeps)


def spectral_function(decomp, f):
    """V diag(f(e)) V^H for a decomposition and a vectorized scalar function."""
    v = decomp.eigenvectors
    return (v * f(decomp.eigenvalues)) @ v.conj().T


def mat_exp_hermitian(m, shift=0.0):
    """exp(m - shift * I) for Hermitian ``m``.

    The caller picks ``shift`` (typically the largest eigenvalue of the
    exponent) so nothing overflows.
    """
    d = eig_hermitian(m)
    return spectral_function(d, lambda e: np.exp(e - shift))


def mat_sqrt_psd(m):
    """Principal square root of a Hermitian PSD matrix.

    Eigenvalues in [-1e-12, 0) are clamped to zero; anything lower raises
    :class:`NotPSDError`.
    """
    d = eig_hermitian(m)
    e = d.eigenvalues
    if e[0] < -PSD_TOL:
        raise NotPSDError(f"matrix has eigenvalue {e[0]:.3g} < -{PSD_TOL}")
    return spectral_function(d, lambda x: np.sqrt(np.clip(x, 0.0, None)))


def singular_values(m):
    """Singular values, descending, by one-sided Jacobi."""
    m = _check_finite(m)
    s, sweeps = kernels.jacobi_svals(m)
    if sweeps < 0:
        raise NumericalFailure("one-sided Jacobi did not converge in 100 sweeps")
    return np.sort(s)[::-1]


def matmul(a, b):
    return _check_finite(a) @ _check_finite(b)


def adjoint(m):
    return _check_finite(m).conj().T


def conj(m):
    return _check_finite(m).conj()


def trace(m):
    return complex(np.trace(_check_finite(m)))


def scale(m, c):
    return complex(c) * _check_finite(m)


def commutator(a, b):
    return a @ b - b @ a


def identity():
    return np.eye(4, dtype=complex)


def zeros():
    return np.zeros((4, 4), dtype=complex)
