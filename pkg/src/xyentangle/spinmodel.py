"""Two-qubit XY Hamiltonian with cross-product couplings in a uniform field.

Internal couplings (qubit 1 on the left of every tensor product)::

    H0 = 1/2 * sum_{i,j in x,y} a[i,j] sigma_i (x) sigma_j
    a[x,x] = (1 + gamma) J      a[y,y] = (1 - gamma) J
    a[x,y] = (1 + gamma') K     a[y,x] = (1 - gamma') K

and the field adds 1/2 * sum_i B_i (sigma_i (x) 1 + 1 (x) sigma_i).

Basis and operator conventions are those of :mod:`xyentangle.matcore`, with
sigma_z |up> = +|up> and sigma_pm = (sigma_x +- i sigma_y) / 2, so
sigma_+ raises |down> to |up>.

With no in-plane field the Hamiltonian splits into the {|up down>,
|down up>} block with energies +-mu and the {|up up>, |down down>} block
with energies +-lambda_phi, where::

    mu = sqrt(J^2 + (gamma' K)^2)
    nu = sqrt((gamma J)^2 + K^2)
    lambda_phi = sqrt(nu^2 + Bz^2)
"""
import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidInputError
from .matcore import hermitize

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
I2 = np.eye(2, dtype=complex)
SPLUS = np.array([[0, 1], [0, 0]], dtype=complex)
SMINUS = np.array([[0, 0], [1, 0]], dtype=complex)
PAULI = {"x": SX, "y": SY, "z": SZ}

UP_UP, UP_DOWN, DOWN_UP, DOWN_DOWN = range(4)

# S = sigma_y (x) sigma_y, the spin-flip operator
SPIN_FLIP = np.kron(SY, SY)

_EXCHANGE = [[np.kron(si, sj) for sj in (SX, SY)] for si in (SX, SY)]
_ZEEMAN = [np.kron(s, I2) + np.kron(I2, s) for s in (SX, SY, SZ)]
_PM = [np.kron(SPLUS, SPLUS), np.kron(SPLUS, SMINUS),
       np.kron(SMINUS, SPLUS), np.kron(SMINUS, SMINUS)]


def _cos_sin(deg):
    # exact zeros at multiples of 90 degrees, so e.g. theta = 90 gives B_perp = 0
    r = math.radians(deg)
    c, s = math.cos(r), math.sin(r)
    return (0.0 if abs(c) < 1e-15 else c), (0.0 if abs(s) < 1e-15 else s)


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters. Energies are dimensionless and k_B = 1.

    ``gamma`` and ``gamma_prime`` must lie in [-1, 1]; use
    :meth:`ModelParams.loose` to build values outside that range for
    exploration.
    """

    J: float = 0.0
    K: float = 0.0
    gamma: float = 0.0
    gamma_prime: float = 0.0
    Bx: float = 0.0
    By: float = 0.0
    Bz: float = 0.0
    T: float = 0.0
    strict: bool = dataclasses.field(default=True, compare=False, repr=False)

    def __post_init__(self):
        for f in ("J", "K", "gamma", "gamma_prime", "Bx", "By", "Bz", "T"):
            val = getattr(self, f)
            try:
                val = float(val)
            except (TypeError, ValueError):
                raise InvalidInputError(f"{f} must be a real number, got {val!r}") from None
            if not math.isfinite(val):
                raise InvalidInputError(f"{f} must be finite, got {val}")
            object.__setattr__(self, f, val)
        if self.T < 0:
            raise InvalidInputError(f"temperature must be >= 0, got {self.T}")
        if self.strict:
            for f in ("gamma", "gamma_prime"):
                if not -1.0 <= getattr(self, f) <= 1.0:
                    raise InvalidInputError(f"{f} must lie in [-1, 1], got {getattr(self, f)}")

    @classmethod
    def loose(cls, **kw):
        """Build without the [-1, 1] range check on the anisotropies."""
        return cls(strict=False, **kw)

    @classmethod
    def polar(cls, bmag, theta_deg, phi_deg=0.0, **kw):
        """Field given as magnitude and polar angle from z (degrees).

        B_perp = |B| cos(theta), B_par = |B| sin(theta); ``phi_deg`` sets the
        in-plane direction and defaults to the x axis.
        """
        ct, st = _cos_sin(theta_deg)
        cp, sp = _cos_sin(phi_deg)
        bpar = bmag * st
        return cls(Bx=bpar * cp, By=bpar * sp, Bz=bmag * ct, **kw)

    @property
    def B(self):
        return (self.Bx, self.By, self.Bz)

    @property
    def b_perp(self):
        return self.Bz

    @property
    def b_par(self):
        return math.hypot(self.Bx, self.By)

    @property
    def b_mag(self):
        return math.sqrt(self.Bx ** 2 + self.By ** 2 + self.Bz ** 2)

    def replace(self, **kw):
        return dataclasses.replace(self, **kw)


@dataclass(frozen=True)
class SpectralQuantities:
    mu: float
    nu: float
    lambda_phi: float


def coupling_matrix(p):
    """Return the 2x2 array ``a`` with rows/cols indexed (x, y)."""
    return np.array([
        [(1 + p.gamma) * p.J, (1 + p.gamma_prime) * p.K],
        [(1 - p.gamma_prime) * p.K, (1 - p.gamma) * p.J],
    ])


def field_term(p):
    h = np.zeros((4, 4), dtype=complex)
    for b, op in zip(p.B, _ZEEMAN):
        if b:
            h += 0.5 * b * op
    return h


def hamiltonian(p):
    """Hamiltonian as a Hermitian 4x4 complex matrix, built from Pauli products."""
    a = coupling_matrix(p)
    h = np.zeros((4, 4), dtype=complex)
    for i in range(2):
        for j in range(2):
            if a[i, j]:
                h += 0.5 * a[i, j] * _EXCHANGE[i][j]
    return hermitize(h + field_term(p))


def hamiltonian_pm(p):
    """Same Hamiltonian, assembled from raising/lowering operator products.

    Independent of :func:`hamiltonian`; the two are cross-checked in the tests.
    """
    J, K, g, gp = p.J, p.K, p.gamma, p.gamma_prime
    pp, pm, mp, mm = _PM
    h = ((g * J - 1j * K) * pp + (J + 1j * gp * K) * pm
         + (J - 1j * gp * K) * mp + (g * J + 1j * K) * mm)
    return hermitize(h + field_term(p))


def spectral_quantities(p):
    mu = math.hypot(p.J, p.gamma_prime * p.K)
    nu = math.hypot(p.gamma * p.J, p.K)
    return SpectralQuantities(mu, nu, math.hypot(nu, p.b_perp))


def _two_level_vector(off, e, d, lo, hi, upper):
    """Eigenvector of [[d, off], [conj(off), -d]] for eigenvalue ``e`` placed
    on basis indices ``lo``/``hi``.

    The primary form (off, e - d) is the one in the closed-form eigenstates;
    it vanishes when off == 0 and e == d, in which case the equivalent
    (e + d, conj(off)) is used.
    """
    v = np.zeros(4, dtype=complex)
    a, b = off, e - d
    if abs(a) ** 2 + abs(b) ** 2 < 1e-24 * max(1.0, e * e):
        a, b = e + d, np.conj(off)
    if abs(a) ** 2 + abs(b) ** 2 == 0.0:
        # fully degenerate block (off == 0, d == 0): any basis works
        a, b = (1.0, 0.0) if upper else (0.0, 1.0)
    v[lo], v[hi] = a, b
    return v / np.linalg.norm(v)


def analytic_eigenstates(p):
    """Closed-form eigenpairs for a field along z.

    Returns a list of ``(energy, state)`` tuples in the order
    psi_mu^+, psi_mu^-, phi_nu^+, phi_nu^-, where::

        |psi_mu^pm>  ~ (J + i gamma' K) |up down>  pm mu |down up>
        |phi_nu^pm>  ~ (gamma J - i K) |up up> + (pm lambda_phi - Bz) |down down>

    These are eigenvectors of H (and hence of every Gibbs state of H), with
    energies +-mu and +-lambda_phi.
    """
    if p.b_par != 0.0:
        raise DomainError("analytic eigenstates defined only for B_par = 0")
    sq = spectral_quantities(p)
    c_psi = p.J + 1j * p.gamma_prime * p.K
    c_phi = p.gamma * p.J - 1j * p.K
    out = []
    for sgn in (1.0, -1.0):
        e = sgn * sq.mu
        out.append((e, _two_level_vector(c_psi, e, 0.0, UP_DOWN, DOWN_UP, sgn > 0)))
    for sgn in (1.0, -1.0):
        e = sgn * sq.lambda_phi
        out.append((e, _two_level_vector(c_phi, e, p.b_perp, UP_UP, DOWN_DOWN, sgn > 0)))
    return out
