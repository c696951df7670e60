"""Wootters concurrence of the two-qubit thermal state, by three routes.

``concurrence_numeric``
    Any density matrix. The Wootters roots w_1 >= ... >= w_4 (square roots
    of the eigenvalues of R = rho S rho* S, S = sigma_y (x) sigma_y) are the
    singular values of A = sqrt(rho) S conj(sqrt(rho)): A A^H is the
    Hermitian PSD matrix sqrt(rho) S rho* S sqrt(rho), which is similar to
    R. Taking singular values of A directly keeps absolute accuracy near
    eps for the small roots, which squaring would reduce to sqrt(eps).
``concurrence_analytic_bz``
    Closed-form roots for a field along z, where the Gibbs state is an
    X-state.
``concurrence_t0_closed``
    Closed-form ground-state values for a z field, or for an in-plane field
    with gamma = K = 0.

``concurrence`` dispatches to the cheapest applicable route.
"""
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidStateError
from .matcore import singular_values
from .spinmodel import SPIN_FLIP, spectral_quantities
from .thermal import (PSD_TOL, TRACE_TOL, ThermalState, gibbs_state, ground_state,
                      state_from_density)

BRANCH_TOL = 1e-12
SQRT2 = math.sqrt(2.0)


class Path(str, enum.Enum):
    NUMERIC = "numeric"
    ANALYTIC_BZ = "analytic_bz"
    CLOSED_FORM_T0 = "closed_form_t0"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ConcurrenceResult:
    value: float
    roots: tuple
    path: Path

    def __float__(self):
        return self.value


def _from_roots(roots, path):
    w = sorted((max(float(r), 0.0) for r in roots), reverse=True)
    value = max(w[0] - w[1] - w[2] - w[3], 0.0)
    return ConcurrenceResult(value, tuple(w), path)


def wootters_roots(state):
    """Wootters roots, descending, for a :class:`ThermalState` or a 4x4
    density matrix."""
    if not isinstance(state, ThermalState):
        state = state_from_density(state)
    pops = state.populations
    if abs(pops.sum() - 1.0) > TRACE_TOL or pops.min() < -PSD_TOL:
        raise InvalidStateError("state populations are not a probability vector")
    sq = state.sqrt_rho()
    a = sq @ SPIN_FLIP @ sq.conj()
    return singular_values(a)


def concurrence_numeric(state):
    """Concurrence of a state (ThermalState or raw 4x4 density matrix)."""
    return _from_roots(wootters_roots(state), Path.NUMERIC)


def concurrence_analytic_bz(p):
    """Concurrence of the Gibbs state for a field along z (B_par = 0, T > 0).

    Roots, before sorting::

        e^{+mu/T} / Z,  e^{-mu/T} / Z,  (sqrt(1 + x^2) +- x) / Z
        x = (nu / lambda_phi) sinh(lambda_phi / T)
        Z = 2 cosh(mu/T) + 2 cosh(lambda_phi/T)

    Every exponential is scaled by exp(-max(mu, lambda_phi)/T).
    """
    if p.b_par != 0.0:
        raise DomainError("analytic path requires B_par = 0")
    if p.T <= 0:
        raise DomainError("analytic path requires T > 0")
    T = p.T
    sq = spectral_quantities(p)
    mu, nu, lam = sq.mu, sq.nu, sq.lambda_phi
    top = max(mu, lam)
    em_p = math.exp((mu - top) / T)
    em_m = math.exp((-mu - top) / T)
    el_p = math.exp((lam - top) / T)
    el_m = math.exp((-lam - top) / T)
    zs = em_p + em_m + el_p + el_m
    xs = 0.0 if lam == 0.0 else (nu / lam) * 0.5 * (el_p - el_m)
    floor = math.exp(-top / T)
    rs = math.sqrt(floor * floor + xs * xs)
    hi = rs + xs
    # sqrt(1 + x^2) - x without cancellation
    lo = floor * floor / hi if xs > 0.0 else floor
    return _from_roots((em_p / zs, em_m / zs, hi / zs, lo / zs), Path.ANALYTIC_BZ)


def t0_branch(p):
    """Name of the zero-temperature closed form that applies, or None."""
    if p.b_par == 0.0:
        return "z_field"
    if p.b_perp == 0.0 and p.gamma == 0.0 and p.K == 0.0:
        return "planar_field"
    return None


def concurrence_t0_closed(p):
    """Ground-state concurrence in closed form.

    z field (B_par = 0)::

        1                              mu > lambda_phi
        (1 - nu/lambda_phi) / 2        mu = lambda_phi
        nu / lambda_phi                mu < lambda_phi

    in-plane field with B_perp = gamma = K = 0 (gamma' is then inert)::

        1                              B_par < sqrt(2) |J|
        2/3                            B_par = sqrt(2) |J|
        (1 - D^2) / (1 + D^2)          B_par > sqrt(2) |J|
        D = (sqrt(1 + (2 B_par/J)^2) - 1) / (2 B_par/J)

    Branch points are matched with absolute tolerance 1e-12.
    """
    branch = t0_branch(p)
    if branch == "z_field":
        sq = spectral_quantities(p)
        # lambda_phi = 0 forces nu = B_perp = 0; the B_perp = 0 ratio is 1
        ratio = sq.nu / sq.lambda_phi if sq.lambda_phi > 0 else 1.0
        if abs(sq.mu - sq.lambda_phi) <= BRANCH_TOL:
            value = 0.5 * (1.0 - ratio)
        elif sq.mu > sq.lambda_phi:
            value = 1.0
        else:
            value = ratio
    elif branch == "planar_field":
        b, j = p.b_par, abs(p.J)
        jump = SQRT2 * j
        if abs(b - jump) <= BRANCH_TOL:
            value = 2.0 / 3.0
        elif b < jump:
            value = 1.0
        elif j == 0.0:
            value = 0.0
        else:
            r = 2.0 * b / j
            d = (math.sqrt(1.0 + r * r) - 1.0) / r
            value = (1.0 - d * d) / (1.0 + d * d)
    else:
        raise DomainError(
            "no closed form: need B_par = 0, or B_perp = 0 with gamma = K = 0; "
            "use ground_state + concurrence_numeric")
    return ConcurrenceResult(value, (), Path.CLOSED_FORM_T0)


def concurrence(p):
    """Concurrence at ``p.T`` via the cheapest valid route."""
    if p.T == 0:
        if t0_branch(p) is not None:
            return concurrence_t0_closed(p)
        return concurrence_numeric(ground_state(p))
    if p.b_par == 0.0:
        return concurrence_analytic_bz(p)
    return concurrence_numeric(gibbs_state(p))


def concurrence_value(p, path=None):
    """Float concurrence; ``path`` forces 'numeric' or 'analytic_bz'."""
    if path is None:
        return concurrence(p).value
    path = Path(path)
    if path is Path.NUMERIC:
        st = gibbs_state(p) if p.T > 0 else ground_state(p)
        return concurrence_numeric(st).value
    if path is Path.ANALYTIC_BZ:
        return concurrence_analytic_bz(p).value
    return concurrence_t0_closed(p).value
