"""Pure-Python kernels: cyclic complex Jacobi eigensolver and one-sided
Jacobi singular values for small dense matrices.

Used when the compiled ``_core`` extension is unavailable, and as the
reference the compiled kernels are tested against.
"""
import math

import numpy as np

OFF_TOL = 1e-13
MAX_SWEEPS = 100
SVD_TOL = 1e-15
SVD_FLOOR = 1e-16


def jacobi_eigh(m):
    """Diagonalize a Hermitian matrix by cyclic complex Jacobi rotations.

    Parameters
    ----------
    m : (n, n) complex ndarray
        Hermitian input. Only read, never modified.

    Returns
    -------
    w : (n,) float ndarray
        Unsorted eigenvalues (the final diagonal).
    v : (n, n) complex ndarray
        Eigenvectors as columns, paired with ``w``.
    sweeps : int
        Number of sweeps used, or -1 if the sweep cap was hit.
    """
    n = m.shape[0]
    a = [[complex(m[i, j]) for j in range(n)] for i in range(n)]
    v = [[1.0 + 0j if i == j else 0j for j in range(n)] for i in range(n)]

    norm2 = 0.0
    for i in range(n):
        for j in range(n):
            z = a[i][j]
            norm2 += z.real * z.real + z.imag * z.imag
    thresh2 = (OFF_TOL * OFF_TOL) * norm2

    sweeps = -1
    for sweep in range(MAX_SWEEPS + 1):
        off2 = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                z = a[i][j]
                off2 += 2.0 * (z.real * z.real + z.imag * z.imag)
        if off2 <= thresh2:
            sweeps = sweep
            break
        if sweep == MAX_SWEEPS:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                g = abs(apq)
                if g == 0.0:
                    continue
                ph = apq / g
                app = a[p][p].real
                aqq = a[q][q].real
                tau = (aqq - app) / (2.0 * g)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                sp = s * ph
                spc = sp.conjugate()
                # A <- A J, J = [[c, s e^{i phi}], [-s e^{-i phi}, c]] on (p, q)
                for k in range(n):
                    akp = a[k][p]
                    akq = a[k][q]
                    a[k][p] = c * akp - spc * akq
                    a[k][q] = sp * akp + c * akq
                # A <- J^H A
                for k in range(n):
                    apk = a[p][k]
                    aqk = a[q][k]
                    a[p][k] = c * apk - sp * aqk
                    a[q][k] = spc * apk + c * aqk
                a[p][q] = 0j
                a[q][p] = 0j
                a[p][p] = complex(app - t * g, 0.0)
                a[q][q] = complex(aqq + t * g, 0.0)
                for k in range(n):
                    vkp = v[k][p]
                    vkq = v[k][q]
                    v[k][p] = c * vkp - spc * vkq
                    v[k][q] = sp * vkp + c * vkq

    w = np.array([a[i][i].real for i in range(n)], dtype=float)
    vec = np.array(v, dtype=complex)
    return w, vec, sweeps


def jacobi_svals(m):
    """Singular values of a small complex matrix by one-sided Jacobi.

    Columns are orthogonalized pairwise; the singular values are the final
    column norms. Absolute accuracy is of order eps * ||m||, so tiny
    singular values are not swamped the way they are when squaring.

    Returns
    -------
    s : (n,) float ndarray
        Singular values, unsorted.
    sweeps : int
        Sweeps used, or -1 if the cap was hit.
    """
    n = m.shape[1]
    rows = m.shape[0]
    cols = [[complex(m[i, j]) for i in range(rows)] for j in range(n)]
    norm2 = sum(z.real * z.real + z.imag * z.imag for col in cols for z in col)
    # pairs with smaller overlap cannot move any singular value by more
    # than ~eps * ||m||, and rounding keeps them from ever passing SVD_TOL
    floor = SVD_FLOOR * SVD_FLOOR * norm2

    sweeps = -1
    for sweep in range(MAX_SWEEPS + 1):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                cp = cols[p]
                cq = cols[q]
                alpha = 0.0
                beta = 0.0
                gam = 0j
                for i in range(rows):
                    x = cp[i]
                    y = cq[i]
                    alpha += x.real * x.real + x.imag * x.imag
                    beta += y.real * y.real + y.imag * y.imag
                    gam += x.conjugate() * y
                g = abs(gam)
                if g <= floor or g <= SVD_TOL * math.sqrt(alpha * beta):
                    continue
                rotated = True
                ph = gam / g
                tau = (beta - alpha) / (2.0 * g)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                sp = s * ph
                spc = sp.conjugate()
                for i in range(rows):
                    x = cp[i]
                    y = cq[i]
                    cp[i] = c * x - spc * y
                    cq[i] = sp * x + c * y
        if not rotated:
            sweeps = sweep
            break

    s = np.array([math.sqrt(sum(z.real * z.real + z.imag * z.imag for z in col))
                  for col in cols], dtype=float)
    return s, sweeps
