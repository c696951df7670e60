# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: cyclic complex Jacobi eigensolver and one-sided Jacobi
singular values. Same algorithms, tolerances and rotation order as
``_pycore``; results agree with it to rounding.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, hypot

cnp.import_array()

DEF MAXN = 8

cdef double OFF_TOL = 1e-13
cdef int MAX_SWEEPS = 100
cdef double SVD_TOL = 1e-15
cdef double SVD_FLOOR = 1e-16


cdef inline double abs2(double complex z) nogil:
    return z.real * z.real + z.imag * z.imag


cdef inline double complex conj(double complex z) nogil:
    return z.real - 1j * z.imag


cdef inline double rot_t(double tau) nogil:
    if tau >= 0.0:
        return 1.0 / (tau + sqrt(1.0 + tau * tau))
    return -1.0 / (-tau + sqrt(1.0 + tau * tau))


def jacobi_eigh(m):
    """Hermitian eigendecomposition; see ``_pycore.jacobi_eigh``."""
    cdef const double complex[:, :] mv = np.ascontiguousarray(m, dtype=np.complex128)
    cdef int n = mv.shape[0]
    if n > MAXN or mv.shape[1] != n:
        raise ValueError("matrix must be square with n <= 8")
    cdef double complex a[MAXN][MAXN]
    cdef double complex v[MAXN][MAXN]
    cdef int i, j, k, p, q, sweep, sweeps = -1
    cdef double norm2 = 0.0, thresh2, off2, g, app, aqq, tau, t, c, s
    cdef double complex apq, ph, sp, spc, x, y

    for i in range(n):
        for j in range(n):
            a[i][j] = mv[i, j]
            v[i][j] = 1.0 if i == j else 0.0
            norm2 += abs2(a[i][j])
    thresh2 = OFF_TOL * OFF_TOL * norm2

    with nogil:
        for sweep in range(MAX_SWEEPS + 1):
            off2 = 0.0
            for i in range(n):
                for j in range(i + 1, n):
                    off2 += 2.0 * abs2(a[i][j])
            if off2 <= thresh2:
                sweeps = sweep
                break
            if sweep == MAX_SWEEPS:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p][q]
                    g = hypot(apq.real, apq.imag)
                    if g == 0.0:
                        continue
                    ph = apq / g
                    app = a[p][p].real
                    aqq = a[q][q].real
                    tau = (aqq - app) / (2.0 * g)
                    t = rot_t(tau)
                    c = 1.0 / sqrt(1.0 + t * t)
                    s = t * c
                    sp = s * ph
                    spc = conj(sp)
                    for k in range(n):
                        x = a[k][p]
                        y = a[k][q]
                        a[k][p] = c * x - spc * y
                        a[k][q] = sp * x + c * y
                    for k in range(n):
                        x = a[p][k]
                        y = a[q][k]
                        a[p][k] = c * x - sp * y
                        a[q][k] = spc * x + c * y
                    a[p][q] = 0.0
                    a[q][p] = 0.0
                    a[p][p] = app - t * g
                    a[q][q] = aqq + t * g
                    for k in range(n):
                        x = v[k][p]
                        y = v[k][q]
                        v[k][p] = c * x - spc * y
                        v[k][q] = sp * x + c * y

    w = np.empty(n, dtype=np.float64)
    vec = np.empty((n, n), dtype=np.complex128)
    cdef double[:] wv = w
    cdef double complex[:, :] vv = vec
    for i in range(n):
        wv[i] = a[i][i].real
        for j in range(n):
            vv[i, j] = v[i][j]
    return w, vec, sweeps


def jacobi_svals(m):
    """Singular values by one-sided Jacobi; see ``_pycore.jacobi_svals``."""
    cdef const double complex[:, :] mv = np.ascontiguousarray(m, dtype=np.complex128)
    cdef int rows = mv.shape[0]
    cdef int n = mv.shape[1]
    if n > MAXN or rows > MAXN:
        raise ValueError("matrix dimensions must be <= 8")
    cdef double complex col[MAXN][MAXN]
    cdef int i, j, p, q, sweep, sweeps = -1
    cdef bint rotated
    cdef double alpha, beta, g, tau, t, c, s, floor, norm2 = 0.0
    cdef double complex gam, ph, sp, spc, x, y

    for j in range(n):
        for i in range(rows):
            col[j][i] = mv[i, j]
            norm2 += abs2(col[j][i])
    floor = SVD_FLOOR * SVD_FLOOR * norm2

    with nogil:
        for sweep in range(MAX_SWEEPS + 1):
            rotated = False
            for p in range(n - 1):
                for q in range(p + 1, n):
                    alpha = 0.0
                    beta = 0.0
                    gam = 0.0
                    for i in range(rows):
                        x = col[p][i]
                        y = col[q][i]
                        alpha += abs2(x)
                        beta += abs2(y)
                        gam = gam + conj(x) * y
                    g = hypot(gam.real, gam.imag)
                    if g <= floor or g <= SVD_TOL * sqrt(alpha * beta):
                        continue
                    rotated = True
                    ph = gam / g
                    tau = (beta - alpha) / (2.0 * g)
                    t = rot_t(tau)
                    c = 1.0 / sqrt(1.0 + t * t)
                    s = t * c
                    sp = s * ph
                    spc = conj(sp)
                    for i in range(rows):
                        x = col[p][i]
                        y = col[q][i]
                        col[p][i] = c * x - spc * y
                        col[q][i] = sp * x + c * y
            if not rotated:
                sweeps = sweep
                break

    out = np.empty(n, dtype=np.float64)
    cdef double[:] ov = out
    for j in range(n):
        alpha = 0.0
        for i in range(rows):
            alpha += abs2(col[j][i])
        ov[j] = sqrt(alpha)
    return out, sweeps
