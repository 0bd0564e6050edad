# cython: language_level=3
"""Compiled hot loops; same algorithm and signatures as ``_kernels_py``."""

import numpy as np

from libc.math cimport sin, cos, sinh, cosh
from libc.stdlib cimport malloc, free


cdef inline void _powers(double x, int n, double* out) noexcept nogil:
    cdef int e
    out[0] = 1.0
    for e in range(1, n + 1):
        out[e] = out[e - 1] * x


cdef inline double _entry(const double[:, :, ::1] coef, int i, int k, int p, int two_sigma,
                          const double* sp, const double* cp, double sign) noexcept nogil:
    cdef double total = 0.0
    cdef double sj = 1.0
    cdef int j = 0
    while p + 2 * j <= two_sigma:
        total += coef[i, k, j] * sj * sp[p + 2 * j] * cp[two_sigma - p - 2 * j]
        sj *= sign
        j += 1
    return total


cdef inline double complex _ipow(int p) noexcept nogil:
    cdef int r = p % 4
    if r == 0:
        return 1.0
    elif r == 1:
        return 1j
    elif r == 2:
        return -1.0
    return -1j


cdef void _factor(const double[:, :, ::1] coef, const int[:, ::1] pexp, int sigma,
                  double s, double c, double sign, bint compact,
                  double complex* out, double* sp, double* cp) noexcept nogil:
    cdef int n = 2 * sigma + 1
    cdef int i, k, p
    cdef double v
    _powers(s, 2 * sigma, sp)
    _powers(c, 2 * sigma, cp)
    for i in range(n):
        for k in range(n):
            p = pexp[i, k]
            v = _entry(coef, i, k, p, 2 * sigma, sp, cp, sign)
            if compact:
                out[i * n + k] = _ipow(p) * v
            else:
                out[i * n + k] = v


cdef void _matmul(const double complex* a, const double complex* b, double complex* out,
                  int n) noexcept nogil:
    cdef int i, j, k
    cdef double complex aik
    for i in range(n * n):
        out[i] = 0
    for i in range(n):
        for k in range(n):
            aik = a[i * n + k]
            if aik == 0:
                continue
            for j in range(n):
                out[i * n + j] = out[i * n + j] + aik * b[k * n + j]


cdef void _z(const double[:, :, ::1] coef, const int[:, ::1] pexp, int sigma,
             double theta, double phi, double tau, double complex* out) noexcept nogil:
    cdef int n = 2 * sigma + 1
    cdef double complex* a = <double complex*> malloc(4 * n * n * sizeof(double complex))
    cdef double* pw = <double*> malloc(2 * (2 * sigma + 1) * sizeof(double))
    cdef double complex* b = a + n * n
    cdef double complex* c = b + n * n
    cdef double complex* ab = c + n * n
    _factor(coef, pexp, sigma, sin(0.5 * theta), cos(0.5 * theta), -1.0, True, a, pw, pw + n)
    _factor(coef, pexp, sigma, sin(0.5 * phi), cos(0.5 * phi), -1.0, True, b, pw, pw + n)
    _factor(coef, pexp, sigma, sinh(0.5 * tau), cosh(0.5 * tau), 1.0, False, c, pw, pw + n)
    _matmul(a, b, ab, n)
    _matmul(ab, c, out, n)
    free(pw)
    free(a)


def _check(coef, pexp, int sigma):
    cdef int n = 2 * sigma + 1
    if coef.shape[0] != n or coef.shape[1] != n or coef.shape[2] < sigma + 1:
        raise ValueError("coefficient table does not match sigma")


def compact_matrix(const double[:, :, ::1] coef, const int[:, ::1] pexp, int sigma, double theta):
    _check(coef, pexp, sigma)
    cdef int n = 2 * sigma + 1
    out = np.empty((n, n), dtype=np.complex128)
    cdef double complex[:, ::1] o = out
    cdef double* pw = <double*> malloc(2 * n * sizeof(double))
    with nogil:
        _factor(coef, pexp, sigma, sin(0.5 * theta), cos(0.5 * theta), -1.0, True,
                &o[0, 0], pw, pw + n)
    free(pw)
    return out


def boost_matrix(const double[:, :, ::1] coef, const int[:, ::1] pexp, int sigma, double tau):
    _check(coef, pexp, sigma)
    cdef int n = 2 * sigma + 1
    out = np.empty((n, n), dtype=np.complex128)
    cdef double complex[:, ::1] o = out
    cdef double* pw = <double*> malloc(2 * n * sizeof(double))
    with nogil:
        _factor(coef, pexp, sigma, sinh(0.5 * tau), cosh(0.5 * tau), 1.0, False,
                &o[0, 0], pw, pw + n)
    free(pw)
    return out.real.copy()


def z_matrix(const double[:, :, ::1] coef, const int[:, ::1] pexp, int sigma,
             double theta, double phi, double tau):
    _check(coef, pexp, sigma)
    cdef int n = 2 * sigma + 1
    out = np.empty((n, n), dtype=np.complex128)
    cdef double complex[:, ::1] o = out
    with nogil:
        _z(coef, pexp, sigma, theta, phi, tau, &o[0, 0])
    return out


def z_element(const double[:, :, ::1] coef, const int[:, ::1] pexp, int sigma, int i, int j,
              double theta, double phi, double tau):
    _check(coef, pexp, sigma)
    cdef int n = 2 * sigma + 1
    cdef int two_sigma = 2 * sigma
    cdef int t, k, p1, p2
    cdef double complex total = 0, inner, a
    cdef double* pw = <double*> malloc((6 * n + n) * sizeof(double))
    cdef double* ts = pw
    cdef double* tc = pw + n
    cdef double* fs = pw + 2 * n
    cdef double* fc = pw + 3 * n
    cdef double* bs = pw + 4 * n
    cdef double* bc = pw + 5 * n
    cdef double* col = pw + 6 * n
    with nogil:
        _powers(sin(0.5 * theta), two_sigma, ts)
        _powers(cos(0.5 * theta), two_sigma, tc)
        _powers(sin(0.5 * phi), two_sigma, fs)
        _powers(cos(0.5 * phi), two_sigma, fc)
        _powers(sinh(0.5 * tau), two_sigma, bs)
        _powers(cosh(0.5 * tau), two_sigma, bc)
        for k in range(n):
            col[k] = _entry(coef, k, j, pexp[k, j], two_sigma, bs, bc, 1.0)
        for t in range(n):
            p1 = pexp[i, t]
            a = _ipow(p1) * _entry(coef, i, t, p1, two_sigma, ts, tc, -1.0)
            if a == 0:
                continue
            inner = 0
            for k in range(n):
                if col[k] == 0.0:
                    continue
                p2 = pexp[t, k]
                inner = inner + _ipow(p2) * _entry(coef, t, k, p2, two_sigma, fs, fc, -1.0) * col[k]
            total = total + a * inner
    free(pw)
    return complex(total.real, total.imag)


def z_matrices(const double[:, :, ::1] coef, const int[:, ::1] pexp, int sigma, angles):
    _check(coef, pexp, sigma)
    cdef double[:, ::1] ang = np.ascontiguousarray(angles, dtype=np.float64).reshape(-1, 3)
    cdef int n = 2 * sigma + 1
    cdef Py_ssize_t r, count = ang.shape[0]
    out = np.empty((count, n, n), dtype=np.complex128)
    cdef double complex[:, :, ::1] o = out
    with nogil:
        for r in range(count):
            _z(coef, pexp, sigma, ang[r, 0], ang[r, 1], ang[r, 2], &o[r, 0, 0])
    return out
