"""Pure-Python hot loops; twin of ``_kernels.pyx``.

Each factor matrix entry is a finite sum
    sum_j coef[i, k, j] * sign^j * s^(p + 2j) * c^(2 sigma - p - 2j)
with ``p = |m - t|``, ``s, c`` the sine/cosine (or sinh/cosh) of the half
angle. Compact entries carry an extra phase i^p.
"""

import math

import numpy as np

_IPOW = (1 + 0j, 1j, -1 + 0j, -1j)


def _powers(x, n):
    out = [1.0] * (n + 1)
    for e in range(1, n + 1):
        out[e] = out[e - 1] * x
    return out


def _entry(coef_ik, p, two_sigma, sp, cp, sign):
    total = 0.0
    j = 0
    sj = 1.0
    while p + 2 * j <= two_sigma:
        total += coef_ik[j] * sj * sp[p + 2 * j] * cp[two_sigma - p - 2 * j]
        sj *= sign
        j += 1
    return total


def _factor(coef, pexp, sigma, s, c, sign, compact):
    n = 2 * sigma + 1
    sp = _powers(s, 2 * sigma)
    cp = _powers(c, 2 * sigma)
    out = [[0j] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            p = int(pexp[i, k])
            v = _entry(coef[i, k], p, 2 * sigma, sp, cp, sign)
            out[i][k] = _IPOW[p % 4] * v if compact else complex(v)
    return out


def compact_matrix(coef, pexp, sigma, theta):
    h = 0.5 * theta
    return np.array(_factor(coef, pexp, sigma, math.sin(h), math.cos(h), -1.0, True))


def boost_matrix(coef, pexp, sigma, tau):
    h = 0.5 * tau
    return np.array(_factor(coef, pexp, sigma, math.sinh(h), math.cosh(h), 1.0, False)).real


def _matmul(a, b):
    n = len(a)
    out = [[0j] * n for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(n):
            aik = ai[k]
            if aik == 0:
                continue
            bk = b[k]
            for j in range(n):
                oi[j] += aik * bk[j]
    return out


def _z(coef, pexp, sigma, theta, phi, tau):
    a = _factor(coef, pexp, sigma, math.sin(0.5 * theta), math.cos(0.5 * theta), -1.0, True)
    b = _factor(coef, pexp, sigma, math.sin(0.5 * phi), math.cos(0.5 * phi), -1.0, True)
    c = _factor(coef, pexp, sigma, math.sinh(0.5 * tau), math.cosh(0.5 * tau), 1.0, False)
    return _matmul(_matmul(a, b), c)


def z_matrix(coef, pexp, sigma, theta, phi, tau):
    return np.array(_z(coef, pexp, sigma, theta, phi, tau))


def z_element(coef, pexp, sigma, i, j, theta, phi, tau):
    n = 2 * sigma + 1
    two_sigma = 2 * sigma
    ts, tc = _powers(math.sin(0.5 * theta), two_sigma), _powers(math.cos(0.5 * theta), two_sigma)
    fs, fc = _powers(math.sin(0.5 * phi), two_sigma), _powers(math.cos(0.5 * phi), two_sigma)
    bs, bc = _powers(math.sinh(0.5 * tau), two_sigma), _powers(math.cosh(0.5 * tau), two_sigma)
    # boost column j
    col = [0.0] * n
    for k in range(n):
        col[k] = _entry(coef[k, j], int(pexp[k, j]), two_sigma, bs, bc, 1.0)
    total = 0j
    for t in range(n):
        p1 = int(pexp[i, t])
        a = _IPOW[p1 % 4] * _entry(coef[i, t], p1, two_sigma, ts, tc, -1.0)
        if a == 0:
            continue
        inner = 0j
        for k in range(n):
            if col[k] == 0.0:
                continue
            p2 = int(pexp[t, k])
            inner += _IPOW[p2 % 4] * _entry(coef[t, k], p2, two_sigma, fs, fc, -1.0) * col[k]
        total += a * inner
    return total


def z_matrices(coef, pexp, sigma, angles):
    angles = np.asarray(angles, dtype=float).reshape(-1, 3)
    n = 2 * sigma + 1
    out = np.empty((angles.shape[0], n, n), dtype=complex)
    for r in range(angles.shape[0]):
        th, ph, ta = angles[r]
        out[r] = _z(coef, pexp, sigma, th, ph, ta)
    return out
