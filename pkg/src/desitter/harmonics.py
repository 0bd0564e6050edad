"""Hyperspherical functions of SO0(1,4) and the full matrix elements.

Two independent routes to the hyperspherical function Z^sigma_mn:

* ``hyperspherical_Z`` -- the addition-theorem triple sum over two free
  indices (t, k) of products of two compact factors and one boost factor;
* ``hyperspherical_Z_hyp`` -- the closed hypergeometric particular solution
  in sin^2(theta^q / 2).

Each single-axis factor P^sigma_mt is evaluated for m >= t from the
terminating 2F1 in -tan^2(theta/2) (or +tanh^2(tau/2)); for m < t the
transposed branch P_mt = P_tm is used, so the phase of a compact factor is
i^|m - t| rather than i^(m - t). The boost factor has no phase. Together the
eight index orderings of (m, t, k, n) are covered by this one local rule.
"""

from __future__ import annotations

import cmath
import math
from typing import NamedTuple

import numpy as np

from . import kernels
from .errors import DomainError
from .quat import EulerAngles9, Quaternion, quat_exp, quat_mul, quaternion_angles
from .specfun import hyp2f1


class RepIndex(NamedTuple):
    sigma: int
    m: int
    n: int


class CompositeAngle(NamedTuple):
    theta: float = 0.0
    phi: float = 0.0
    tau: float = 0.0


def check_index(sigma: int, *indices: int) -> None:
    if int(sigma) != sigma or sigma < 0:
        raise DomainError(f"sigma must be a non-negative integer, got {sigma!r}")
    for q in indices:
        if int(q) != q or abs(q) > sigma:
            raise DomainError(f"index {q!r} out of range for sigma={sigma}")


def _angle(a) -> CompositeAngle:
    a = CompositeAngle(*a)
    if not all(math.isfinite(v) for v in a):
        raise DomainError(f"angles must be finite, got {tuple(a)!r}")
    return a


def casimir_eigenvalue(sigma: int) -> int:
    """Eigenvalue sigma(sigma + 3) of the first Casimir operator."""
    return sigma * (sigma + 3)


def composite_z(a) -> complex:
    """cos(theta + phi - i tau)."""
    theta, phi, tau = _angle(a)
    return cmath.cos(complex(theta + phi, -tau))


def _factor_value(sigma: int, m: int, t: int, s: float, c: float, sign: float) -> float:
    coef, pexp = kernels.factor_coefficients(sigma)
    i, k = m + sigma, t + sigma
    p = int(pexp[i, k])
    total = 0.0
    j = 0
    while p + 2 * j <= 2 * sigma:
        total += coef[i, k, j] * sign**j * s ** (p + 2 * j) * c ** (2 * sigma - p - 2 * j)
        j += 1
    return total


def trig_factor(sigma: int, m: int, t: int, theta: float) -> complex:
    """Compact single-axis factor P^sigma_mt(cos theta)."""
    check_index(sigma, m, t)
    h = 0.5 * theta
    p = abs(m - t)
    return 1j**p * _factor_value(sigma, m, t, math.sin(h), math.cos(h), -1.0)


def boost_factor(sigma: int, k: int, n: int, tau: float) -> complex:
    """Hyperbolic single-axis factor, the compact one continued to angle -i tau."""
    check_index(sigma, k, n)
    h = 0.5 * tau
    return complex(_factor_value(sigma, k, n, math.sinh(h), math.cosh(h), 1.0))


def hyperspherical_Z(idx, a=(0.0, 0.0, 0.0)) -> complex:
    """Z^sigma_mn at theta^q = theta + phi - i tau, by the triple sum."""
    sigma, m, n = idx
    check_index(sigma, m, n)
    theta, phi, tau = _angle(a)
    return kernels.z_element(sigma, m, n, theta, phi, tau)


def hyperspherical_Z_matrix(sigma: int, a=(0.0, 0.0, 0.0)) -> np.ndarray:
    """All Z^sigma_mn at once; row m + sigma, column n + sigma."""
    check_index(sigma)
    theta, phi, tau = _angle(a)
    return kernels.z_matrix(sigma, theta, phi, tau)


def hyp_form_parameters(sigma: int, m: int, n: int, lower_shift: int = 0) -> tuple[float, float, float]:
    """Parameters (A, B, C) of the hypergeometric particular solution.

    A = sigma + 3 + lam, B = -sigma + lam with lam = (|m-n| + |m+n|) / 2.
    C = |m - n| + 1 is the regular Frobenius exponent at z = 1 of the
    Fuchsian equation: the solution behaves like (1 - z)^(|m-n|/2) there.
    """
    lam = 0.5 * (abs(m - n) + abs(m + n))
    return sigma + 3 + lam, -sigma + lam, abs(m - n) + 1 + lower_shift


def hyperspherical_Z_hyp(idx, z: complex, c1: complex = 1.0, lower_shift: int = 0) -> complex:
    """Hypergeometric particular solution evaluated at z = cos theta^q.

    theta^q is the principal arccos of ``z``; the 2F1 argument is
    sin^2(theta^q / 2) = (1 - z) / 2.
    """
    sigma, m, n = idx
    check_index(sigma, m, n)
    z = complex(z)
    thq = cmath.acos(z)
    A, B, C = hyp_form_parameters(sigma, m, n, lower_shift)
    pre = cmath.sin(0.5 * thq) ** abs(m - n) * cmath.cos(0.5 * thq) ** abs(m + n)
    return complex(c1) * pre * complex(hyp2f1(A, B, C, 0.5 * (1 - z)))


def phase_exponent(m: int, n: int, e: EulerAngles9) -> Quaternion:
    """-i (m varphi^q + n (psi_1^q - i omega)), with i the quaternion unit."""
    qa = quaternion_angles(e)
    shifted = qa.psi1_q - Quaternion(0.0, e.omega, 0.0, 0.0)
    inner = m * qa.varphi_q + n * shifted
    return quat_mul(Quaternion(0.0, -1.0, 0.0, 0.0), inner)


def matrix_element_M(idx, e: EulerAngles9) -> Quaternion:
    """Quaternion-valued matrix element; the exponential multiplies Z from the left."""
    sigma, m, n = idx
    zval = hyperspherical_Z(idx, (e.theta, e.phi, e.tau))
    return quat_mul(quat_exp(phase_exponent(m, n, e)), Quaternion.from_complex(zval))


def matrix_element_complex(idx, varphi: float, psi: float, a=(0.0, 0.0, 0.0)) -> complex:
    """Complex section e^(-i(m varphi + n psi)) Z^sigma_mn, all quaternion axes off."""
    sigma, m, n = idx
    return cmath.exp(-1j * (m * varphi + n * psi)) * hyperspherical_Z(idx, a)
