"""Degenerations of Z^sigma_mn onto the smaller homogeneous spaces.

H^4 (boost only), S^3 (one compact angle), the quaternion 2-sphere (n = 0)
and the ordinary 2-sphere (n = 0, one compact angle, azimuthal phase).

With the calibrated phase, on the compact section

    Z^sigma_m0(cos theta) = i^|m| sqrt((sigma-|m|)! / (sigma+|m|)!) P_sigma^|m|(cos theta)

where P_l^k carries no Condon-Shortley sign.
"""

from __future__ import annotations

import cmath
import enum
import math

from .harmonics import check_index, hyperspherical_Z


class ReductionKind(enum.Enum):
    hyperboloid_H4 = "hyperboloid_H4"
    sphere_S3 = "sphere_S3"
    quaternion_S2 = "quaternion_S2"
    sphere_S2 = "sphere_S2"


def jacobi_function(idx, tau: float) -> complex:
    """Jacobi function on H^4: Z at (0, 0, tau). Real-valued."""
    return hyperspherical_Z(idx, (0.0, 0.0, tau))


def gen_spherical(idx, theta: float) -> complex:
    """Generalized spherical function on S^3: Z at (theta, 0, 0)."""
    return hyperspherical_Z(idx, (theta, 0.0, 0.0))


def associated_Z(sigma: int, m: int, a=(0.0, 0.0, 0.0)) -> complex:
    """Associated function on the quaternion 2-sphere: the n = 0 column."""
    return hyperspherical_Z((sigma, m, 0), a)


def associated_legendre_constant(sigma: int, m: int) -> complex:
    """c with Z^sigma_m0(cos theta) = c * P_sigma^|m|(cos theta)."""
    check_index(sigma, m)
    k = abs(m)
    return 1j**k * math.sqrt(math.factorial(sigma - k) / math.factorial(sigma + k))


def harmonic_normalization(sigma: int, m: int) -> complex:
    """N(sigma, m) = sqrt((2 sigma + 1) / 4 pi) * i^(-|m|).

    The i-power cancels the calibrated phase of the m0 column, leaving the
    Condon-Shortley-free real harmonic times e^(i m azimuth).
    """
    check_index(sigma, m)
    return math.sqrt((2 * sigma + 1) / (4 * math.pi)) * (-1j) ** abs(m)


def spherical_harmonic(sigma: int, m: int, theta: float, azimuth: float) -> complex:
    """Y^m_sigma(theta, azimuth), unit-normalized over S^2."""
    return (
        harmonic_normalization(sigma, m)
        * cmath.exp(1j * m * azimuth)
        * gen_spherical((sigma, m, 0), theta)
    )
