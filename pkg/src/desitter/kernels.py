"""Backend selection for the triple-sum kernels.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python twin. Set ``DESITTER_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import _kernels_py
from .specfun import gamma_ratio_sqrt, hyp2f1_terms

if os.environ.get("DESITTER_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"


@lru_cache(maxsize=None)
def factor_coefficients(sigma: int) -> tuple[np.ndarray, np.ndarray]:
    """Coefficient table of the single-axis factor matrices for degree ``sigma``.

    Entry ``coef[i, k, j]`` (rows m = i - sigma, columns t = k - sigma) is
    R(M, T) / p! * (M - sigma)_j (-T - sigma)_j / ((p + 1)_j j!), where
    (M, T) orders (m, t) so that M >= T, p = M - T and R is the square-root
    factorial ratio. The j-sum is the terminating 2F1 in -tan^2 (compact) or
    tanh^2 (boost), multiplied through by cos^(2 sigma).
    """
    if sigma < 0:
        raise ValueError("sigma must be non-negative")
    n = 2 * sigma + 1
    coef = np.zeros((n, n, sigma + 1))
    pexp = np.zeros((n, n), dtype=np.int32)
    for i in range(n):
        for k in range(n):
            big, small = max(i, k) - sigma, min(i, k) - sigma
            p = big - small
            pexp[i, k] = p
            base = gamma_ratio_sqrt(sigma, big, small) / math.factorial(p)
            terms = hyp2f1_terms(big - sigma, -small - sigma, Fraction(p + 1), Fraction(1))
            for j, term in enumerate(terms):
                if term == 0:
                    break
                coef[i, k, j] = base * float(term)
    coef.setflags(write=False)
    pexp.setflags(write=False)
    return coef, pexp


def compact_matrix(sigma: int, theta: float) -> np.ndarray:
    return _impl.compact_matrix(*factor_coefficients(sigma), sigma, float(theta))


def boost_matrix(sigma: int, tau: float) -> np.ndarray:
    return _impl.boost_matrix(*factor_coefficients(sigma), sigma, float(tau))


def z_matrix(sigma: int, theta: float, phi: float, tau: float) -> np.ndarray:
    return _impl.z_matrix(*factor_coefficients(sigma), sigma, float(theta), float(phi), float(tau))


def z_element(sigma: int, m: int, n: int, theta: float, phi: float, tau: float) -> complex:
    return _impl.z_element(
        *factor_coefficients(sigma), sigma, m + sigma, n + sigma,
        float(theta), float(phi), float(tau),
    )


def z_matrices(sigma: int, angles) -> np.ndarray:
    """Stack of Z matrices, one per row (theta, phi, tau) of ``angles``."""
    return _impl.z_matrices(*factor_coefficients(sigma), sigma, angles)
