"""Independent oracles and residual checks for the hyperspherical functions."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from numpy.polynomial import Polynomial

from .errors import CalibrationError, DomainError, InconclusiveError
from .harmonics import (
    CompositeAngle,
    RepIndex,
    casimir_eigenvalue,
    check_index,
    composite_z,
    hyperspherical_Z,
    hyperspherical_Z_hyp,
    hyperspherical_Z_matrix,
)

ORACLE_SIGMA_MAX = 8

# Z_mn = i^(p (m - n)) * oracle_mn; p found by calibrate_convention() at sigma = 1
CONVENTION_I_POWER = 3


@dataclass(frozen=True)
class OdeResidualReport:
    idx: RepIndex
    z: complex
    residual: float
    scale: float

    @property
    def relative(self) -> float:
        return self.residual / self.scale if self.scale > 0 else self.residual


@dataclass(frozen=True)
class OracleMatrix:
    sigma: int
    entries: np.ndarray  # row m + sigma, column n + sigma

    def entry(self, m: int, n: int) -> complex:
        return complex(self.entries[m + self.sigma, n + self.sigma])


def fuchsian_terms(idx, z: complex, f: complex, df: complex, d2f: complex,
                   eigenvalue: float | None = None) -> tuple[complex, ...]:
    """The four terms of
    (1 - z^2) f'' - 2 z f' - (m^2 + n^2 - 2 m n z) / (1 - z^2) f + sigma(sigma+3) f.
    """
    sigma, m, n = idx
    if eigenvalue is None:
        eigenvalue = casimir_eigenvalue(sigma)
    w = 1 - z * z
    return (
        w * d2f,
        -2 * z * df,
        -(m * m + n * n - 2 * m * n * z) / w * f,
        eigenvalue * f,
    )


def ode_residual(idx, a, h: float = 1e-3, eigenvalue: float | None = None) -> OdeResidualReport:
    """Finite-difference residual of the Fuchsian equation applied to Z at ``a``.

    Derivatives are taken along s -> cos(theta + phi + s - i tau) with 5-point
    central differences of step h * max(1, |z|) and converted to d/dz by the
    chain rule. ``eigenvalue`` overrides sigma(sigma + 3).
    """
    sigma, m, n = idx
    check_index(sigma, m, n)
    if not 1e-6 <= h <= 1e-3:
        raise DomainError(f"step h must lie in [1e-6, 1e-3], got {h!r}")
    theta, phi, tau = CompositeAngle(*a)
    thq = complex(theta + phi, -tau)
    z = cmath.cos(thq)
    step = h * max(1.0, abs(z))
    zs = -cmath.sin(thq)
    # the path meets z = +-1 exactly where sin(theta^q) vanishes
    if abs(zs) <= 4 * step:
        raise DomainError(f"FD stencil at z={z!r} crosses a singular point")
    f = {k: hyperspherical_Z(idx, (theta + k * step, phi, tau)) for k in (-2, -1, 0, 1, 2)}
    f_s = (f[-2] - 8 * f[-1] + 8 * f[1] - f[2]) / (12 * step)
    f_ss = (-f[-2] + 16 * f[-1] - 30 * f[0] + 16 * f[1] - f[2]) / (12 * step * step)
    df = f_s / zs
    # z_ss = -cos(theta^q) = -z
    d2f = (f_ss + df * z) / (zs * zs)
    terms = fuchsian_terms(idx, z, f[0], df, d2f, eigenvalue)
    return OdeResidualReport(
        idx=RepIndex(sigma, m, n),
        z=z,
        residual=abs(sum(terms)),
        scale=max(abs(t) for t in terms),
    )


def spin_generator(sigma: int) -> np.ndarray:
    """J_y of the (2 sigma + 1)-dimensional representation, ascending-m basis."""
    ms = np.arange(-sigma, sigma + 1)
    jp = np.zeros((2 * sigma + 1, 2 * sigma + 1))
    for i, m in enumerate(ms[:-1]):
        jp[i + 1, i] = math.sqrt(sigma * (sigma + 1) - m * (m + 1))
    return (jp - jp.T) / 2j


def oracle_rep_matrix(sigma: int, angle: complex) -> OracleMatrix:
    """exp(-i angle J_y) by eigendecomposition with the exact spectrum -sigma..sigma."""
    if int(sigma) != sigma or sigma < 0:
        raise DomainError(f"sigma must be a non-negative integer, got {sigma!r}")
    if sigma > ORACLE_SIGMA_MAX:
        raise DomainError(f"oracle limited to sigma <= {ORACLE_SIGMA_MAX}, got {sigma}")
    mu, vecs = np.linalg.eigh(spin_generator(sigma))
    exact = np.arange(-sigma, sigma + 1, dtype=float)
    if not np.allclose(mu, exact, atol=1e-9):
        raise RuntimeError("spin generator spectrum is not -sigma..sigma")
    phases = np.exp(-1j * complex(angle) * exact)
    return OracleMatrix(sigma, (vecs * phases) @ vecs.conj().T)


def calibrate_convention(a=(0.37, 0.21, 0.13), tol: float = 1e-10) -> int:
    """Find p with Z_mn = i^(p (m - n)) oracle_mn at sigma = 1.

    Solved on the diagonal and the first off-diagonals; anything that is not
    a consistent power of i raises CalibrationError.
    """
    theta, phi, tau = a
    z = hyperspherical_Z_matrix(1, a)
    o = oracle_rep_matrix(1, complex(theta + phi, -tau)).entries
    for i in range(3):
        if abs(z[i, i] - o[i, i]) > tol * max(1.0, abs(o[i, i])):
            raise CalibrationError(f"diagonal mismatch at m={i - 1}: Z={z[i, i]!r}, oracle={o[i, i]!r}")
    up = [z[i + 1, i] / o[i + 1, i] for i in range(2)]  # m - n = +1
    down = [z[i, i + 1] / o[i, i + 1] for i in range(2)]  # m - n = -1
    for p in range(4):
        w = 1j**p
        if all(abs(r - w) < tol for r in up) and all(abs(r - 1 / w) < tol for r in down):
            return p
    raise CalibrationError(f"no power of i fits off-diagonal ratios {up!r}, {down!r}")


def convention_map(sigma: int, entries: np.ndarray, power: int = CONVENTION_I_POWER) -> np.ndarray:
    ms = np.arange(-sigma, sigma + 1)
    diff = ms[:, None] - ms[None, :]
    return (1j ** (power * diff % 4)) * entries


def check_addition(idx, a) -> float:
    """|Z(idx, a) - mapped oracle entry at theta + phi - i tau|."""
    sigma, m, n = idx
    theta, phi, tau = CompositeAngle(*a)
    o = oracle_rep_matrix(sigma, complex(theta + phi, -tau)).entries
    mapped = convention_map(sigma, o)[m + sigma, n + sigma]
    return abs(hyperspherical_Z(idx, a) - mapped)


def check_eq5_eq6_ratio(idx, thetas, phi: float = 0.0, tau: float = 0.0,
                        lower_shift: int = 0, zero_rtol: float = 1e-8) -> float:
    """max |r - mean r| / |mean r| of r(theta) = Z / Z_hyp over the probes.

    Probes where the hypergeometric form (nearly) vanishes are skipped.
    """
    thetas = list(thetas)
    if len(thetas) < 5:
        raise DomainError("need at least 5 probe angles")
    pairs = []
    for th in thetas:
        a = (th, phi, tau)
        z = composite_z(a)
        if abs(1 - z * z) < 1e-12:
            raise DomainError(f"probe theta={th!r} sits on a singular point")
        pairs.append((hyperspherical_Z(idx, a), hyperspherical_Z_hyp(idx, z, 1.0, lower_shift)))
    big = max(abs(h) for _, h in pairs)
    ratios = [z / h for z, h in pairs if big > 0 and abs(h) > zero_rtol * big]
    if not ratios:
        raise InconclusiveError(f"every probe skipped for {tuple(idx)!r}")
    mean = sum(ratios) / len(ratios)
    spread = max(abs(r - mean) for r in ratios)
    if mean == 0:
        return 0.0 if spread == 0 else math.inf
    return spread / abs(mean)


def unitarity_deviation(sigma: int, theta: float, phi: float = 0.0) -> float:
    """max |Z Z^dagger - I| on the compact section tau = 0."""
    z = hyperspherical_Z_matrix(sigma, (theta, phi, 0.0))
    return float(np.abs(z @ z.conj().T - np.eye(2 * sigma + 1)).max())


def legendre_rodrigues(degree: int, order: int = 0) -> Polynomial:
    """(d/dx)^order of P_degree from (1 / (2^l l!)) (d/dx)^l (x^2 - 1)^l."""
    base = Polynomial([-1.0, 0.0, 1.0]) ** degree
    p = base.deriv(degree) / (2.0**degree * math.factorial(degree)) if degree else Polynomial([1.0])
    return p.deriv(order) if order else p


def associated_legendre(degree: int, order: int, x: float) -> float:
    """P_l^|m|(x) = (1-x^2)^(|m|/2) (d/dx)^|m| P_l(x), no Condon-Shortley phase."""
    k = abs(order)
    return float((1 - x * x) ** (0.5 * k) * legendre_rodrigues(degree, k)(x))


def rational_hyp2f1(a: int, b: int, c: int, x: Fraction) -> Fraction:
    """Exact terminating 2F1 by explicit Pochhammer products."""

    def poch(q, j):
        out = Fraction(1)
        for r in range(j):
            out *= q + r
        return out

    total = Fraction(0)
    for j in range(-a + 1):
        den = poch(Fraction(c), j) * math.factorial(j)
        if den == 0:
            raise DomainError("pole in rational oracle")
        total += poch(Fraction(a), j) * poch(Fraction(b), j) / den * x**j
    return total
