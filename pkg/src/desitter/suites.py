"""Named verification suites driven by ``desitter verify``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .harmonics import casimir_eigenvalue, hyperspherical_Z, hyperspherical_Z_matrix
from .reductions import jacobi_function, spherical_harmonic
from .specfun import hyp2f1_terminating
from .verify import (
    CONVENTION_I_POWER,
    calibrate_convention,
    check_addition,
    check_eq5_eq6_ratio,
    legendre_rodrigues,
    ode_residual,
    rational_hyp2f1,
    unitarity_deviation,
)

SUITES = ("identity", "ode", "addition", "composite", "ratio", "unitarity", "reductions", "specfun")

# probe grids and draw counts; tolerances are the acceptance ones
ODE_PROBES = 20
ODE_STEP = 1e-3
ADDITION_DRAWS = 100
COMPOSITE_DRAWS = 50
RATIO_GRID = tuple(np.linspace(0.3, 2.8, 8))
UNITARITY_ANGLES = 10
JACOBI_TAUS = (0.1, 0.5, 1.0, 2.0)
RATIONAL_ARGS = (Fraction(-3), Fraction(-1, 2), Fraction(-1, 7), Fraction(1, 3), Fraction(9, 10))


@dataclass(frozen=True)
class VerifyReport:
    check_name: str
    cases_run: int
    max_deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tolerance

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{self.check_name:<22} cases={self.cases_run:<6d} "
            f"max_dev={self.max_deviation:.6e} tol={self.tolerance:.1e} {status}"
        )


def all_indices(sigma_max: int):
    for sigma in range(sigma_max + 1):
        for m in range(-sigma, sigma + 1):
            for n in range(-sigma, sigma + 1):
                yield sigma, m, n


def _random_index(rng, sigma_max):
    sigma = int(rng.integers(0, sigma_max + 1))
    m, n = (int(v) for v in rng.integers(-sigma, sigma + 1, size=2))
    return sigma, m, n


def ode_probes(rng, count: int = ODE_PROBES, tau_max: float = 1.5):
    """Half real probes on (0.3, pi - 0.3), half with complex z."""
    out = []
    for r in range(count):
        total = rng.uniform(0.3, math.pi - 0.3)
        split = rng.uniform(0.0, 1.0)
        tau = 0.0 if r < count // 2 else rng.uniform(-tau_max, tau_max)
        out.append((split * total, (1 - split) * total, tau))
    return out


def identity_check(sigma_max: int = 6, tol: float = 1e-14) -> VerifyReport:
    dev, cases = 0.0, 0
    for sigma in range(sigma_max + 1):
        z = hyperspherical_Z_matrix(sigma)
        dev = max(dev, float(np.abs(z - np.eye(2 * sigma + 1)).max()))
        cases += z.size
    return VerifyReport("identity", cases, dev, tol)


def ode_check(sigma_max, rng, tol=1e-6, perturb=False) -> VerifyReport:
    dev, cases = 0.0, 0
    probes = ode_probes(rng)
    for idx in all_indices(sigma_max):
        ev = casimir_eigenvalue(idx[0]) + (1 if perturb else 0)
        for a in probes:
            dev = max(dev, ode_residual(idx, a, ODE_STEP, eigenvalue=ev).relative)
            cases += 1
    return VerifyReport("ode_perturbed" if perturb else "ode", cases, dev, tol)


def addition_check(sigma_max, rng, tol=1e-9, draws=ADDITION_DRAWS) -> VerifyReport:
    p = calibrate_convention()
    if p != CONVENTION_I_POWER:
        raise RuntimeError(f"calibration gave i^{p}, frozen convention is i^{CONVENTION_I_POWER}")
    dev = 0.0
    for _ in range(draws):
        idx = _random_index(rng, sigma_max)
        a = (rng.uniform(-math.pi, math.pi), rng.uniform(-math.pi, math.pi), rng.uniform(-2, 2))
        dev = max(dev, check_addition(idx, a))
    return VerifyReport("addition", draws, dev, tol)


def composite_check(sigma_max, rng, tol=1e-10, draws=COMPOSITE_DRAWS) -> VerifyReport:
    dev = 0.0
    for _ in range(draws):
        idx = _random_index(rng, sigma_max)
        total = rng.uniform(-2 * math.pi, 2 * math.pi)
        split = rng.uniform(-1.0, 2.0)
        tau = rng.uniform(-2, 2)
        ref = hyperspherical_Z(idx, (total, 0.0, tau))
        for a in ((split * total, (1 - split) * total, tau), (0.0, total, tau)):
            dev = max(dev, abs(hyperspherical_Z(idx, a) - ref) / max(1.0, abs(ref)))
    return VerifyReport("composite", draws, dev, tol)


def ratio_check(sigma_max, tol=1e-8, lower_shift=0) -> VerifyReport:
    dev, cases = 0.0, 0
    for idx in all_indices(min(sigma_max, 3)):
        dev = max(dev, check_eq5_eq6_ratio(idx, RATIO_GRID, lower_shift=lower_shift))
        cases += 1
    return VerifyReport("ratio", cases, dev, tol)


def unitarity_check(sigma_max, rng, tol=1e-10) -> VerifyReport:
    dev, cases = 0.0, 0
    angles = [(rng.uniform(-math.pi, math.pi), rng.uniform(-math.pi, math.pi)) for _ in range(UNITARITY_ANGLES)]
    for sigma in range(sigma_max + 1):
        for theta, phi in angles:
            dev = max(dev, unitarity_deviation(sigma, theta, phi))
            cases += 1
    return VerifyReport("unitarity", cases, dev, tol)


def jacobi_check(sigma_max, tol=1e-10) -> VerifyReport:
    dev, cases = 0.0, 0
    for sigma in range(sigma_max + 1):
        legendre = legendre_rodrigues(sigma)
        for tau in JACOBI_TAUS:
            ref = legendre(math.cosh(tau))
            dev = max(dev, abs(jacobi_function((sigma, 0, 0), tau) - ref) / max(1.0, abs(ref)))
            cases += 1
    return VerifyReport("jacobi_legendre", cases, dev, tol)


def harmonic_gram(sigma_max: int, n_theta: int = 64, n_azimuth: int = 128) -> np.ndarray:
    """Gram matrix of Y^m_sigma, sigma <= sigma_max, by Gauss-Legendre x trapezoid."""
    x, w = np.polynomial.legendre.leggauss(n_theta)
    thetas = np.arccos(x)
    az = 2 * np.pi * np.arange(n_azimuth) / n_azimuth
    labels = [(s, m) for s in range(sigma_max + 1) for m in range(-s, s + 1)]
    values = np.empty((len(labels), n_theta, n_azimuth), dtype=complex)
    for r, (s, m) in enumerate(labels):
        col = np.array([spherical_harmonic(s, m, th, 0.0) for th in thetas])
        values[r] = col[:, None] * np.exp(1j * m * az)[None, :]
    weights = (w[:, None] * np.full(n_azimuth, 2 * np.pi / n_azimuth)[None, :]).ravel()
    flat = values.reshape(len(labels), -1)
    return (flat * weights) @ flat.conj().T


def harmonic_check(sigma_max, tol=1e-8) -> VerifyReport:
    gram = harmonic_gram(sigma_max)
    dev = float(np.abs(gram - np.eye(gram.shape[0])).max())
    return VerifyReport("harmonic_orthonormal", gram.size, dev, tol)


def terminating_cases(sigma_max: int = 6):
    """Every (a, b, c) of a compact or boost factor with first index >= second."""
    seen = set()
    for sigma in range(sigma_max + 1):
        for big in range(-sigma, sigma + 1):
            for small in range(-sigma, big + 1):
                case = (big - sigma, -small - sigma, big - small + 1)
                if case not in seen:
                    seen.add(case)
                    yield case


def specfun_check(sigma_max=6, tol=1e-12) -> VerifyReport:
    dev, cases = 0.0, 0
    for a, b, c in terminating_cases(sigma_max):
        for x in RATIONAL_ARGS:
            exact = rational_hyp2f1(a, b, c, x)
            got = hyp2f1_terminating(a, b, c, float(x))
            dev = max(dev, abs(got - float(exact)) / max(abs(float(exact)), 1e-300))
            cases += 1
    return VerifyReport("specfun_rational", cases, dev, tol)


def run_suite(name: str, sigma_max: int = 4, seed: int = 0, tolerance_scale: float = 1.0,
              perturb_eigenvalue: bool = False) -> list[VerifyReport]:
    if name != "all" and name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    names = SUITES if name == "all" else (name,)
    reports = []
    for suite in names:
        # each suite gets its own stream so results do not depend on suite order
        rng = np.random.default_rng([seed, SUITES.index(suite)])
        if suite == "identity":
            got = [identity_check(sigma_max)]
        elif suite == "ode":
            got = [ode_check(sigma_max, rng, perturb=perturb_eigenvalue)]
        elif suite == "addition":
            got = [addition_check(min(sigma_max, 8), rng)]
        elif suite == "composite":
            got = [composite_check(sigma_max, rng)]
        elif suite == "ratio":
            got = [ratio_check(sigma_max)]
        elif suite == "unitarity":
            got = [unitarity_check(sigma_max, rng)]
        elif suite == "reductions":
            got = [jacobi_check(sigma_max), harmonic_check(sigma_max)]
        else:
            got = [specfun_check(max(sigma_max, 0))]
        reports.extend(
            VerifyReport(r.check_name, r.cases_run, r.max_deviation, r.tolerance * tolerance_scale)
            for r in got
        )
    return reports

