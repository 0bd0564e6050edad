import cmath
import math

import numpy as np
import pytest

from desitter import verify
from desitter.errors import CalibrationError, DomainError, InconclusiveError
from desitter.harmonics import hyperspherical_Z
from desitter.suites import all_indices, ode_probes
from desitter.verify import (
    CONVENTION_I_POWER, calibrate_convention, check_addition, check_eq5_eq6_ratio,
    legendre_rodrigues, ode_residual, oracle_rep_matrix, rational_hyp2f1, spin_generator,
    unitarity_deviation,
)
from tests.test_specfun import frac_2f1
from fractions import Fraction

GRID = np.linspace(0.3, 2.8, 8)


def test_ode_residual_constant_function():
    rep = ode_residual((0, 0, 0), (0.7, 0.3, 0.2))
    assert rep.residual <= 1e-10 * max(rep.scale, 1.0)
    assert rep.z == pytest.approx(cmath.cos(complex(1.0, -0.2)))


def test_ode_residual_step_and_singularity():
    with pytest.raises(DomainError):
        ode_residual((1, 0, 0), (0.5, 0, 0), h=1e-8)
    with pytest.raises(DomainError):
        ode_residual((1, 0, 0), (0.5, 0, 0), h=1e-2)
    with pytest.raises(DomainError):
        ode_residual((1, 0, 0), (0.0, 0.0, 0.0))
    with pytest.raises(DomainError):
        ode_residual((2, 1, 0), (math.pi - 1e-4, 0.0, 0.0))


def test_ode_detector_sensitivity():
    # adding 1 to an annihilating eigenvalue leaves exactly |Z| on the left side
    idx, a = (2, 1, -1), (0.8, 0.1, 0.4)
    base = ode_residual(idx, a, eigenvalue=6 + 1)
    z = hyperspherical_Z(idx, a)
    honest = ode_residual(idx, a, eigenvalue=6)
    assert base.residual == pytest.approx(abs(z), rel=1e-5)
    assert honest.relative < 1e-7


def test_triple_sum_solves_equation_with_spin_eigenvalue():
    # the triple sum is a spin-sigma matrix element, so the Fuchsian operator
    # annihilates it for eigenvalue sigma(sigma + 1)
    rng = np.random.default_rng(11)
    probes = ode_probes(rng)
    worst = max(
        ode_residual(idx, a, eigenvalue=idx[0] * (idx[0] + 1)).relative
        for idx in all_indices(4) for a in probes
    )
    assert worst < 1e-6


def test_casimir_eigenvalue_does_not_annihilate_triple_sum():
    rep = ode_residual((1, 0, 0), (0.9, 0, 0))
    # for Z = cos theta^q the left side is 2z, with scale |4z|
    assert rep.relative == pytest.approx(0.5, rel=1e-6)


def test_spin_generator_hermitian():
    for s in range(5):
        g = spin_generator(s)
        np.testing.assert_allclose(g, g.conj().T)
        np.testing.assert_allclose(np.linalg.eigvalsh(g), np.arange(-s, s + 1), atol=1e-12)


def test_oracle_basic():
    for s in range(5):
        np.testing.assert_allclose(oracle_rep_matrix(s, 0).entries, np.eye(2 * s + 1), atol=1e-14)
    th = 0.83
    o = oracle_rep_matrix(1, th)
    assert o.entry(0, 0) == pytest.approx(math.cos(th), abs=1e-15)
    # standard small-d: d^1_{10} = -sin / sqrt(2)
    assert o.entry(1, 0) == pytest.approx(-math.sin(th) / math.sqrt(2), abs=1e-15)
    with pytest.raises(DomainError):
        oracle_rep_matrix(9, 0.1)


@pytest.mark.parametrize("s", range(7))
def test_oracle_group_law(s):
    rng = np.random.default_rng(s)
    for _ in range(5):
        a, b = rng.uniform(-5, 5, size=2)
        prod = oracle_rep_matrix(s, a).entries @ oracle_rep_matrix(s, b).entries
        np.testing.assert_allclose(prod, oracle_rep_matrix(s, a + b).entries, atol=1e-11)
    a, b = complex(1.2, -0.7), complex(-0.4, 0.5)
    prod = oracle_rep_matrix(s, a).entries @ oracle_rep_matrix(s, b).entries
    want = oracle_rep_matrix(s, a + b).entries
    assert np.abs(prod - want).max() <= 1e-11 * np.abs(want).max()


def test_oracle_unitarity_both_ways():
    for s in range(1, 5):
        u = oracle_rep_matrix(s, 1.3).entries
        assert np.abs(u @ u.conj().T - np.eye(2 * s + 1)).max() < 1e-12
        v = oracle_rep_matrix(s, -0.8j).entries
        assert np.abs(v @ v.conj().T - np.eye(2 * s + 1)).max() > 1e-2


def test_calibration_is_frozen():
    assert calibrate_convention() == CONVENTION_I_POWER
    assert calibrate_convention((1.1, -0.3, 0.6)) == CONVENTION_I_POWER


def test_calibration_failure_aborts(monkeypatch):
    real = verify.hyperspherical_Z_matrix
    monkeypatch.setattr(verify, "hyperspherical_Z_matrix", lambda s, a: real(s, a).T.conj())
    with pytest.raises(CalibrationError):
        calibrate_convention()
    monkeypatch.setattr(verify, "hyperspherical_Z_matrix", lambda s, a: 2 * real(s, a))
    with pytest.raises(CalibrationError):
        calibrate_convention()


def test_check_addition():
    assert check_addition((3, 1, -2), (0, 0, 0)) < 1e-15
    for idx in all_indices(4):
        assert check_addition(idx, (0.9, 0, 0)) < 1e-10
        assert check_addition(idx, (0.9, -1.4, 1.1)) < 1e-9


def test_ratio_trivial_and_top_row():
    assert check_eq5_eq6_ratio((0, 0, 0), GRID) == 0
    # when max(|m|, |n|) = sigma both forms reduce to sin^a cos^b
    for idx in [(1, 1, 0), (2, -2, 1), (3, 3, 3), (3, 1, -3)]:
        assert check_eq5_eq6_ratio(idx, GRID) < 1e-12


def test_ratio_preconditions(monkeypatch):
    with pytest.raises(DomainError):
        check_eq5_eq6_ratio((1, 0, 0), GRID[:4])
    with pytest.raises(DomainError):
        check_eq5_eq6_ratio((1, 0, 0), [0.0, 0.5, 1.0, 1.5, 2.0])
    monkeypatch.setattr(verify, "hyperspherical_Z_hyp", lambda *a, **k: 0j)
    with pytest.raises(InconclusiveError):
        check_eq5_eq6_ratio((1, 0, 0), GRID)


def test_ratio_lower_parameter_sensitivity():
    assert check_eq5_eq6_ratio((2, 0, 0), GRID, lower_shift=1) > 1e-3


def test_unitarity_deviation():
    assert unitarity_deviation(4, 0.3, 1.2) < 1e-12


def test_legendre_rodrigues():
    x = 0.37
    assert legendre_rodrigues(0)(x) == 1
    assert legendre_rodrigues(2)(x) == pytest.approx((3 * x * x - 1) / 2)
    assert legendre_rodrigues(3)(x) == pytest.approx((5 * x**3 - 3 * x) / 2)
    assert verify.associated_legendre(2, 1, x) == pytest.approx(3 * x * math.sqrt(1 - x * x))


def test_rational_oracle():
    x = Fraction(-5, 3)
    assert rational_hyp2f1(-4, -6, 3, x) == frac_2f1(-4, -6, 3, x)
