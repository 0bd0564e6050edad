import numpy as np
import pytest

from desitter import kernels
from tests.oracles import expm_z, spin1_boost, spin1_compact

rng = np.random.default_rng(2024)
ANGLES = [tuple(v) for v in rng.uniform([-3, -3, -2], [3, 3, 2], size=(6, 3))]


def test_backend_name():
    assert kernels.BACKEND in ("python", "cython")


def test_coefficient_table_shape():
    coef, pexp = kernels.factor_coefficients(3)
    assert coef.shape == (7, 7, 4)
    assert pexp[0, 6] == 6 and pexp[3, 3] == 0
    np.testing.assert_array_equal(coef[:, :, 0], coef[:, :, 0].T)
    with pytest.raises(ValueError):
        coef[0, 0, 0] = 1.0


@pytest.mark.parametrize("sigma", [0, 1, 2, 5])
def test_backend_matches_expm(backend, sigma):
    coef, pexp = kernels.factor_coefficients(sigma)
    for a in ANGLES:
        want = expm_z(sigma, *a)
        got = backend.z_matrix(coef, pexp, sigma, *a)
        assert np.abs(got - want).max() <= 1e-12 * max(1.0, np.abs(want).max())


def test_spin1_factors(backend):
    coef, pexp = kernels.factor_coefficients(1)
    for t in (0.0, 0.4, -2.2, np.pi):
        np.testing.assert_allclose(backend.compact_matrix(coef, pexp, 1, t), spin1_compact(t), atol=1e-15)
        np.testing.assert_allclose(backend.boost_matrix(coef, pexp, 1, t), spin1_boost(t), rtol=1e-14, atol=1e-15)


@pytest.mark.parametrize("sigma", [0, 3, 6])
def test_element_agrees_with_matrix(backend, sigma):
    coef, pexp = kernels.factor_coefficients(sigma)
    a = ANGLES[0]
    full = backend.z_matrix(coef, pexp, sigma, *a)
    for i in range(2 * sigma + 1):
        for j in range(2 * sigma + 1):
            assert abs(backend.z_element(coef, pexp, sigma, i, j, *a) - full[i, j]) <= 1e-13 * max(1, abs(full).max())


def test_stack_agrees_with_single(backend):
    coef, pexp = kernels.factor_coefficients(2)
    stack = backend.z_matrices(coef, pexp, 2, np.array(ANGLES))
    assert stack.shape == (len(ANGLES), 5, 5)
    for row, a in zip(stack, ANGLES):
        np.testing.assert_array_equal(row, backend.z_matrix(coef, pexp, 2, *a))
    assert backend.z_matrices(coef, pexp, 2, np.empty((0, 3))).shape == (0, 5, 5)


def test_backends_agree():
    from desitter import _kernels_py
    try:
        from desitter import _kernels
    except ImportError:
        pytest.skip("extension not built")
    for sigma in range(7):
        coef, pexp = kernels.factor_coefficients(sigma)
        for a in ANGLES:
            p = _kernels_py.z_matrix(coef, pexp, sigma, *a)
            c = _kernels.z_matrix(coef, pexp, sigma, *a)
            assert np.abs(p - c).max() <= 1e-13 * max(1.0, np.abs(p).max())
