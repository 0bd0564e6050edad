import cmath
import math

import pytest
from hypothesis import given, strategies as st

from desitter.quat import (
    I, J, K, ONE, EulerAngles9, Quaternion, quat_exp, quat_mul, quaternion_angles,
)

# subnormal products would defeat the relative tolerance
comp = st.floats(-10, 10, allow_nan=False).map(lambda v: 0.0 if abs(v) < 1e-100 else v)
quats = st.builds(Quaternion, comp, comp, comp, comp)
small = st.floats(-2.5, 2.5, allow_nan=False)
small_quats = st.builds(Quaternion, small, small, small, small)


def test_identity_element():
    q = Quaternion(0.3, -1.2, 2.0, 0.7)
    assert quat_mul(ONE, q) == q
    assert quat_mul(q, ONE) == q


def test_hamilton_relations():
    assert quat_mul(I, J) == K
    assert quat_mul(J, I) == -K
    assert quat_mul(J, K) == I
    assert quat_mul(K, I) == J
    for u in (I, J, K):
        assert quat_mul(u, u) == -ONE
    assert quat_mul(quat_mul(I, J), K) == -ONE


def test_noncommutative_witness():
    a, b = Quaternion(1, 2, 3, 4), Quaternion(-2, 0.5, 1, 0)
    assert not quat_mul(a, b).isclose(quat_mul(b, a), 1e-6)


@given(quats, quats)
def test_norm_is_multiplicative(a, b):
    # direct norm computation as the oracle
    lhs = quat_mul(a, b).norm()
    rhs = math.sqrt(sum(v * v for v in a)) * math.sqrt(sum(v * v for v in b))
    assert lhs == pytest.approx(rhs, rel=1e-13, abs=1e-300)


@given(quats)
def test_conjugate_product_is_real(q):
    p = quat_mul(q, q.conj())
    n2 = q.norm() ** 2
    assert p.w == pytest.approx(n2, rel=1e-13, abs=1e-300)
    for v in (p.x, p.y, p.z):
        assert abs(v) <= 1e-13 * max(1.0, n2)


@given(quats, quats, quats)
def test_associative(a, b, c):
    lhs = quat_mul(quat_mul(a, b), c)
    rhs = quat_mul(a, quat_mul(b, c))
    scale = max(1.0, a.norm() * b.norm() * c.norm())
    assert all(abs(x - y) <= 1e-13 * scale for x, y in zip(lhs, rhs))


def test_exp_examples():
    assert quat_exp(Quaternion()) == ONE
    assert quat_exp(Quaternion(0, math.pi / 2, 0, 0)).isclose(I, 1e-15)
    assert quat_exp(Quaternion(0, 0, 0, math.pi)).isclose(-ONE, 1e-15)


def test_exp_small_vector_branch():
    q = Quaternion(0.1, 1e-6, -2e-6, 3e-7)
    r = q.vector_norm()
    e = math.exp(0.1)
    want = Quaternion(e * math.cos(r), *(e * math.sin(r) / r * v for v in (q.x, q.y, q.z)))
    assert quat_exp(q).isclose(want, 1e-15)
    assert quat_exp(Quaternion(0.0, 1e-4, 0, 0)).isclose(quat_exp(Quaternion(0.0, 1.0000001e-4, 0, 0)), 1e-10)


def _norm_le_10(q):
    return q.norm() <= 10


@given(quats.filter(_norm_le_10))
def test_exp_inverse(q):
    p = quat_mul(quat_exp(q), quat_exp(-q))
    assert p.isclose(ONE, 1e-12)


@given(small, small, small, st.sampled_from([I, J, K, Quaternion(0, 0.6, 0, 0.8)]))
def test_exp_commuting_arguments(w1, t1, t2, axis):
    a = Quaternion(w1, 0, 0, 0) + t1 * axis
    b = t2 * axis
    lhs = quat_mul(quat_exp(a), quat_exp(b))
    rhs = quat_exp(a + b)
    assert all(abs(x - y) <= 1e-12 * max(1.0, rhs.norm()) for x, y in zip(lhs, rhs))


@given(comp, comp)
def test_complex_subalgebra(re, im):
    q = quat_exp(Quaternion(re, im, 0, 0))
    c = cmath.exp(complex(re, im))
    assert q.y == 0 and q.z == 0
    assert abs(q.to_complex() - c) <= 1e-13 * abs(c)


def test_complex_embedding_multiplication():
    a, b = 1.5 - 0.5j, -0.25 + 2j
    assert quat_mul(Quaternion.from_complex(a), Quaternion.from_complex(b)).to_complex() == pytest.approx(a * b)


def test_quaternion_angles_zero():
    qa = quaternion_angles(EulerAngles9())
    assert all(q == Quaternion() for q in qa)


def test_quaternion_angles_theta():
    qa = quaternion_angles(EulerAngles9(theta=0.4, phi=1.1, tau=-0.3))
    assert qa.theta_q == Quaternion(1.5, 0.3, 0.0, 0.0)


@given(st.builds(EulerAngles9, *(st.floats(-5, 5, allow_nan=False) for _ in range(9))))
def test_quaternion_angle_relations(e):
    qa = quaternion_angles(e)
    assert (qa.psi_q + Quaternion(0, e.omega, 0, 0)).isclose(qa.psi1_q, 1e-12)
    assert qa.theta_q.y == 0 and qa.theta_q.z == 0
    assert qa.varphi_q == Quaternion(e.varphi, -e.epsilon, e.varsigma, 0)


def test_euler_angles_must_be_finite():
    with pytest.raises(ValueError):
        EulerAngles9(theta=math.inf)
