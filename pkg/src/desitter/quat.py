"""Real quaternions and the quaternionic Euler angles of Sp(1,1).

Components are always ordered ``(w, x, y, z)`` for ``(1, i, j, k)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

# below this |v| the sinc factor switches to its Taylor expansion
_SINC_SWITCH = 1e-4


@dataclass(frozen=True)
class Quaternion:
    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def from_complex(cls, c: complex) -> "Quaternion":
        """Embed a complex number in the (1, i) subalgebra."""
        c = complex(c)
        return cls(c.real, c.imag, 0.0, 0.0)

    def to_complex(self) -> complex:
        return complex(self.w, self.x)

    def __iter__(self):
        return iter((self.w, self.x, self.y, self.z))

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return quat_mul(self, other)
        s = float(other)
        return Quaternion(self.w * s, self.x * s, self.y * s, self.z * s)

    def __rmul__(self, other):
        # only real scalars commute with quaternions
        s = float(other)
        return Quaternion(self.w * s, self.x * s, self.y * s, self.z * s)

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> float:
        return math.sqrt(self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z)

    def vector_norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def exp(self) -> "Quaternion":
        return quat_exp(self)

    def isclose(self, other: "Quaternion", tol: float = 1e-12) -> bool:
        return all(abs(a - b) <= tol for a, b in zip(self, other))


ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def quat_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product ``a * b`` with i^2 = j^2 = k^2 = ijk = -1."""
    return Quaternion(
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    )


def quat_exp(q: Quaternion) -> Quaternion:
    """exp(w + v) = e^w (cos|v| + v sin|v| / |v|)."""
    ew = math.exp(q.w)
    r = q.vector_norm()
    if r < _SINC_SWITCH:
        r2 = r * r
        sinc = 1.0 - r2 / 6.0 + r2 * r2 / 120.0
    else:
        sinc = math.sin(r) / r
    s = ew * sinc
    return Quaternion(ew * math.cos(r), s * q.x, s * q.y, s * q.z)


@dataclass(frozen=True)
class EulerAngles9:
    """The nine real Euler angles of Sp(1,1).

    ``tau``, ``epsilon`` and ``omega`` are unbounded hyperbolic parameters.
    """

    psi: float = 0.0
    varphi: float = 0.0
    theta: float = 0.0
    phi: float = 0.0
    varsigma: float = 0.0
    chi: float = 0.0
    tau: float = 0.0
    epsilon: float = 0.0
    omega: float = 0.0

    def __post_init__(self):
        for name, value in self.__dict__.items():
            if not math.isfinite(value):
                raise ValueError(f"Euler angle {name} must be finite, got {value!r}")


class QuaternionAngles(NamedTuple):
    theta_q: Quaternion
    varphi_q: Quaternion
    psi_q: Quaternion
    psi1_q: Quaternion


def quaternion_angles(e: EulerAngles9) -> QuaternionAngles:
    """Build theta^q, varphi^q, psi^q and psi_1^q from the real angles.

    theta^q = theta + phi - i tau
    varphi^q = varphi - i epsilon + j varsigma
    psi^q = psi - i epsilon - i omega + k chi
    psi_1^q = psi - i epsilon + k chi
    """
    return QuaternionAngles(
        theta_q=Quaternion(e.theta + e.phi, -e.tau, 0.0, 0.0),
        varphi_q=Quaternion(e.varphi, -e.epsilon, e.varsigma, 0.0),
        psi_q=Quaternion(e.psi, -e.epsilon - e.omega, 0.0, e.chi),
        psi1_q=Quaternion(e.psi, -e.epsilon, 0.0, e.chi),
    )
