"""Hyperspherical functions and matrix elements of class-1 representations of SO0(1,4)."""

from .errors import CalibrationError, ConvergenceError, DesitterError, DomainError, InconclusiveError
from .harmonics import (
    CompositeAngle,
    RepIndex,
    boost_factor,
    casimir_eigenvalue,
    composite_z,
    hyperspherical_Z,
    hyperspherical_Z_hyp,
    hyperspherical_Z_matrix,
    matrix_element_M,
    matrix_element_complex,
    trig_factor,
)
from .kernels import BACKEND
from .quat import EulerAngles9, Quaternion, quat_exp, quat_mul, quaternion_angles
from .reductions import associated_Z, gen_spherical, jacobi_function, spherical_harmonic

__version__ = "0.1.0"
