"""Passage between single-qubit gates and unit quaternions.

A gate ``A`` in U(2) is divided by a square root of its determinant to land in
SU(2), read off as a unit quaternion, raised to a real power by de Moivre's
formula and mapped back. Matrices are plain ``(2, 2)`` complex numpy arrays.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .quaternion import Quaternion, UnitQuaternion, is_canonical, power, roots

MATRIX_TOL = 1e-10


class NotUnitaryError(ValueError):
    """Raised when a matrix fails the unitarity check."""


class NotSpecialUnitaryError(NotUnitaryError):
    """Raised when a unitary matrix does not have determinant 1."""


def as_unitary(a, tol: float = MATRIX_TOL) -> np.ndarray:
    """Validate ``a`` as a 2x2 unitary and return it as a complex array."""
    m = np.asarray(a, dtype=complex)
    if m.shape != (2, 2):
        raise NotUnitaryError(f"expected a 2x2 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise NotUnitaryError("matrix has non-finite entries")
    err = np.max(np.abs(m @ m.conj().T - np.eye(2)))
    if err > tol:
        raise NotUnitaryError(f"matrix is not unitary (max |A A^H - I| = {err:.3g})")
    if abs(abs(np.linalg.det(m)) - 1.0) > tol:
        raise NotUnitaryError("determinant does not have unit modulus")
    return m


def as_special_unitary(a, tol: float = MATRIX_TOL) -> np.ndarray:
    m = as_unitary(a, tol)
    d = np.linalg.det(m)
    if abs(d.real - 1.0) > tol or abs(d.imag) > tol:
        raise NotSpecialUnitaryError(
            f"determinant is {d:.6g}, not 1; use project_to_su2 to remove the phase"
        )
    return m


@dataclass(frozen=True)
class ComplexPairForm:
    """SU(2) element ``[[alpha, beta], [-conj(beta), conj(alpha)]]``."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        n2 = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(n2 - 1.0) > 1e-12:
            raise NotSpecialUnitaryError(f"|alpha|^2 + |beta|^2 = {n2!r}, expected 1")

    @classmethod
    def from_matrix(cls, u) -> ComplexPairForm:
        m = as_special_unitary(u)
        if abs(m[1, 0] + np.conj(m[0, 1])) > MATRIX_TOL or abs(m[1, 1] - np.conj(m[0, 0])) > MATRIX_TOL:
            raise NotSpecialUnitaryError("matrix is not in [[a, b], [-b*, a*]] form")
        alpha, beta = complex(m[0, 0]), complex(m[0, 1])
        # renormalise away the slack allowed by MATRIX_TOL
        n = math.sqrt(abs(alpha) ** 2 + abs(beta) ** 2)
        return cls(alpha / n, beta / n)

    def matrix(self) -> np.ndarray:
        a, b = self.alpha, self.beta
        return np.array([[a, b], [-b.conjugate(), a.conjugate()]], dtype=complex)


def quat_to_su2(q: UnitQuaternion) -> np.ndarray:
    """``a + bi + cj + dk`` -> ``[[a+bi, c+di], [-c+di, a-bi]]``."""
    a, b, c, d = q.as_tuple()
    return np.array([[complex(a, b), complex(c, d)], [complex(-c, d), complex(a, -b)]])


def su2_to_quat(u) -> UnitQuaternion:
    """Inverse of :func:`quat_to_su2`; ``u`` must have determinant 1."""
    m = as_special_unitary(u)
    # average the redundant entries so both rows contribute
    a = (m[0, 0].real + m[1, 1].real) / 2
    b = (m[0, 0].imag - m[1, 1].imag) / 2
    c = (m[0, 1].real - m[1, 0].real) / 2
    d = (m[0, 1].imag + m[1, 0].imag) / 2
    return UnitQuaternion.normalized(Quaternion(a, b, c, d))


def project_to_su2(a) -> tuple[np.ndarray, complex]:
    """Factor a unitary as ``a == phase * special`` with ``det(special) == 1``.

    Of the two candidates ``±special`` the one whose quaternion is canonical
    (see :func:`qfrac.quaternion.is_canonical`) is returned, together with the
    matching square root of ``det(a)``.
    """
    m = as_unitary(a)
    phase = cmath.sqrt(complex(np.linalg.det(m)))
    phase /= abs(phase)
    special = m / phase
    if not is_canonical(su2_to_quat(special)):
        special, phase = -special, -phase
    return special, phase


def gate_exponent(a, exponent: float, recover_phase: bool = False) -> np.ndarray:
    """Real power ``a**exponent`` along the quaternion principal branch.

    Without ``recover_phase`` the SU(2) representative is returned, equal to
    the true power up to a global phase. With it the result is multiplied by
    ``phase**exponent``, ``phase`` being the square root of ``det(a)`` chosen
    by :func:`project_to_su2`.
    """
    exponent = float(exponent)
    if not math.isfinite(exponent):
        raise ValueError(f"exponent must be finite, got {exponent!r}")
    special, phase = project_to_su2(a)
    out = quat_to_su2(power(su2_to_quat(special), exponent))
    if recover_phase:
        out = cmath.exp(1j * cmath.phase(phase) * exponent) * out
    return out


def gate_power(a, k: float, recover_phase: bool = False) -> np.ndarray:
    """Return ``B`` with ``B**k == a`` (up to global phase unless ``recover_phase``)."""
    k = float(k)
    if k == 0.0 or not math.isfinite(k):
        raise ValueError(f"root order must be finite and nonzero, got {k!r}")
    return gate_exponent(a, 1.0 / k, recover_phase)


def gate_roots(a, n: int, recover_phase: bool = False) -> list[np.ndarray]:
    """All ``n`` SU(2) branches ``B'`` with ``B'**n == special(a)``, principal first."""
    special, phase = project_to_su2(a)
    out = [quat_to_su2(r) for r in roots(su2_to_quat(special), n)]
    if recover_phase:
        scale = cmath.exp(1j * cmath.phase(phase) / n)
        out = [scale * b for b in out]
    return out
