"""Quaternion arithmetic, polar form and de Moivre powers of unit quaternions.

Quaternions are stored as ``(w, x, y, z)`` for ``w + x i + y j + z k``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

UNIT_TOL = 1e-12
# vector parts shorter than this are treated as real quaternions
AXIS_TOL = 1e-12


class QuaternionDomainError(ValueError):
    """Raised when an operation is undefined for its quaternion argument."""


class DegenerateRootError(QuaternionDomainError):
    """Raised when asked to enumerate roots of a real unit quaternion."""


@dataclass(frozen=True)
class Quaternion:
    w: float
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        for name in ("w", "x", "y", "z"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise QuaternionDomainError(f"component {name} is not finite: {value}")
            object.__setattr__(self, name, value)

    @property
    def vector(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.w, self.x, self.y, self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return mul(self, other)
        return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)

    def __rmul__(self, other):
        return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)

    def __add__(self, other: Quaternion) -> Quaternion:
        return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: Quaternion) -> Quaternion:
        return Quaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self):
        return type(self)(-self.w, -self.x, -self.y, -self.z)

    def __abs__(self) -> float:
        return norm(self)

    def __str__(self) -> str:
        return f"{self.w:g}{self.x:+g}i{self.y:+g}j{self.z:+g}k"


@dataclass(frozen=True)
class UnitQuaternion(Quaternion):
    """A quaternion whose norm is 1 to within ``UNIT_TOL``."""

    def __post_init__(self):
        super().__post_init__()
        n2 = self.w**2 + self.x**2 + self.y**2 + self.z**2
        if abs(n2 - 1.0) > UNIT_TOL:
            raise QuaternionDomainError(f"not a unit quaternion: |q|^2 = {n2!r}")

    @classmethod
    def normalized(cls, q: Quaternion) -> UnitQuaternion:
        n = norm(q)
        if n == 0.0:
            raise QuaternionDomainError("cannot normalise the zero quaternion")
        return cls(q.w / n, q.x / n, q.y / n, q.z / n)


ONE = UnitQuaternion(1.0)
I = UnitQuaternion(0.0, 1.0, 0.0, 0.0)
J = UnitQuaternion(0.0, 0.0, 1.0, 0.0)
K = UnitQuaternion(0.0, 0.0, 0.0, 1.0)


@dataclass(frozen=True)
class PolarForm:
    """``cos(angle) + axis * sin(angle)`` with ``axis`` a unit imaginary quaternion."""

    angle: float
    axis: UnitQuaternion

    def __post_init__(self):
        if not isinstance(self.axis, UnitQuaternion):
            object.__setattr__(self, "axis", UnitQuaternion(*self.axis.as_tuple()))
        if self.axis.w != 0.0:
            raise QuaternionDomainError("polar axis must be purely imaginary")
        if not 0.0 <= self.angle <= math.pi:
            raise QuaternionDomainError(f"polar angle {self.angle!r} outside [0, pi]")


def mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product ``p q``.

    The product of two unit quaternions is returned as a ``UnitQuaternion``.
    """
    w = p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z
    x = p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y
    y = p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x
    z = p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w
    if isinstance(p, UnitQuaternion) and isinstance(q, UnitQuaternion):
        return UnitQuaternion(w, x, y, z)
    return Quaternion(w, x, y, z)


def conjugate(q: Quaternion) -> Quaternion:
    return type(q)(q.w, -q.x, -q.y, -q.z)


def norm(q: Quaternion) -> float:
    return math.sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z)


def inverse(q: Quaternion) -> Quaternion:
    n2 = q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z
    if n2 == 0.0:
        raise QuaternionDomainError("the zero quaternion has no inverse")
    c = conjugate(q)
    return type(q)(c.w / n2, c.x / n2, c.y / n2, c.z / n2)


def is_canonical(q: Quaternion, tol: float = 1e-12) -> bool:
    """True for the preferred member of the pair ``{q, -q}``.

    That is ``w > 0``, or ``w == 0`` and the first nonzero vector component
    is positive. Components within ``tol`` of zero count as zero.
    """
    for c in q.as_tuple():
        if abs(c) > tol:
            return c > 0
    return True


def polar_decompose(q: UnitQuaternion) -> PolarForm:
    """Split ``q`` into ``(angle, axis)`` with ``angle`` in ``[0, pi]``.

    Real quaternions have no preferred axis; ``1`` maps to ``(0, i)`` and
    ``-1`` to ``(pi, i)``.
    """
    v = math.hypot(q.x, q.y, q.z)
    if v < AXIS_TOL:
        return PolarForm(0.0 if q.w > 0 else math.pi, I)
    angle = math.atan2(v, q.w)
    return PolarForm(angle, UnitQuaternion.normalized(Quaternion(0.0, q.x, q.y, q.z)))


def from_polar(p: PolarForm) -> UnitQuaternion:
    return _cis(p.angle, p.axis)


def _cis(angle: float, axis: Quaternion) -> UnitQuaternion:
    c, s = math.cos(angle), math.sin(angle)
    return UnitQuaternion(c, axis.x * s, axis.y * s, axis.z * s)


def power(q: UnitQuaternion, t: float) -> UnitQuaternion:
    """Real power ``q**t`` on the principal branch (polar angle in ``[0, pi]``)."""
    t = float(t)
    if not math.isfinite(t):
        raise QuaternionDomainError(f"exponent must be finite, got {t!r}")
    p = polar_decompose(q)
    return _cis(t * p.angle, p.axis)


def roots(q: UnitQuaternion, n: int) -> list[UnitQuaternion]:
    """All ``n`` quaternions ``r`` sharing the axis of ``q`` with ``r**n == q``.

    The principal root comes first. Real ``q`` has a continuum of roots and
    is rejected, except for the trivial case ``n == 1``.
    """
    if int(n) != n or n < 1:
        raise QuaternionDomainError(f"root order must be a positive integer, got {n!r}")
    n = int(n)
    if n == 1:
        return [q]
    if math.hypot(q.x, q.y, q.z) < AXIS_TOL:
        raise DegenerateRootError("roots of a real quaternion are not isolated")
    p = polar_decompose(q)
    return [_cis((p.angle + 2.0 * math.pi * m) / n, p.axis) for m in range(n)]
