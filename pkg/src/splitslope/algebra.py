"""Split-quaternion arithmetic and vectors of Minkowski 3-space.

Basis conventions used throughout the package:

* a split quaternion is stored as ``(w, x, y, z)`` meaning ``w + x i + y j + z k``
  with ``i^2 = -1`` and ``j^2 = k^2 = +1``;
* a :class:`Vec3M` ``(e1, e2, e3)`` is identified with the pure quaternion
  ``e1 i + e2 j + e3 k``; ``e1`` is the timelike direction, so the metric is
  ``<a, b> = -a1 b1 + a2 b2 + a3 b3``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import DegenerateQuaternion, LightlikeNoInverse, LightlikeVectorPart

CLASSIFY_RTOL = 1e-12


class CausalCharacter(enum.Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"


@dataclass(frozen=True, slots=True)
class Vec3M:
    """Vector of Minkowski 3-space with signature (-, +, +)."""

    e1: float
    e2: float
    e3: float

    def __iter__(self) -> Iterator[float]:
        yield self.e1
        yield self.e2
        yield self.e3

    def __add__(self, other: Vec3M) -> Vec3M:
        return Vec3M(self.e1 + other.e1, self.e2 + other.e2, self.e3 + other.e3)

    def __sub__(self, other: Vec3M) -> Vec3M:
        return Vec3M(self.e1 - other.e1, self.e2 - other.e2, self.e3 - other.e3)

    def __neg__(self) -> Vec3M:
        return Vec3M(-self.e1, -self.e2, -self.e3)

    def __mul__(self, s: float) -> Vec3M:
        return Vec3M(s * self.e1, s * self.e2, s * self.e3)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> Vec3M:
        return Vec3M(self.e1 / s, self.e2 / s, self.e3 / s)

    def to_array(self) -> np.ndarray:
        return np.array([self.e1, self.e2, self.e3], dtype=np.float64)

    @classmethod
    def from_array(cls, a) -> Vec3M:
        return cls(float(a[0]), float(a[1]), float(a[2]))

    def as_quaternion(self) -> SplitQuaternion:
        return SplitQuaternion(0.0, self.e1, self.e2, self.e3)

    def max_abs(self) -> float:
        return max(abs(self.e1), abs(self.e2), abs(self.e3))


@dataclass(frozen=True, slots=True)
class SplitQuaternion:
    """``w + x i + y j + z k`` with the split multiplication table."""

    w: float
    x: float
    y: float
    z: float

    def __iter__(self) -> Iterator[float]:
        yield self.w
        yield self.x
        yield self.y
        yield self.z

    @property
    def scalar(self) -> float:
        return self.w

    @property
    def vector(self) -> Vec3M:
        return Vec3M(self.x, self.y, self.z)

    @classmethod
    def from_parts(cls, scalar: float, vector: Vec3M) -> SplitQuaternion:
        return cls(scalar, vector.e1, vector.e2, vector.e3)

    @classmethod
    def from_array(cls, a) -> SplitQuaternion:
        return cls(float(a[0]), float(a[1]), float(a[2]), float(a[3]))

    def to_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z], dtype=np.float64)

    def is_pure(self) -> bool:
        return self.w == 0.0

    def max_abs(self) -> float:
        return max(abs(self.w), abs(self.x), abs(self.y), abs(self.z))

    def __add__(self, other: SplitQuaternion) -> SplitQuaternion:
        return SplitQuaternion(self.w + other.w, self.x + other.x,
                               self.y + other.y, self.z + other.z)

    def __sub__(self, other: SplitQuaternion) -> SplitQuaternion:
        return SplitQuaternion(self.w - other.w, self.x - other.x,
                               self.y - other.y, self.z - other.z)

    def __neg__(self) -> SplitQuaternion:
        return SplitQuaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, SplitQuaternion):
            return sq_product(self, other)
        return SplitQuaternion(self.w * other, self.x * other,
                               self.y * other, self.z * other)

    def __rmul__(self, s: float) -> SplitQuaternion:
        return SplitQuaternion(s * self.w, s * self.x, s * self.y, s * self.z)

    def __truediv__(self, s: float) -> SplitQuaternion:
        return SplitQuaternion(self.w / s, self.x / s, self.y / s, self.z / s)

    def conjugate(self) -> SplitQuaternion:
        return sq_conjugate(self)

    def inverse(self) -> SplitQuaternion:
        return sq_inverse(self)

    @property
    def characteristic(self) -> float:
        return characteristic(self)

    @property
    def norm(self) -> float:
        return sq_norm(self)


ONE = SplitQuaternion(1.0, 0.0, 0.0, 0.0)
I = SplitQuaternion(0.0, 1.0, 0.0, 0.0)
J = SplitQuaternion(0.0, 0.0, 1.0, 0.0)
K = SplitQuaternion(0.0, 0.0, 0.0, 1.0)


def minkowski_dot(a: Vec3M, b: Vec3M) -> float:
    return -a.e1 * b.e1 + a.e2 * b.e2 + a.e3 * b.e3


def lorentz_cross(a: Vec3M, b: Vec3M) -> Vec3M:
    """Lorentzian cross product, the determinant with first row (-i, j, k).

    Orthogonal to both factors and satisfies
    ``<a^b, a^b> = <a,b>^2 - <a,a><b,b>``.
    """
    return Vec3M(
        a.e3 * b.e2 - a.e2 * b.e3,
        a.e3 * b.e1 - a.e1 * b.e3,
        a.e1 * b.e2 - a.e2 * b.e1,
    )


def sq_product(p: SplitQuaternion, q: SplitQuaternion) -> SplitQuaternion:
    """Split-quaternion product ``p q``.

    scalar = p1 q1 + <Vp, Vq>,  vector = p1 Vq + q1 Vp + Vp ^ Vq
    """
    vp, vq = p.vector, q.vector
    scalar = p.w * q.w + minkowski_dot(vp, vq)
    c = lorentz_cross(vp, vq)
    return SplitQuaternion(
        scalar,
        p.w * q.x + q.w * p.x + c.e1,
        p.w * q.y + q.w * p.y + c.e2,
        p.w * q.z + q.w * p.z + c.e3,
    )


def sq_conjugate(p: SplitQuaternion) -> SplitQuaternion:
    return SplitQuaternion(p.w, -p.x, -p.y, -p.z)


def characteristic(p: SplitQuaternion) -> float:
    """``I_p = w^2 + x^2 - y^2 - z^2`` (equal to the scalar part of ``p conj(p)``)."""
    return p.w * p.w + p.x * p.x - p.y * p.y - p.z * p.z


def classification_tolerance(p: SplitQuaternion) -> float:
    return CLASSIFY_RTOL * max(1.0, p.max_abs() ** 2)


def causal_character(p: SplitQuaternion) -> CausalCharacter:
    ip = characteristic(p)
    tau = classification_tolerance(p)
    if ip < -tau:
        return CausalCharacter.SPACELIKE
    if ip > tau:
        return CausalCharacter.TIMELIKE
    return CausalCharacter.LIGHTLIKE


def vector_character(a: Vec3M, tol: float | None = None) -> CausalCharacter:
    """Causal character of a vector; the zero vector counts as spacelike."""
    if tol is None:
        tol = CLASSIFY_RTOL * max(1.0, a.max_abs() ** 2)
    g = minkowski_dot(a, a)
    if g > tol or a.max_abs() == 0.0:
        return CausalCharacter.SPACELIKE
    if g < -tol:
        return CausalCharacter.TIMELIKE
    return CausalCharacter.LIGHTLIKE


def sq_norm(p: SplitQuaternion) -> float:
    return math.sqrt(abs(characteristic(p)))


def sq_inverse(p: SplitQuaternion) -> SplitQuaternion:
    ip = characteristic(p)
    if abs(ip) <= classification_tolerance(p):
        raise LightlikeNoInverse(f"lightlike quaternion {tuple(p)} has no inverse (I_p={ip!r})")
    return sq_conjugate(p) / ip


def commutator(a: SplitQuaternion, b: SplitQuaternion) -> SplitQuaternion:
    return sq_product(a, b) - sq_product(b, a)


class PolarVariant(enum.Enum):
    SPACELIKE_FORM = "spacelike"                    # N (sinh t + v cosh t)
    TIMELIKE_SPACELIKE_AXIS = "timelike/spacelike"  # N (cosh t + v sinh t)
    TIMELIKE_TIMELIKE_AXIS = "timelike/timelike"    # N (cos t + v sin t)


DEFAULT_AXIS = Vec3M(0.0, 1.0, 0.0)


@dataclass(frozen=True, slots=True)
class PolarForm:
    """Polar decomposition of a non-lightlike split quaternion.

    ``sign`` is -1 only for timelike quaternions with spacelike vector part and
    negative scalar part, which ``N (cosh t + v sinh t)`` cannot reach with
    ``N >= 0``; those reconstruct as ``-N (cosh t + v sinh t)``.
    """

    variant: PolarVariant
    magnitude: float
    angle: float
    axis: Vec3M
    sign: int = 1

    def reconstruct(self) -> SplitQuaternion:
        t = self.angle
        if self.variant is PolarVariant.SPACELIKE_FORM:
            s, c = math.sinh(t), math.cosh(t)
        elif self.variant is PolarVariant.TIMELIKE_SPACELIKE_AXIS:
            s, c = math.cosh(t), math.sinh(t)
        else:
            s, c = math.cos(t), math.sin(t)
        n = self.sign * self.magnitude
        return SplitQuaternion.from_parts(n * s, self.axis * (n * c))


def polar_decompose(p: SplitQuaternion) -> PolarForm:
    """Write ``p`` in the polar form matching its causal character.

    A timelike ``p`` with zero vector part has angle 0 and gets
    :data:`DEFAULT_AXIS` (the unit vector ``j``); any unit axis would reconstruct it.
    """
    tau = classification_tolerance(p)
    ip = characteristic(p)
    if abs(ip) <= tau:
        raise DegenerateQuaternion(f"{tuple(p)} is lightlike (I_p={ip!r}); no polar form")
    n = math.sqrt(abs(ip))
    vec = p.vector
    vv = minkowski_dot(vec, vec)

    if ip < 0:
        # <V,V> = w^2 + N^2 > 0, so the axis is always spacelike
        vlen = math.sqrt(vv)
        return PolarForm(PolarVariant.SPACELIKE_FORM, n, math.asinh(p.w / n), vec / vlen)

    if vv > tau:
        vlen = math.sqrt(vv)
        sign = 1 if p.w >= 0 else -1
        return PolarForm(PolarVariant.TIMELIKE_SPACELIKE_AXIS, n, math.asinh(vlen / n),
                         vec * (sign / vlen), sign)
    if vv < -tau:
        vlen = math.sqrt(-vv)
        return PolarForm(PolarVariant.TIMELIKE_TIMELIKE_AXIS, n, math.atan2(vlen, p.w),
                         vec / vlen)
    if vec.max_abs() == 0.0:
        sign = 1 if p.w >= 0 else -1
        return PolarForm(PolarVariant.TIMELIKE_SPACELIKE_AXIS, n, 0.0, DEFAULT_AXIS, sign)
    raise LightlikeVectorPart(f"{tuple(p)} is timelike with a null vector part")
