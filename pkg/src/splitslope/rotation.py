"""Lorentz rotations generated by unit timelike split quaternions."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .algebra import (
    SplitQuaternion,
    Vec3M,
    characteristic,
    minkowski_dot,
    sq_inverse,
    sq_product,
)
from .errors import AxisNotUnitSpacelike, DomainError, NotUnitTimelike

UNIT_TOL = 1e-9
LORENTZ_TOL = 1e-9
SIGNATURE = np.diag([-1.0, 1.0, 1.0])


class ConeKind(enum.Enum):
    TIMELIKE = "timelike"
    SPACELIKE = "spacelike"


class XiMode(enum.Enum):
    EXACT = "exact"
    PAPER_APPROX = "paper-approx"


@dataclass(frozen=True)
class LorentzRotation:
    """3x3 matrix acting on ``(e1, e2, e3)`` column vectors."""

    m: np.ndarray

    def __post_init__(self):
        m = np.array(self.m, dtype=np.float64)
        if m.shape != (3, 3):
            raise ValueError(f"rotation matrix must be 3x3, got {m.shape}")
        m.flags.writeable = False
        object.__setattr__(self, "m", m)

    def apply(self, w: Vec3M) -> Vec3M:
        m = self.m
        return Vec3M(
            m[0, 0] * w.e1 + m[0, 1] * w.e2 + m[0, 2] * w.e3,
            m[1, 0] * w.e1 + m[1, 1] * w.e2 + m[1, 2] * w.e3,
            m[2, 0] * w.e1 + m[2, 1] * w.e2 + m[2, 2] * w.e3,
        )

    def __matmul__(self, other: LorentzRotation) -> LorentzRotation:
        return LorentzRotation(self.m @ other.m)


def _require_unit_timelike(p: SplitQuaternion) -> None:
    ip = characteristic(p)
    if not abs(ip - 1.0) <= UNIT_TOL:
        raise NotUnitTimelike(f"{tuple(p)} has I_p={ip!r}, expected 1")


def rotation_matrix(p: SplitQuaternion) -> LorentzRotation:
    _require_unit_timelike(p)
    p1, p2, p3, p4 = p
    return LorentzRotation(np.array([
        [p1*p1 + p2*p2 + p3*p3 + p4*p4, 2*p1*p4 - 2*p2*p3, -2*p1*p3 - 2*p2*p4],
        [2*p2*p3 + 2*p4*p1, p1*p1 - p2*p2 - p3*p3 + p4*p4, -2*p3*p4 - 2*p2*p1],
        [2*p2*p4 - 2*p3*p1, 2*p2*p1 - 2*p3*p4, p1*p1 - p2*p2 + p3*p3 - p4*p4],
    ]))


def sandwich(p: SplitQuaternion, w: Vec3M) -> Vec3M:
    """Vector part of ``p w p^-1``."""
    _require_unit_timelike(p)
    return sq_product(sq_product(p, w.as_quaternion()), sq_inverse(p)).vector


def slope_quaternion(xi: float, axis: Vec3M, half_angle: bool) -> SplitQuaternion:
    """``cosh(s) - sinh(s) axis`` with ``s = xi/2`` (half angle) or ``s = xi``."""
    g = minkowski_dot(axis, axis)
    if not abs(g - 1.0) <= UNIT_TOL:
        raise AxisNotUnitSpacelike(f"axis {tuple(axis)} has <a,a>={g!r}, expected 1")
    s = 0.5 * xi if half_angle else xi
    sh = math.sinh(s)
    return SplitQuaternion(math.cosh(s), -sh * axis.e1, -sh * axis.e2, -sh * axis.e3)


def slope_angle(theta: float, u: float, cone: ConeKind,
                mode: XiMode = XiMode.EXACT) -> float:
    """Hyperbolic angle ``coth(theta) ln u`` (timelike cone) or ``tanh(theta) ln u``.

    ``XiMode.PAPER_APPROX`` drops the factor and returns ``ln u``.
    """
    if not u > 0:
        raise DomainError(f"u must be positive, got {u!r}")
    lu = math.log(u)
    if mode is XiMode.PAPER_APPROX:
        return lu
    if cone is ConeKind.TIMELIKE:
        return lu / math.tanh(theta)
    return lu * math.tanh(theta)


def slope_rotation(theta: float, u: float, curve_derivative: Vec3M, cone: ConeKind,
                   mode: XiMode = XiMode.EXACT) -> LorentzRotation:
    if not theta > 0:
        raise DomainError(f"theta must be positive, got {theta!r}")
    xi = slope_angle(theta, u, cone, mode)
    return rotation_matrix(slope_quaternion(xi, curve_derivative, half_angle=True))


@dataclass(frozen=True)
class OrthogonalityReport:
    ok: bool
    metric_residual: float
    det_residual: float


def is_lorentz_orthogonal(r: LorentzRotation) -> OrthogonalityReport:
    """Check ``R^T eps R = eps`` and ``det R = 1``.

    Residuals are relative to the matrix scale ``s = max(1, max|R_ij|)``: the
    metric residual is divided by ``s^2`` and the determinant residual by
    ``s^3``.  Boosts with large rapidity have entries far above 1 and their
    products carry round-off proportional to those powers.  For matrices with
    all entries at most 1 in magnitude the residuals are absolute.
    """
    m = r.m
    s = max(1.0, float(np.max(np.abs(m))))
    metric_res = float(np.max(np.abs(m.T @ SIGNATURE @ m - SIGNATURE))) / (s * s)
    det_res = float(abs(np.linalg.det(m) - 1.0)) / (s * s * s)
    ok = metric_res <= LORENTZ_TOL and det_res <= LORENTZ_TOL
    return OrthogonalityReport(ok, metric_res, det_res)
