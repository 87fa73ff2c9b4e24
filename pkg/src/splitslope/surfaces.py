"""Spacelike constant slope surfaces in Minkowski 3-space.

The same surface is produced three ways:

* ``surface_direct``: ``h(u) (cosh xi f + sinh xi f ^ f')``;
* ``surface_quaternion``: the product ``Q1 x h(u) f`` with the full-angle
  quaternion ``Q1 = cosh xi - sinh xi f'``;
* ``surface_homothetic``: ``h(u) R_Q f``, where ``R_Q`` is the Lorentz rotation of
  the half-angle quaternion ``cosh(xi/2) - sinh(xi/2) f'``.

``h(u) = u sinh(theta)`` on the timelike cone (curve on H2) and
``u cosh(theta)`` on the spacelike cone (curve on S12).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .algebra import SplitQuaternion, Vec3M, lorentz_cross, minkowski_dot, sq_product
from .curves import AmbientQuadric, SlopeCurve
from .errors import DegenerateNormal, DomainError, NonPureProduct
from .rotation import ConeKind, XiMode, slope_angle, slope_quaternion, slope_rotation

PURE_TOL = 1e-10
FD_STEP = 1e-3

_CONE_QUADRIC = {ConeKind.TIMELIKE: AmbientQuadric.H2, ConeKind.SPACELIKE: AmbientQuadric.S12}


class Construction(enum.Enum):
    DIRECT = "direct"
    QUATERNION = "quaternion"
    HOMOTHETIC = "homothetic"


@dataclass(frozen=True)
class SlopeSurfaceConfig:
    theta: float
    cone: ConeKind
    curve: SlopeCurve
    xi_mode: XiMode = XiMode.EXACT

    def __post_init__(self):
        if not (self.theta > 0 and math.isfinite(self.theta)):
            raise DomainError(f"theta must be a positive finite number, got {self.theta!r}")
        want = _CONE_QUADRIC[self.cone]
        if self.curve.quadric is not want:
            raise DomainError(
                f"{self.cone.value} cone needs a curve on {want.name}, "
                f"{self.curve.name!r} lies on {self.curve.quadric.name}")


def xi(cfg: SlopeSurfaceConfig, u: float) -> float:
    return slope_angle(cfg.theta, u, cfg.cone, cfg.xi_mode)


def homothetic_scale(cfg: SlopeSurfaceConfig, u: float) -> float:
    if not u > 0:
        raise DomainError(f"u must be positive, got {u!r}")
    if cfg.cone is ConeKind.TIMELIKE:
        return u * math.sinh(cfg.theta)
    return u * math.cosh(cfg.theta)


@dataclass(frozen=True)
class HomotheticMotion:
    """Scaled rotation ``h(u) Q1(u, v)`` with zero translation."""

    scale: Callable[[float], float]
    rotation: Callable[[float, float], SplitQuaternion]

    @classmethod
    def for_config(cls, cfg: SlopeSurfaceConfig) -> HomotheticMotion:
        return cls(
            scale=lambda u: homothetic_scale(cfg, u),
            rotation=lambda u, v: slope_quaternion(xi(cfg, u), cfg.curve.derivative(v),
                                                   half_angle=False),
        )

    def quaternion(self, u: float, v: float) -> SplitQuaternion:
        return self.scale(u) * self.rotation(u, v)

    def apply(self, u: float, v: float, point: Vec3M) -> Vec3M:
        """Vector part of ``h(u) Q1(u, v) x point``."""
        return sq_product(self.quaternion(u, v), point.as_quaternion()).vector


def surface_direct(cfg: SlopeSurfaceConfig, u: float, v: float) -> Vec3M:
    h = homothetic_scale(cfg, u)
    s = xi(cfg, u)
    f = cfg.curve.eval(v)
    binormal = lorentz_cross(f, cfg.curve.derivative(v))
    return (f * math.cosh(s) + binormal * math.sinh(s)) * h


def surface_quaternion(cfg: SlopeSurfaceConfig, u: float, v: float) -> Vec3M:
    h = homothetic_scale(cfg, u)
    q1 = slope_quaternion(xi(cfg, u), cfg.curve.derivative(v), half_angle=False)
    q2 = (cfg.curve.eval(v) * h).as_quaternion()
    prod = sq_product(q1, q2)
    if abs(prod.scalar) > PURE_TOL * h:
        raise NonPureProduct(
            f"scalar part {prod.scalar!r} of Q1 x Q2 at (u={u}, v={v}) is not zero; "
            "curve is not unit speed or not tangent to its quadric")
    return prod.vector


def surface_homothetic(cfg: SlopeSurfaceConfig, u: float, v: float) -> Vec3M:
    h = homothetic_scale(cfg, u)
    rot = slope_rotation(cfg.theta, u, cfg.curve.derivative(v), cfg.cone, cfg.xi_mode)
    return rot.apply(cfg.curve.eval(v)) * h


_BUILDERS = {
    Construction.DIRECT: surface_direct,
    Construction.QUATERNION: surface_quaternion,
    Construction.HOMOTHETIC: surface_homothetic,
}


def surface_point(cfg: SlopeSurfaceConfig, u: float, v: float,
                  construction: Construction = Construction.DIRECT) -> Vec3M:
    return _BUILDERS[construction](cfg, u, v)


def _central4(g: Callable[[float], Vec3M], t: float, h: float) -> Vec3M:
    # five-point stencil, truncation O(h^4)
    return (g(t - 2 * h) - g(t + 2 * h) + (g(t + h) - g(t - h)) * 8.0) / (12.0 * h)


def surface_partials(cfg: SlopeSurfaceConfig, u: float, v: float) -> tuple[Vec3M, Vec3M]:
    """Fourth-order central differences ``(x_u, x_v)`` of the direct parametrization.

    Steps are ``FD_STEP * max(1, u)`` in u and ``FD_STEP`` in v.  The surfaces
    are nearly null in Euclidean terms, so Lorentzian products of the partials
    amplify round-off; a wide fourth-order stencil keeps the derivative error
    near ``eps / FD_STEP`` with negligible truncation.
    """
    hu = FD_STEP * max(1.0, u)
    if not u - 2 * hu > 0:
        raise DomainError(f"u={u!r} too close to 0 for a difference step of {hu}")
    xu = _central4(lambda t: surface_direct(cfg, t, v), u, hu)
    xv = _central4(lambda t: surface_direct(cfg, u, t), v, FD_STEP)
    return xu, xv


def slope_measure(cfg: SlopeSurfaceConfig, u: float, v: float) -> float:
    """``|<x, n>| / (|x| |n|)`` with ``n = x_u ^ x_v``.

    Constant over a constant slope surface: ``cosh(theta)`` on the timelike cone
    and ``sinh(theta)`` on the spacelike cone.
    """
    x = surface_direct(cfg, u, v)
    xu, xv = surface_partials(cfg, u, v)
    n = lorentz_cross(xu, xv)
    nn = minkowski_dot(n, n)
    nmax = n.max_abs()
    if abs(nn) <= 1e-12 * nmax * nmax:
        raise DegenerateNormal(f"normal {tuple(n)} at (u={u}, v={v}) is null or zero")
    return abs(minkowski_dot(x, n)) / (math.sqrt(abs(minkowski_dot(x, x))) * math.sqrt(abs(nn)))


@dataclass(frozen=True)
class PointReport:
    E: float
    F: float
    G: float
    position_norm: float   # <x, x>
    spacelike_surface: bool
    cone_correct: bool
    future_pointing: bool  # x.e1 > 0; reported, never required


def classify_point(cfg: SlopeSurfaceConfig, u: float, v: float) -> PointReport:
    x = surface_direct(cfg, u, v)
    xu, xv = surface_partials(cfg, u, v)
    E, F, G = minkowski_dot(xu, xu), minkowski_dot(xu, xv), minkowski_dot(xv, xv)
    xx = minkowski_dot(x, x)
    cone_ok = xx < 0 if cfg.cone is ConeKind.TIMELIKE else xx > 0
    return PointReport(E, F, G, xx, E > 0 and E * G - F * F > 0, cone_ok, x.e1 > 0)


@dataclass(frozen=True)
class SurfaceSampleGrid:
    u_values: np.ndarray
    v_values: np.ndarray
    points: np.ndarray  # (nu, nv, 3), u outer
    construction: Construction

    def point(self, i: int, j: int) -> Vec3M:
        return Vec3M.from_array(self.points[i, j])


def _axis(rng: tuple[float, float], n: int, name: str) -> np.ndarray:
    lo, hi = float(rng[0]), float(rng[1])
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise DomainError(f"{name} range must be finite and ascending, got [{lo}, {hi}]")
    if int(n) != n or n < 2:
        raise DomainError(f"{name} sample count must be an integer >= 2, got {n!r}")
    return np.linspace(lo, hi, int(n))


def sample_grid(cfg: SlopeSurfaceConfig, u_range: tuple[float, float],
                v_range: tuple[float, float], nu: int, nv: int,
                construction: Construction = Construction.DIRECT) -> SurfaceSampleGrid:
    us = _axis(u_range, nu, "u")
    if not us[0] > 0:
        raise DomainError(f"u range must lie in (0, inf), got [{u_range[0]}, {u_range[1]}]")
    vs = _axis(v_range, nv, "v")
    build = _BUILDERS[construction]
    pts = np.empty((len(us), len(vs), 3), dtype=np.float64)
    for i, u in enumerate(us):
        for j, v in enumerate(vs):
            pts[i, j] = tuple(build(cfg, float(u), float(v)))
    if not np.all(np.isfinite(pts)):
        raise DomainError("non-finite surface point; range too large for binary64")
    return SurfaceSampleGrid(us, vs, pts, construction)
