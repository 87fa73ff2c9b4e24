"""Unit-speed spacelike curves on the hyperbolic plane H2 and de Sitter S12."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .algebra import Vec3M, minkowski_dot
from .errors import UnknownCurve

CURVE_TOL = 1e-9
FD_TOL = 1e-6
# round-off allowance for quadratic invariants, in units of eps * |c|^2
ROUNDOFF_ULPS = 16.0
_EPS = float(np.finfo(np.float64).eps)


class AmbientQuadric(enum.Enum):
    H2 = -1.0   # <f,f> = -1, f.e1 > 0
    S12 = 1.0   # <g,g> = +1

    @property
    def target(self) -> float:
        return self.value


@dataclass(frozen=True)
class SlopeCurve:
    name: str
    eval: Callable[[float], Vec3M]
    derivative: Callable[[float], Vec3M]
    quadric: AmbientQuadric
    v_domain: tuple[float, float] = (0.0, 2.0 * math.pi)

    def __call__(self, v: float) -> Vec3M:
        return self.eval(v)


def _h2_geodesic() -> SlopeCurve:
    return SlopeCurve(
        "h2-geodesic",
        lambda v: Vec3M(math.cosh(v), 0.0, math.sinh(v)),
        lambda v: Vec3M(math.sinh(v), 0.0, math.cosh(v)),
        AmbientQuadric.H2,
    )


def _s12_circle() -> SlopeCurve:
    return SlopeCurve(
        "s12-circle",
        lambda v: Vec3M(0.0, math.cos(v), math.sin(v)),
        lambda v: Vec3M(0.0, -math.sin(v), math.cos(v)),
        AmbientQuadric.S12,
    )


BUILTIN_CURVES: dict[str, Callable[[], SlopeCurve]] = {
    "h2-geodesic": _h2_geodesic,
    "s12-circle": _s12_circle,
}


def builtin_curve(name: str) -> SlopeCurve:
    try:
        return BUILTIN_CURVES[name]()
    except KeyError:
        known = ", ".join(sorted(BUILTIN_CURVES))
        raise UnknownCurve(f"unknown curve {name!r} (known: {known})") from None


@dataclass
class CurveReport:
    """Max residual per curve invariant over the sampled parameters.

    Quadratic residuals (``on_quadric``, ``unit_speed``, ``tangency``) are the
    excess over a floating-point floor of ``16 eps |c|_inf^2``, so curves that
    grow like ``cosh v`` are not penalised for unavoidable cancellation.
    ``fd_consistency`` is relative to ``max(1, |c'|_inf)``.
    """

    curve: str
    samples: int
    residuals: dict[str, float] = field(default_factory=dict)
    tolerances: dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> dict[str, bool]:
        return {k: self.residuals[k] <= self.tolerances[k] for k in self.residuals}

    @property
    def ok(self) -> bool:
        return all(self.passed.values())


def _excess(value: float, scale: float) -> float:
    return max(0.0, abs(value) - ROUNDOFF_ULPS * _EPS * max(1.0, scale))


def validate_curve(c: SlopeCurve, sample_count: int) -> CurveReport:
    if sample_count < 2:
        raise ValueError("sample_count must be at least 2")
    lo, hi = c.v_domain
    target = c.quadric.target
    worst = dict.fromkeys(("on_quadric", "unit_speed", "tangency", "fd_consistency"), 0.0)
    upper_sheet = True
    for v in np.linspace(lo, hi, sample_count):
        v = float(v)
        x = c.eval(v)
        d = c.derivative(v)
        sx, sd = x.max_abs() ** 2, d.max_abs() ** 2
        worst["on_quadric"] = max(worst["on_quadric"],
                                  _excess(minkowski_dot(x, x) - target, sx))
        worst["unit_speed"] = max(worst["unit_speed"],
                                  _excess(minkowski_dot(d, d) - 1.0, sd))
        worst["tangency"] = max(worst["tangency"],
                                _excess(minkowski_dot(x, d), math.sqrt(sx * sd)))
        h = 1e-5 * max(1.0, abs(v))
        fd = (c.eval(v + h) - c.eval(v - h)) / (2.0 * h)
        worst["fd_consistency"] = max(worst["fd_consistency"],
                                      (fd - d).max_abs() / max(1.0, d.max_abs()))
        if c.quadric is AmbientQuadric.H2 and not x.e1 > 0:
            upper_sheet = False
    report = CurveReport(c.name, sample_count, worst, {
        "on_quadric": CURVE_TOL, "unit_speed": CURVE_TOL,
        "tangency": CURVE_TOL, "fd_consistency": FD_TOL,
    })
    if c.quadric is AmbientQuadric.H2:
        report.residuals["upper_sheet"] = 0.0 if upper_sheet else math.inf
        report.tolerances["upper_sheet"] = 0.0
    return report
