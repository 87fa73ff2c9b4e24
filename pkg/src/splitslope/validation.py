"""Aggregate invariant checks behind ``splitslope validate``."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import SplitQuaternion, Vec3M, minkowski_dot, sq_product
from .curves import BUILTIN_CURVES, builtin_curve, validate_curve
from .rotation import (
    ConeKind,
    is_lorentz_orthogonal,
    rotation_matrix,
    slope_quaternion,
    slope_rotation,
)
from .surfaces import (
    Construction,
    SlopeSurfaceConfig,
    classify_point,
    homothetic_scale,
    sample_grid,
    slope_measure,
    xi,
)

DEFAULT_THETAS = (0.5, 1.0, 7.0)
# constant-angle std-dev is asserted absolutely only where binary64 can resolve it
ABSOLUTE_ANGLE_THETA_MAX = 1.0

CURVE_CONE = {"h2-geodesic": ConeKind.TIMELIKE, "s12-circle": ConeKind.SPACELIKE}

TOLERANCES = {
    "curve_on_quadric": 1e-9,
    "curve_unit_speed": 1e-9,
    "curve_tangency": 1e-9,
    "curve_fd_consistency": 1e-6,
    "lorentz_orthogonality": 1e-9,
    "pure_product": 1e-10,
    "construction_equivalence": 1e-9,
    "position_norm": 1e-10,
    "cone_membership": 0.0,
    "spacelike_surface": 0.0,
    "constant_angle": 1e-6,
    "constant_angle_relative": 1e-3,
    "constant_angle_value": 1e-5,
}


@dataclass
class ValidationReport:
    residuals: dict[str, float] = field(default_factory=lambda: dict.fromkeys(TOLERANCES, 0.0))

    def bump(self, name: str, value: float) -> None:
        value = float(value)
        if math.isnan(value):
            value = math.inf
        self.residuals[name] = max(self.residuals[name], value)

    @property
    def ok(self) -> bool:
        return all(r <= TOLERANCES[k] for k, r in self.residuals.items())

    def to_json(self) -> dict:
        out: dict = {"schema": 1}
        for k, r in self.residuals.items():
            out[k] = {"max_residual": r, "tolerance": TOLERANCES[k], "pass": r <= TOLERANCES[k]}
        return out


def _random_unit_timelike(rng: np.random.Generator) -> SplitQuaternion:
    t = rng.uniform(-3, 3)
    if rng.random() < 0.5:
        a = rng.uniform(0, 2 * math.pi)
        b = rng.uniform(-2, 2)
        axis = Vec3M(math.sinh(b), math.cosh(b) * math.cos(a), math.cosh(b) * math.sin(a))
        c, s = math.cosh(t), math.sinh(t)
    else:
        # unit timelike axes on the upper sheet of H2
        a = rng.uniform(0, 2 * math.pi)
        b = rng.uniform(0, 2)
        axis = Vec3M(math.cosh(b), math.sinh(b) * math.cos(a), math.sinh(b) * math.sin(a))
        c, s = math.cos(t), math.sin(t)
    return SplitQuaternion.from_parts(c, axis * s)


def run_validation(curves=None, thetas=DEFAULT_THETAS, u_range=(0.5, 2.0),
                   v_range=(0.0, 2 * math.pi), nu=64, nv=64, n_angle=16,
                   seed: int = 20240601) -> ValidationReport:
    """Run every invariant check and return the worst residual per check.

    Point-level checks use an ``nu x nv`` grid; checks needing surface partials
    use ``n_angle x n_angle``.
    """
    rep = ValidationReport()
    curves = list(curves or BUILTIN_CURVES)

    for name in curves:
        cr = validate_curve(builtin_curve(name), 257)
        rep.bump("curve_on_quadric", max(cr.residuals["on_quadric"],
                                         cr.residuals.get("upper_sheet", 0.0)))
        rep.bump("curve_unit_speed", cr.residuals["unit_speed"])
        rep.bump("curve_tangency", cr.residuals["tangency"])
        rep.bump("curve_fd_consistency", cr.residuals["fd_consistency"])

    rng = np.random.default_rng(seed)
    for _ in range(200):
        r = is_lorentz_orthogonal(rotation_matrix(_random_unit_timelike(rng)))
        rep.bump("lorentz_orthogonality", max(r.metric_residual, r.det_residual))

    us_a = np.linspace(u_range[0], u_range[1], n_angle)
    vs_a = np.linspace(v_range[0], v_range[1], n_angle)
    for name in curves:
        cone = CURVE_CONE[name]
        curve = builtin_curve(name)
        for theta in thetas:
            cfg = SlopeSurfaceConfig(theta, cone, curve)
            grids = {c: sample_grid(cfg, u_range, v_range, nu, nv, c) for c in Construction}
            direct = grids[Construction.DIRECT].points
            scale = np.max(np.abs(direct), axis=2)
            for c in (Construction.QUATERNION, Construction.HOMOTHETIC):
                diff = np.max(np.abs(grids[c].points - direct), axis=2)
                rep.bump("construction_equivalence", np.max(diff / scale))

            us, vs = grids[Construction.DIRECT].u_values, grids[Construction.DIRECT].v_values
            for i, u in enumerate(us):
                h = homothetic_scale(cfg, float(u))
                for j, v in enumerate(vs):
                    x = Vec3M.from_array(direct[i, j])
                    xx = minkowski_dot(x, x)
                    rep.bump("position_norm", abs(math.sqrt(abs(xx)) - h) / h)
                    bad = xx >= 0 if cone is ConeKind.TIMELIKE else xx <= 0
                    rep.bump("cone_membership", float(bad))
                    q1 = slope_quaternion(xi(cfg, float(u)), curve.derivative(float(v)), False)
                    prod = sq_product(q1, (curve.eval(float(v)) * h).as_quaternion())
                    rep.bump("pure_product", abs(prod.scalar) / h)
                    rot = slope_rotation(theta, float(u), curve.derivative(float(v)), cone)
                    r = is_lorentz_orthogonal(rot)
                    rep.bump("lorentz_orthogonality", max(r.metric_residual, r.det_residual))

            measures = []
            for u in us_a:
                for v in vs_a:
                    measures.append(slope_measure(cfg, float(u), float(v)))
                    pr = classify_point(cfg, float(u), float(v))
                    rep.bump("spacelike_surface", float(not pr.spacelike_surface))
            measures = np.array(measures)
            rep.bump("constant_angle_relative", np.std(measures) / np.mean(measures))
            if theta <= ABSOLUTE_ANGLE_THETA_MAX:
                rep.bump("constant_angle", np.std(measures))
                expected = math.cosh(theta) if cone is ConeKind.TIMELIKE else math.sinh(theta)
                rep.bump("constant_angle_value", np.max(np.abs(measures - expected)))
    return rep
