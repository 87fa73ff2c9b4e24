import math

import mpmath
import numpy as np
import pytest
import sympy as sp

from splitslope import (
    AmbientQuadric,
    ConeKind,
    Construction,
    DomainError,
    HomotheticMotion,
    NonPureProduct,
    SlopeCurve,
    SlopeSurfaceConfig,
    Vec3M,
    XiMode,
    builtin_curve,
    classify_point,
    minkowski_dot,
    sample_grid,
    slope_quaternion,
    slope_measure,
    sq_product,
    surface_direct,
    surface_homothetic,
    surface_partials,
    surface_quaternion,
    xi,
)
from splitslope.surfaces import homothetic_scale, surface_point

TWO_PI = 2 * math.pi


def cfg_for(cone, theta, mode=XiMode.EXACT):
    name = "h2-geodesic" if cone is ConeKind.TIMELIKE else "s12-circle"
    return SlopeSurfaceConfig(theta, cone, builtin_curve(name), mode)


def rel_err(a: Vec3M, b: Vec3M) -> float:
    return (a - b).max_abs() / max(a.max_abs(), b.max_abs(), 1e-300)


# -- independent symbolic oracle ---------------------------------------------

_u, _v, _t = sp.symbols("u v theta", positive=True)


def _sym_wedge(a, b):
    return sp.Matrix([a[2] * b[1] - a[1] * b[2], a[2] * b[0] - a[0] * b[2],
                      a[0] * b[1] - a[1] * b[0]])


def _sym_dot(a, b):
    return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def symbolic_surface(cone, paper_approx=False):
    if cone is ConeKind.TIMELIKE:
        f = sp.Matrix([sp.cosh(_v), 0, sp.sinh(_v)])
        h, factor = _u * sp.sinh(_t), sp.coth(_t)
    else:
        f = sp.Matrix([0, sp.cos(_v), sp.sin(_v)])
        h, factor = _u * sp.cosh(_t), sp.tanh(_t)
    s = sp.log(_u) if paper_approx else factor * sp.log(_u)
    return h * (sp.cosh(s) * f + sp.sinh(s) * _sym_wedge(f, f.diff(_v)))


def symbolic_measure(cone):
    x = symbolic_surface(cone)
    n = _sym_wedge(x.diff(_u), x.diff(_v))
    return sp.Abs(_sym_dot(x, n)) / sp.sqrt(sp.Abs(_sym_dot(x, x)) * sp.Abs(_sym_dot(n, n)))


@pytest.fixture(autouse=True)
def _high_precision_oracle():
    # symbolic oracles are evaluated with 50 digits so their own cancellation is negligible
    with mpmath.workdps(50):
        yield


# -- configuration --------------------------------------------------------------

def test_config_validation():
    with pytest.raises(DomainError, match="theta"):
        SlopeSurfaceConfig(-1.0, ConeKind.TIMELIKE, builtin_curve("h2-geodesic"))
    with pytest.raises(DomainError):
        SlopeSurfaceConfig(1.0, ConeKind.TIMELIKE, builtin_curve("s12-circle"))
    with pytest.raises(DomainError):
        SlopeSurfaceConfig(1.0, ConeKind.SPACELIKE, builtin_curve("h2-geodesic"))


def test_xi_values():
    for mode in XiMode:
        assert xi(cfg_for(ConeKind.TIMELIKE, 7.0, mode), 1.0) == 0.0
    assert xi(cfg_for(ConeKind.TIMELIKE, 7.0), math.e) == pytest.approx(
        math.cosh(7) / math.sinh(7), rel=1e-15)
    assert abs(xi(cfg_for(ConeKind.TIMELIKE, 7.0), math.e) - 1.0000017) < 1e-7
    assert xi(cfg_for(ConeKind.TIMELIKE, 7.0, XiMode.PAPER_APPROX), math.e) == 1.0
    assert xi(cfg_for(ConeKind.SPACELIKE, 0.5), math.e) == pytest.approx(math.tanh(0.5))
    with pytest.raises(DomainError):
        xi(cfg_for(ConeKind.TIMELIKE, 1.0), 0.0)


# -- the three constructions -----------------------------------------------

@pytest.mark.parametrize("theta", [0.3, 1.0, 7.0])
@pytest.mark.parametrize("v", [0.0, 1.1, 5.0])
def test_u_one_slice(theta, v):
    cfg = cfg_for(ConeKind.TIMELIKE, theta)
    expected = Vec3M(math.cosh(v), 0, math.sinh(v)) * math.sinh(theta)
    for c in Construction:
        assert rel_err(surface_point(cfg, 1.0, v, c), expected) <= 1e-15


def test_timelike_theta7_closed_form(rng):
    cfg = cfg_for(ConeKind.TIMELIKE, 7.0, XiMode.PAPER_APPROX)
    s7 = math.sinh(7)
    for _ in range(200):
        u, v = rng.uniform(0.5, 2), rng.uniform(0, TWO_PI)
        lu = math.log(u)
        expected = Vec3M(u * s7 * math.cosh(lu) * math.cosh(v), -u * s7 * math.sinh(lu),
                         u * s7 * math.cosh(lu) * math.sinh(v))
        assert rel_err(surface_direct(cfg, u, v), expected) <= 1e-12
        assert rel_err(surface_quaternion(cfg, u, v), expected) <= 1e-12
        # R f cancels entries of size ~cosh(2v) down to the point
        assert rel_err(surface_homothetic(cfg, u, v), expected) <= 1e-9


def test_spacelike_theta7_closed_form(rng):
    cfg = cfg_for(ConeKind.SPACELIKE, 7.0, XiMode.PAPER_APPROX)
    c7 = math.cosh(7)
    for _ in range(200):
        u, v = rng.uniform(0.5, 2), rng.uniform(0, TWO_PI)
        lu = math.log(u)
        expected = Vec3M(-u * c7 * math.sinh(lu), u * c7 * math.cosh(lu) * math.cos(v),
                         u * c7 * math.cosh(lu) * math.sin(v))
        assert rel_err(surface_direct(cfg, u, v), expected) <= 1e-12
        assert rel_err(surface_quaternion(cfg, u, v), expected) <= 1e-12
        assert rel_err(surface_homothetic(cfg, u, v), expected) <= 1e-9


@pytest.mark.parametrize("cone", list(ConeKind))
@pytest.mark.parametrize("theta", [0.5, 1.0, 7.0])
def test_matches_symbolic_surface(cone, theta, rng):
    fn = sp.lambdify((_u, _v), symbolic_surface(cone).subs(_t, theta), "mpmath")
    cfg = cfg_for(cone, theta)
    for _ in range(20):
        u, v = rng.uniform(0.5, 2), rng.uniform(0, TWO_PI)
        expected = Vec3M(*(float(c) for c in fn(u, v)))
        assert rel_err(surface_direct(cfg, u, v), expected) <= 1e-13


@pytest.mark.parametrize("cone", list(ConeKind))
@pytest.mark.parametrize("theta", [0.5, 1.0, 7.0])
def test_three_constructions_agree(cone, theta, rng):
    cfg = cfg_for(cone, theta)
    for _ in range(300):
        u, v = rng.uniform(0.5, 2), rng.uniform(0, TWO_PI)
        d = surface_direct(cfg, u, v)
        assert rel_err(surface_quaternion(cfg, u, v), d) <= 1e-9
        assert rel_err(surface_homothetic(cfg, u, v), d) <= 1e-9


def test_quaternion_product_is_pure(rng):
    for cone in ConeKind:
        cfg = cfg_for(cone, 1.0)
        for _ in range(1000):
            u, v = rng.uniform(0.5, 2), rng.uniform(0, TWO_PI)
            h = homothetic_scale(cfg, u)
            q1 = slope_quaternion(xi(cfg, u), cfg.curve.derivative(v), half_angle=False)
            prod = sq_product(q1, (cfg.curve.eval(v) * h).as_quaternion())
            assert abs(prod.scalar) <= 1e-10 * h


def test_non_pure_product_detected():
    g = builtin_curve("s12-circle")

    def skew_tangent(v):
        # unit spacelike, but no longer orthogonal to g(v)
        d = Vec3M(0.0, -math.sin(v), math.cos(v)) + g.eval(v) * 0.01
        return d / math.sqrt(minkowski_dot(d, d))

    cfg = SlopeSurfaceConfig(1.0, ConeKind.SPACELIKE,
                             SlopeCurve("skew", g.eval, skew_tangent, AmbientQuadric.S12))
    with pytest.raises(NonPureProduct):
        surface_quaternion(cfg, 1.5, 0.3)


def test_homothetic_motion():
    cfg = cfg_for(ConeKind.TIMELIKE, 7.0, XiMode.PAPER_APPROX)
    motion = HomotheticMotion.for_config(cfg)
    u, v = 1.7, 0.4
    assert motion.scale(u) == pytest.approx(u * math.sinh(7))
    q = motion.rotation(u, v)
    assert q.characteristic == pytest.approx(1.0, abs=1e-12)
    # homothetic quaternion of the theta = 7 closed-form surface
    lu = math.log(u)
    expected = [math.cosh(lu), -math.sinh(lu) * math.sinh(v), 0.0, -math.sinh(lu) * math.cosh(v)]
    np.testing.assert_allclose((motion.quaternion(u, v) / motion.scale(u)).to_array(),
                               expected, atol=1e-14)
    assert rel_err(motion.apply(u, v, cfg.curve.eval(v)), surface_direct(cfg, u, v)) <= 1e-12


@pytest.mark.parametrize("fn", [surface_direct, surface_quaternion, surface_homothetic])
def test_nonpositive_u_rejected(fn):
    cfg = cfg_for(ConeKind.TIMELIKE, 1.0)
    for u in (0.0, -1.0):
        with pytest.raises(DomainError):
            fn(cfg, u, 0.0)


# -- cone membership and norms ------------------------------------------------

@pytest.mark.parametrize("cone", list(ConeKind))
@pytest.mark.parametrize("theta", [0.5, 1.0, 7.0])
def test_position_norm_law(cone, theta, rng):
    cfg = cfg_for(cone, theta)
    for _ in range(300):
        u, v = rng.uniform(0.5, 2), rng.uniform(0, TWO_PI)
        x = surface_direct(cfg, u, v)
        h = u * (math.sinh(theta) if cone is ConeKind.TIMELIKE else math.cosh(theta))
        assert abs(math.sqrt(abs(minkowski_dot(x, x))) - h) <= 1e-10 * h


@pytest.mark.parametrize("cone", list(ConeKind))
def test_classify_point(cone, rng):
    cfg = cfg_for(cone, 1.0)
    for _ in range(50):
        u, v = rng.uniform(0.5, 2), rng.uniform(0, TWO_PI)
        rep = classify_point(cfg, u, v)
        h = u * (math.sinh(1.0) if cone is ConeKind.TIMELIKE else math.cosh(1.0))
        sign = -1.0 if cone is ConeKind.TIMELIKE else 1.0
        assert rep.position_norm == pytest.approx(sign * h * h, rel=1e-10)
        assert rep.cone_correct and rep.spacelike_surface
        assert rep.E > 0 and rep.E * rep.G - rep.F ** 2 > 0


# -- partials and the constant slope -----------------------------------------

def test_partial_v_at_origin():
    cfg = cfg_for(ConeKind.TIMELIKE, 1.0)
    _, xv = surface_partials(cfg, 1.0, 0.0)
    np.testing.assert_allclose(xv.to_array(), [0, 0, math.sinh(1.0)], atol=1e-8)


def test_partial_u_matches_closed_form_derivative():
    cfg = cfg_for(ConeKind.TIMELIKE, 7.0, XiMode.PAPER_APPROX)
    x = symbolic_surface(ConeKind.TIMELIKE, paper_approx=True).subs(_t, 7)
    oracle = [float(c) for c in x.diff(_u).subs({_u: 1, _v: 0}).evalf(30)]
    xu, _ = surface_partials(cfg, 1.0, 0.0)
    np.testing.assert_allclose(xu.to_array(), oracle, rtol=0, atol=1e-6 * max(map(abs, oracle)))


@pytest.mark.parametrize("cone", list(ConeKind))
@pytest.mark.parametrize("theta", [0.5, 1.0, 7.0])
def test_partials_finite_and_nonzero(cone, theta):
    cfg = cfg_for(cone, theta)
    for u in np.linspace(0.5, 2, 64):
        for v in np.linspace(0, TWO_PI, 64):
            xu, xv = surface_partials(cfg, float(u), float(v))
            assert np.all(np.isfinite(xu.to_array())) and np.all(np.isfinite(xv.to_array()))
            assert xu.max_abs() > 0 and xv.max_abs() > 0


def test_partials_reject_small_u():
    with pytest.raises(DomainError):
        surface_partials(cfg_for(ConeKind.TIMELIKE, 1.0), 1e-4, 0.0)


@pytest.mark.parametrize("cone", list(ConeKind))
@pytest.mark.parametrize("theta", [0.5, 1.0])
def test_slope_measure_matches_symbolic_oracle(cone, theta):
    oracle = sp.lambdify((_u, _v), symbolic_measure(cone).subs(_t, theta), "mpmath")
    cfg = cfg_for(cone, theta)
    expected = math.cosh(theta) if cone is ConeKind.TIMELIKE else math.sinh(theta)
    for u in (0.5, 1.0, math.e / 2, 2.0):
        for v in (0.0, 1.0, 3.0, TWO_PI):
            ref = float(oracle(u, v))
            assert ref == pytest.approx(expected, rel=1e-12)
            assert abs(slope_measure(cfg, u, v) - ref) <= 1e-5


@pytest.mark.parametrize("cone", list(ConeKind))
@pytest.mark.parametrize("theta", [0.5, 1.0])
def test_slope_measure_constant(cone, theta):
    cfg = cfg_for(cone, theta)
    m = np.array([slope_measure(cfg, float(u), float(v))
                  for u in np.linspace(0.5, 2, 16) for v in np.linspace(0, TWO_PI, 16)])
    assert np.std(m) <= 1e-6


def test_slope_measure_u_invariant():
    cfg = cfg_for(ConeKind.TIMELIKE, 1.0)
    for v in (0.0, 0.7, 2.5):
        assert abs(slope_measure(cfg, 1.0, v) - slope_measure(cfg, math.e, v)) <= 1e-6


@pytest.mark.parametrize("cone", list(ConeKind))
def test_slope_measure_theta_seven_relative(cone):
    # binary64 cannot resolve the slope to 1e-6 absolute at theta = 7; see README
    cfg = cfg_for(cone, 7.0)
    m = np.array([slope_measure(cfg, float(u), float(v))
                  for u in np.linspace(0.5, 2, 16) for v in np.linspace(0, TWO_PI, 16)])
    expected = math.cosh(7.0) if cone is ConeKind.TIMELIKE else math.sinh(7.0)
    assert np.std(m) / expected <= 1e-3
    assert np.max(np.abs(m / expected - 1)) <= 1e-2


# -- grids ---------------------------------------------------------------------

def test_grid_rejects_bad_ranges():
    cfg = cfg_for(ConeKind.TIMELIKE, 1.0)
    with pytest.raises(DomainError):
        sample_grid(cfg, (1.0, 1.0), (0.0, 1.0), 2, 2)
    with pytest.raises(DomainError):
        sample_grid(cfg, (0.0, 1.0), (0.0, 1.0), 4, 4)
    with pytest.raises(DomainError):
        sample_grid(cfg, (0.5, 1.0), (1.0, 0.0), 4, 4)
    with pytest.raises(DomainError):
        sample_grid(cfg, (0.5, 1.0), (0.0, 1.0), 1, 4)


def test_grid_shape_cone_and_determinism():
    cfg = cfg_for(ConeKind.TIMELIKE, 7.0, XiMode.PAPER_APPROX)
    g = sample_grid(cfg, (0.5, 2.0), (0.0, TWO_PI), 64, 64)
    assert g.points.shape == (64, 64, 3)
    assert np.all(np.isfinite(g.points))
    for i in range(0, 64, 7):
        for j in range(0, 64, 5):
            x = g.point(i, j)
            assert minkowski_dot(x, x) < 0
    again = sample_grid(cfg, (0.5, 2.0), (0.0, TWO_PI), 64, 64)
    assert g.points.tobytes() == again.points.tobytes()


@pytest.mark.parametrize("cone", list(ConeKind))
def test_direct_vs_homothetic_grid(cone):
    cfg = cfg_for(cone, 1.0)
    a = sample_grid(cfg, (0.5, 2.0), (0.0, TWO_PI), 32, 32, Construction.DIRECT).points
    b = sample_grid(cfg, (0.5, 2.0), (0.0, TWO_PI), 32, 32, Construction.HOMOTHETIC).points
    scale = np.max(np.abs(a), axis=2)
    assert np.max(np.max(np.abs(a - b), axis=2) / scale) <= 1e-9
