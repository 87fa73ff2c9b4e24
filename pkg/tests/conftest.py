import math

import numpy as np
import pytest

from splitslope import SplitQuaternion, Vec3M

SEED = 1729


def unit_spacelike_axis(rng, spread=2.0):
    """Point of S12 with bounded rapidity."""
    a = rng.uniform(0, 2 * math.pi)
    b = rng.uniform(-spread, spread)
    return Vec3M(math.sinh(b), math.cosh(b) * math.cos(a), math.cosh(b) * math.sin(a))


def unit_timelike_axis(rng, spread=2.0):
    """Point of the upper sheet of H2."""
    a = rng.uniform(0, 2 * math.pi)
    b = rng.uniform(0, spread)
    return Vec3M(math.cosh(b), math.sinh(b) * math.cos(a), math.sinh(b) * math.sin(a))


def random_unit_timelike(rng):
    """Exactly-unit timelike quaternion from a polar form with angle in [-3, 3]."""
    t = rng.uniform(-3, 3)
    if rng.random() < 0.5:
        return SplitQuaternion.from_parts(math.cosh(t), unit_spacelike_axis(rng) * math.sinh(t))
    return SplitQuaternion.from_parts(math.cos(t), unit_timelike_axis(rng) * math.sin(t))


def random_quaternion(rng, lo=-2.0, hi=2.0):
    return SplitQuaternion.from_array(rng.uniform(lo, hi, 4))


def random_vector(rng, lo=-2.0, hi=2.0):
    return Vec3M.from_array(rng.uniform(lo, hi, 3))


def close_q(a, b, tol):
    return float(np.max(np.abs(a.to_array() - b.to_array()))) <= tol


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)
