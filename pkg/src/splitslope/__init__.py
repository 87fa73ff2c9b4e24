"""Split-quaternion algebra in Minkowski 3-space and spacelike constant slope surfaces."""

from .algebra import (
    CausalCharacter,
    PolarForm,
    PolarVariant,
    SplitQuaternion,
    Vec3M,
    causal_character,
    characteristic,
    commutator,
    lorentz_cross,
    minkowski_dot,
    polar_decompose,
    sq_conjugate,
    sq_inverse,
    sq_norm,
    sq_product,
)
from .curves import AmbientQuadric, SlopeCurve, builtin_curve, validate_curve
from .errors import *  # noqa: F401,F403
from .rotation import (
    ConeKind,
    LorentzRotation,
    XiMode,
    is_lorentz_orthogonal,
    rotation_matrix,
    sandwich,
    slope_quaternion,
    slope_rotation,
)
from .surfaces import (
    Construction,
    HomotheticMotion,
    SlopeSurfaceConfig,
    classify_point,
    sample_grid,
    slope_measure,
    surface_direct,
    surface_homothetic,
    surface_partials,
    surface_quaternion,
    xi,
)

__version__ = "0.1.0"
