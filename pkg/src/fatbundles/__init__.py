"""Exact certification of symplectic fatness for bundles over K/H."""

from .chevalley import (
    ChevalleyConstants,
    CompactLieAlgebra,
    adjoint_matrix,
    chevalley_constants,
    compact_real_form,
    killing_form,
)
from .errors import (
    DegenerateBase,
    DimensionError,
    FatbundlesError,
    InvalidPolytope,
    InvalidRootDatum,
    InvalidSubsystem,
    InvariantViolation,
    NoEscapeDirection,
)
from .fatness import (
    DualityContext,
    FatnessCertificate,
    Polytope,
    curvature_form,
    dual_inverse,
    dual_vector,
    nondegenerate,
    polytope_fat,
    translate_polytope,
    wall_test,
)
from .oracle import run_oracle
from .reductive import (
    Centralizer,
    ReductiveDecomposition,
    Subsystem,
    centralizer_subsystem,
    d_type_subsystem,
    decompose,
    validate_subsystem,
    x_sigma,
)
from .root_system import (
    RootSystem,
    Wall,
    build_root_system,
    dominant_representative,
    evaluate_root,
    forbidden_walls,
)
from .twistor import TwistorCertificate, certify_twistor, check_J, solve_T

__version__ = "0.1.0"
