"""kleinsail: doubly-periodic self-stressed planar frameworks from Klein
continued-fraction sails, in exact rational arithmetic."""

from .cones import (
    AgreementReport,
    ConeSpec,
    OracleSail,
    brute_force_sail,
    cone_membership,
    oracle_patch_agreement,
    signs_for_point,
)
from .exact import (
    IDENTITY,
    SpectrumClass,
    char_poly,
    classify_spectrum,
    cross,
    det3,
    mat_inv,
    mat_mul,
    mat_pow,
    mat_vec,
)
from .intgeom import (
    integer_area,
    integer_distance_line,
    integer_distance_plane,
    integer_length,
    integer_sine,
    integer_volume,
)
from .stress import (
    EdgeStressRecord,
    EquilibriumReport,
    PeriodicityReport,
    ProjectionPlane,
    StressedFramework,
    check_periodicity,
    check_planar_equilibrium,
    check_projective_equilibrium,
    edge_lifting_coefficient,
    integerize,
    integerize_stresses,
    lift_framework,
    lifting_coefficient,
    lifting_coefficient_invariants,
    project_surface,
    surface_lifting_coefficients,
)
from .surface import (
    DirichletReport,
    OrientedSurface,
    PeriodicSailSpec,
    SailPatch,
    build_surface,
    generate_patch,
    verify_dirichlet_generators,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
