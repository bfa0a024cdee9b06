"""Plucker-type invariants of generic plane curves from their Newton
polygons: combinatorial formulas, dual curves, genericity checks, and an
independent analytic oracle."""

from .assumptions import (
    AssumptionReport,
    ThinTriangleWitness,
    Verdict,
    assumption2_holds,
    check_assumption1,
    check_assumption3,
    find_Qd_subdiagram,
    full_assumption_report,
    is_class_Qd,
    is_thin,
)
from .formulas import (
    PluckerReport,
    bitangent_count,
    dual_area_closed,
    dual_fan,
    dual_polygon,
    euler_characteristic,
    hessian_polytope,
    inflection_count,
    plucker_report,
    vertical_tangent_count,
)
from .lattice import (
    DegeneratePolygonError,
    Face,
    LatticePolygon,
    Point,
    WeightedFan,
    contains_translate,
    convex_hull,
    dilate,
    doubled_area,
    edge_fan,
    interior_lattice_points,
    lattice_length,
    lattice_points,
    minkowski_sum,
    mixed_volume,
    negate,
    rectangle,
    rotate_r,
    standard_triangle,
    support_set,
    volume,
)
from .oracle import (
    DegenerateSampleError,
    OracleConfig,
    OracleError,
    RetriesExhaustedError,
    SparsePoly,
    count_torus_solutions,
    hessian_curve,
    implicitize_dual,
    inflection_oracle,
    sample_dual_points,
    sample_poly,
    vertical_tangent_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "AssumptionReport",
    "DegeneratePolygonError",
    "DegenerateSampleError",
    "Face",
    "LatticePolygon",
    "OracleConfig",
    "OracleError",
    "PluckerReport",
    "Point",
    "RetriesExhaustedError",
    "SparsePoly",
    "ThinTriangleWitness",
    "Verdict",
    "WeightedFan",
    "assumption2_holds",
    "bitangent_count",
    "check_assumption1",
    "check_assumption3",
    "contains_translate",
    "convex_hull",
    "count_torus_solutions",
    "dilate",
    "doubled_area",
    "dual_area_closed",
    "dual_fan",
    "dual_polygon",
    "edge_fan",
    "euler_characteristic",
    "find_Qd_subdiagram",
    "full_assumption_report",
    "hessian_curve",
    "hessian_polytope",
    "implicitize_dual",
    "inflection_count",
    "inflection_oracle",
    "interior_lattice_points",
    "is_class_Qd",
    "is_thin",
    "lattice_length",
    "lattice_points",
    "minkowski_sum",
    "mixed_volume",
    "negate",
    "plucker_report",
    "rectangle",
    "rotate_r",
    "sample_dual_points",
    "sample_poly",
    "standard_triangle",
    "support_set",
    "vertical_tangent_count",
    "vertical_tangent_oracle",
    "volume",
]
