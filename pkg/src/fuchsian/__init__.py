"""Fuchsian uniformization toolkit for the curves y^2 = z^(2g+1) +/- 1.

Builds the elliptic side-pairing maps of the regular hyperbolic polygon
spanned by the branch points on the unit disk, the hyperbolic surface
subgroup generated by their pairwise products, the closed-form generator
family coming from quotients of hypergeometric solutions, and the
{p, q} tessellation bookkeeping for the covered degree families.
"""

from .curves import HyperellipticCurve, fde_coefficient, genus_from_degree, roots
from .disk_geometry import (
    GeodesicArc,
    HyperbolicPolygon,
    cross_ratio,
    geodesic_apex,
    geodesic_between,
    polygon_area,
    polygon_from_vertices,
    side_pairing_elliptic,
    triangle_area,
    vertex_cycle_angle_check,
)
from .group_builder import (
    FuchsianGroupSpec,
    NonHyperbolicProductError,
    VerifyEntry,
    VerifyReport,
    boundary_generators,
    fundamental_polygon,
    subgroup_generators,
    verify_group,
)
from .moebius import (
    IDENTITY,
    INFINITY,
    MapClass,
    MoebiusMap,
    apply,
    classify,
    compose,
    fixed_points,
    inverse,
    normalize,
    projectively_equal,
)
from .tessellation import (
    CycleCount,
    GenusRange,
    TessellationSpec,
    cycle_count,
    euler_characteristic,
    genus_range,
    is_hyperbolic_tessellation,
    q_from_euler,
    tessellation_for_degree,
)
from .whittaker import (
    HdeParams,
    connection_map,
    connection_map_from_gammas,
    continuation_residual,
    gamma_fn,
    hde_params,
    hyp2f1,
    monodromy_zero,
    whittaker_generator,
    whittaker_subgroup,
)

__version__ = "0.1.0"

__all__ = [
    "HyperellipticCurve",
    "fde_coefficient",
    "genus_from_degree",
    "roots",
    "GeodesicArc",
    "HyperbolicPolygon",
    "cross_ratio",
    "geodesic_apex",
    "geodesic_between",
    "polygon_area",
    "polygon_from_vertices",
    "side_pairing_elliptic",
    "triangle_area",
    "vertex_cycle_angle_check",
    "FuchsianGroupSpec",
    "NonHyperbolicProductError",
    "VerifyEntry",
    "VerifyReport",
    "boundary_generators",
    "fundamental_polygon",
    "subgroup_generators",
    "verify_group",
    "IDENTITY",
    "INFINITY",
    "MapClass",
    "MoebiusMap",
    "apply",
    "classify",
    "compose",
    "fixed_points",
    "inverse",
    "normalize",
    "projectively_equal",
    "CycleCount",
    "GenusRange",
    "TessellationSpec",
    "cycle_count",
    "euler_characteristic",
    "genus_range",
    "is_hyperbolic_tessellation",
    "q_from_euler",
    "tessellation_for_degree",
    "HdeParams",
    "connection_map",
    "connection_map_from_gammas",
    "continuation_residual",
    "gamma_fn",
    "hde_params",
    "hyp2f1",
    "monodromy_zero",
    "whittaker_generator",
    "whittaker_subgroup",
]
