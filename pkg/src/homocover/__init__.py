"""Covering and inscribing homothets for families of homothets of a convex body."""
from .asymmetry import AsymmetryResult, asymmetry_at_point, minkowski_sigma, radial_scale
from .covering import (
    CoverResult,
    MinimalCover,
    centered_cover,
    cover_balls,
    cover_general,
    cover_simplex_facet_parallel,
    cover_symmetric,
    minimal_cover,
    verify_cover,
)
from .errors import (
    HomocoverError,
    InternalError,
    InvalidArgument,
    ParseError,
    PreconditionViolation,
    UnsupportedDimension,
    UnsupportedShape,
    WrongTheorem,
)
from .generators import (
    gen_depth_k_grid,
    gen_sharp_simplex,
    gen_touching_chain,
    named_body,
    sharp_simplex_ratio,
)
from .geometry import (
    Ball,
    Family,
    Homothet,
    Polytope,
    centroid,
    hull_contains_point,
    member_scaled,
    polar_polygon_2d,
    project_interval,
    support,
)
from .inscribing import InscribeResult, inscribe_dual, verify_inscribed
from .instance import parse_instance, serialize_instance
from .intervals import (
    Interval,
    WeightedInterval,
    depth_profile,
    dual_segment_fit,
    goodman_segment_cover,
    max_open_depth,
    union_is_contiguous,
)
from .separability import (
    DirectionSet,
    SeparationVerdict,
    check_depth_at_most_k,
    check_nonseparable,
    critical_directions_2d,
    depth_in_direction,
    nonseparable_in_direction,
)

__version__ = "0.1.0"

__all__ = [
    "AsymmetryResult",
    "asymmetry_at_point",
    "minkowski_sigma",
    "radial_scale",
    "CoverResult",
    "MinimalCover",
    "centered_cover",
    "cover_balls",
    "cover_general",
    "cover_simplex_facet_parallel",
    "cover_symmetric",
    "minimal_cover",
    "verify_cover",
    "HomocoverError",
    "InternalError",
    "InvalidArgument",
    "ParseError",
    "PreconditionViolation",
    "UnsupportedDimension",
    "UnsupportedShape",
    "WrongTheorem",
    "gen_depth_k_grid",
    "gen_sharp_simplex",
    "gen_touching_chain",
    "named_body",
    "sharp_simplex_ratio",
    "Ball",
    "Family",
    "Homothet",
    "Polytope",
    "centroid",
    "hull_contains_point",
    "member_scaled",
    "polar_polygon_2d",
    "project_interval",
    "support",
    "InscribeResult",
    "inscribe_dual",
    "verify_inscribed",
    "parse_instance",
    "serialize_instance",
    "Interval",
    "WeightedInterval",
    "depth_profile",
    "dual_segment_fit",
    "goodman_segment_cover",
    "max_open_depth",
    "union_is_contiguous",
    "DirectionSet",
    "SeparationVerdict",
    "check_depth_at_most_k",
    "check_nonseparable",
    "critical_directions_2d",
    "depth_in_direction",
    "nonseparable_in_direction",
]
