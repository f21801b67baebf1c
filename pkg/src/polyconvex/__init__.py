"""Exact polygon convexity tests in linear time, with brute-force oracles."""

from .angles import (
    EQ,
    GT,
    LT,
    HalfPlane,
    arg_approx,
    arg_compare,
    arg_less,
    direction_equiv,
    edge_vectors,
    halfplane,
)
from .convexity import (
    PropertyReport,
    SignTestTrace,
    is_simply_convex,
    is_strictly_convex_angles,
    is_strictly_convex_signs,
    property_report,
    sign_chain_constant,
    sign_sequences,
)
from .errors import (
    EmptyPolygon,
    GenerationFailed,
    GeometryError,
    NonPositiveScale,
    NotARotation,
    NotLocallyOrdinary,
    ParseError,
    SingularMap,
    TooFewVertices,
    ZeroVector,
)
from .geom import (
    Point,
    Polygon,
    Segment,
    Vector,
    collinear,
    det3,
    dim,
    half_open_disjoint,
    orientation_sign,
    scalar,
    to_one_side,
)
from .monotone import MonotoneClass, classify, classify_bruteforce
from .oracle import Hull, convex_hull, is_convex_oracle, is_simple_oracle, is_strict_oracle

__version__ = "0.1.0"

__all__ = [
    "EQ",
    "GT",
    "LT",
    "HalfPlane",
    "arg_approx",
    "arg_compare",
    "arg_less",
    "direction_equiv",
    "edge_vectors",
    "halfplane",
    "PropertyReport",
    "SignTestTrace",
    "is_simply_convex",
    "is_strictly_convex_angles",
    "is_strictly_convex_signs",
    "property_report",
    "sign_chain_constant",
    "sign_sequences",
    "EmptyPolygon",
    "GenerationFailed",
    "GeometryError",
    "NonPositiveScale",
    "NotARotation",
    "NotLocallyOrdinary",
    "ParseError",
    "SingularMap",
    "TooFewVertices",
    "ZeroVector",
    "Point",
    "Polygon",
    "Segment",
    "Vector",
    "collinear",
    "det3",
    "dim",
    "half_open_disjoint",
    "orientation_sign",
    "scalar",
    "to_one_side",
    "MonotoneClass",
    "classify",
    "classify_bruteforce",
    "Hull",
    "convex_hull",
    "is_convex_oracle",
    "is_simple_oracle",
    "is_strict_oracle",
]
