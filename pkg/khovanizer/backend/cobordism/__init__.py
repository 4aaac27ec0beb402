"""Oriented smoothings, dotted cobordisms modulo the local relations, matrices."""

from .cobordism import (
    CobLin,
    ReducedCobordism,
    boundary_circles,
    cap,
    cap_top_loop,
    circle_count,
    compose_cob,
    compose_reduced,
    connected_cobordism,
    cup,
    cup_bottom_loop,
    degree,
    identity_cobordism,
    saddle,
    split_loops,
)
from .exceptions import (
    BoundaryMismatch,
    CobordismError,
    CrossingMatching,
    DimensionMismatch,
    NonAlternating,
    NotInvertible,
)
from .matrix import MatMorphism, MatObject, mat_compose, mat_identity
from .ring import INTEGERS, RATIONALS, GroundRing, Scalar, ground_ring
from .smoothing import (
    EMPTY,
    GradedSmoothing,
    OrientedSmoothing,
    build_smoothing,
    closure_cycles,
    make_smoothing,
    rotation_number,
    shifted_rotation_number,
    standard_closure,
)
from .surfaces import Component, RawComponent, evaluate_closed, neck_cut, normalise_component, reduce_surface

__all__ = [
    "CobLin",
    "ReducedCobordism",
    "boundary_circles",
    "cap",
    "cap_top_loop",
    "circle_count",
    "compose_cob",
    "compose_reduced",
    "connected_cobordism",
    "cup",
    "cup_bottom_loop",
    "degree",
    "identity_cobordism",
    "saddle",
    "split_loops",
    "BoundaryMismatch",
    "CobordismError",
    "CrossingMatching",
    "DimensionMismatch",
    "NonAlternating",
    "NotInvertible",
    "MatMorphism",
    "MatObject",
    "mat_compose",
    "mat_identity",
    "INTEGERS",
    "RATIONALS",
    "GroundRing",
    "Scalar",
    "ground_ring",
    "EMPTY",
    "GradedSmoothing",
    "OrientedSmoothing",
    "build_smoothing",
    "closure_cycles",
    "make_smoothing",
    "rotation_number",
    "shifted_rotation_number",
    "standard_closure",
    "Component",
    "RawComponent",
    "evaluate_closed",
    "neck_cut",
    "normalise_component",
    "reduce_surface",
]
