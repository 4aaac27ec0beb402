"""Alternating planar arc diagrams as words in basic operators."""

from .composition import (
    apply_as_pdc,
    apply_to_complexes,
    apply_to_smoothings,
    close_to_link,
    compose_into_workspace,
    head_pattern,
    planar_coblin,
    planar_cobordism,
)
from .exceptions import ArityMismatch, OrientationMismatch, PlanarError
from .operators import (
    Binary,
    OperatorKind,
    OperatorWord,
    Unary,
    alternating_pattern,
    binary,
    closure_word,
    curl_sign,
    enumerate_partial_closures,
    identity_word,
    operator_rotation_number,
    then,
    unary,
)
from .wiring import Connection, Trace, Wiring, compile_word, rotation_wiring, trace

__all__ = [
    "apply_as_pdc",
    "apply_to_complexes",
    "apply_to_smoothings",
    "close_to_link",
    "compose_into_workspace",
    "head_pattern",
    "planar_coblin",
    "planar_cobordism",
    "ArityMismatch",
    "OrientationMismatch",
    "PlanarError",
    "Binary",
    "OperatorKind",
    "OperatorWord",
    "Unary",
    "alternating_pattern",
    "binary",
    "closure_word",
    "curl_sign",
    "enumerate_partial_closures",
    "identity_word",
    "operator_rotation_number",
    "then",
    "unary",
    "Connection",
    "Trace",
    "Wiring",
    "compile_word",
    "rotation_wiring",
    "trace",
]
