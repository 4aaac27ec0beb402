"""Diagonality and coherent diagonality of reduced tangle complexes."""

from .checks import (
    DiagonalityVerdict,
    DiagonalStatus,
    coherent_diagonality,
    diagonality,
    expected_constant,
    single_line_shape,
)

__all__ = [
    "DiagonalityVerdict",
    "DiagonalStatus",
    "coherent_diagonality",
    "diagonality",
    "expected_constant",
    "single_line_shape",
]
