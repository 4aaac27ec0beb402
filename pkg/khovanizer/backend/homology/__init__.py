"""Bigraded homology of reduced link complexes."""

from .exceptions import HomologyError, NotFullyReduced
from .extract import homology_table, scalar_complexes
from .smith import MapInvariants, ScalarComplex, map_invariants, smith_homology
from .table import (
    HOMOLOGY_FORMAT,
    HomologyGroup,
    HomologyTable,
    euler_characteristic,
    poincare_polynomial,
    render_table,
    tensor_tables,
    two_line_check,
)

__all__ = [
    "HomologyError",
    "NotFullyReduced",
    "homology_table",
    "scalar_complexes",
    "MapInvariants",
    "ScalarComplex",
    "map_invariants",
    "smith_homology",
    "HOMOLOGY_FORMAT",
    "HomologyGroup",
    "HomologyTable",
    "euler_characteristic",
    "poincare_polynomial",
    "render_table",
    "tensor_tables",
    "two_line_check",
]
