"""Versioned JSON documents for chain complexes.

Objects are listed per degree with their matching, loops and quantum
shift; differentials are sparse cell lists.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, List, Union

from ..cobordism import (
    CobLin,
    Component,
    GradedSmoothing,
    MatMorphism,
    MatObject,
    NonAlternating,
    ReducedCobordism,
    Scalar,
    build_smoothing,
    ground_ring,
    rotation_number,
)
from .chain_complex import ChainComplex
from .exceptions import ComplexError

COMPLEX_FORMAT = "khovanizer.complex"
COMPLEX_VERSION = 1


def _coefficient(value: Scalar) -> Union[int, str]:
    if isinstance(value, Fraction):
        return str(value)
    return int(value)


def graded_to_dict(r: int, index: int, graded: GradedSmoothing) -> Dict[str, Any]:
    smoothing = graded.smoothing
    try:
        rotation = rotation_number(smoothing)
    except NonAlternating:
        rotation = None
    return {
        "degree": r,
        "index": index,
        "arcs": [list(arc) for arc in smoothing.arcs],
        "loops": list(smoothing.loops),
        "oriented": smoothing.oriented,
        "q": graded.q_shift,
        "rotation": rotation,
        "shifted_rotation": None if rotation is None else rotation + graded.q_shift,
    }


def complex_to_document(complex_: ChainComplex) -> Dict[str, Any]:
    objects = [graded_to_dict(r, i, g) for r, i, g in complex_.entries()]
    cells: List[Dict[str, Any]] = []
    for offset, matrix in enumerate(complex_.differentials):
        r = complex_.min_degree + offset
        for row, column, value in matrix.cells:
            cells.append(
                {
                    "degree": r,
                    "row": row,
                    "column": column,
                    "terms": [
                        {
                            "coefficient": _coefficient(coefficient),
                            "components": [
                                {
                                    "bottom": list(c.bottom),
                                    "top": list(c.top),
                                    "dotted": c.dotted,
                                }
                                for c in cobordism.components
                            ],
                        }
                        for cobordism, coefficient in value.terms
                    ],
                }
            )
    return {
        "format": COMPLEX_FORMAT,
        "version": COMPLEX_VERSION,
        "ring": str(complex_.ring),
        "boundary_count": complex_.boundary_count or 0,
        "min_degree": complex_.min_degree,
        "max_degree": complex_.max_degree,
        "objects": objects,
        "differentials": cells,
    }


def complex_from_document(document: Dict[str, Any]) -> ChainComplex:
    if document.get("format") != COMPLEX_FORMAT:
        raise ComplexError(f"Not a complex document: format={document.get('format')!r}")
    if document.get("version") != COMPLEX_VERSION:
        raise ComplexError(f"Unsupported complex document version {document.get('version')!r}")
    ring = ground_ring(document.get("ring", "z"))
    boundary = int(document.get("boundary_count", 0))
    min_degree = int(document["min_degree"])
    max_degree = int(document.get("max_degree", min_degree - 1))
    per_degree: Dict[int, List[GradedSmoothing]] = {
        r: [] for r in range(min_degree, max_degree + 1)
    }
    for entry in sorted(document.get("objects", []), key=lambda e: (e["degree"], e["index"])):
        smoothing = build_smoothing(
            boundary,
            [tuple(arc) for arc in entry["arcs"]],
            entry.get("loops", []),
            entry.get("oriented", True),
        )
        per_degree.setdefault(int(entry["degree"]), []).append(
            GradedSmoothing(smoothing, int(entry["q"]))
        )
    if per_degree:
        min_degree = min(min_degree, min(per_degree))
        max_degree = max(per_degree)
    objects = [
        MatObject(tuple(per_degree.get(r, ()))) for r in range(min_degree, max_degree + 1)
    ]
    grouped: Dict[int, List[Any]] = {}
    for cell in document.get("differentials", []):
        r = int(cell["degree"])
        source = objects[r - min_degree][int(cell["column"])].smoothing
        target = objects[r + 1 - min_degree][int(cell["row"])].smoothing
        terms = []
        for term in cell["terms"]:
            components = tuple(
                sorted(
                    Component(tuple(c["bottom"]), tuple(c["top"]), bool(c["dotted"]))
                    for c in term["components"]
                )
            )
            terms.append(
                (ReducedCobordism(source, target, components), ring.coerce(term["coefficient"]))
            )
        grouped.setdefault(r, []).append(
            (int(cell["row"]), int(cell["column"]), CobLin.from_terms(source, target, terms))
        )
    differentials = [
        MatMorphism.build(objects[offset], objects[offset + 1], grouped.get(min_degree + offset, []))
        for offset in range(len(objects) - 1)
    ]
    return ChainComplex(min_degree, tuple(objects), tuple(differentials), ring)


__all__ = [
    "COMPLEX_FORMAT",
    "COMPLEX_VERSION",
    "graded_to_dict",
    "complex_to_document",
    "complex_from_document",
]
