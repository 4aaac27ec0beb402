"""From a reduced link complex to its homology.

After reduction every object of a link complex is the empty smoothing with
a quantum shift, and every cell is a closed cobordism evaluation. The
complex splits into one scalar complex per shift ``j``.
"""

from __future__ import annotations

import logging
from typing import Dict, Optional

from ..cobordism import GroundRing
from ..complex import ChainComplex
from .exceptions import NotFullyReduced
from .smith import ScalarComplex, smith_homology
from .table import HomologyGroup, HomologyTable

logger = logging.getLogger(__name__)


def scalar_complexes(complex_: ChainComplex) -> Dict[int, ScalarComplex]:
    positions: Dict[int, Dict[int, Dict[int, int]]] = {}
    result: Dict[int, ScalarComplex] = {}
    for r, index, graded in complex_.entries():
        smoothing = graded.smoothing
        if smoothing.boundary_count or smoothing.loop_count:
            raise NotFullyReduced(f"Object {index} in degree {r} is {smoothing}, not empty", r)
        j = graded.q_shift
        scalar = result.setdefault(j, ScalarComplex())
        by_degree = positions.setdefault(j, {}).setdefault(r, {})
        by_degree[index] = scalar.dims.get(r, 0)
        scalar.dims[r] = scalar.dims.get(r, 0) + 1
    for j, scalar in result.items():
        for r in list(scalar.dims):
            if r + 1 in scalar.dims:
                scalar.maps[r] = [[0] * scalar.dims[r] for _ in range(scalar.dims[r + 1])]
    for offset, matrix in enumerate(complex_.differentials):
        r = complex_.min_degree + offset
        for row, column, value in matrix.cells:
            source = matrix.domain[column].q_shift
            target = matrix.codomain[row].q_shift
            if source != target:
                raise NotFullyReduced(
                    f"Cell ({row}, {column}) of d_{r} joins shifts {source} and {target}",
                    r,
                    (row, column),
                )
            scalar = result[source]
            table = positions[source]
            scalar.maps[r][table[r + 1][row]][table[r][column]] = value.scalar()
    return result


def homology_table(complex_: ChainComplex, ring: Optional[GroundRing] = None) -> HomologyTable:
    ring = ring or complex_.ring
    groups: Dict = {}
    for j, scalar in sorted(scalar_complexes(complex_).items()):
        for i, (betti, torsion) in smith_homology(scalar, ring).items():
            groups[(i, j)] = HomologyGroup(betti, torsion if ring.selector == "z" else ())
    table = HomologyTable(ring, groups)
    logger.debug("Homology has %d non-zero groups", len(table))
    return table


__all__ = ["scalar_complexes", "homology_table"]
