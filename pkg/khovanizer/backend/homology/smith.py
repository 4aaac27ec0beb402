"""Homology of complexes of free modules over the integers or rationals.

Unit pivots are peeled off first with integer row operations, which keeps
the Smith normal form unchanged; the rest goes through sympy's
``invariant_factors`` (integers) or ``DomainMatrix.rank`` (rationals).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from sympy import factorint
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from ..cobordism import INTEGERS, GroundRing, Scalar

logger = logging.getLogger(__name__)

Matrix = List[List[Scalar]]


@dataclass
class ScalarComplex:
    """Free modules ``dims[i]`` and maps ``maps[i]: C_i -> C_{i+1}``.

    ``maps[i]`` has ``dims[i + 1]`` rows and ``dims[i]`` columns.
    """

    dims: Dict[int, int] = field(default_factory=dict)
    maps: Dict[int, Matrix] = field(default_factory=dict)

    def degrees(self) -> List[int]:
        return sorted(i for i, dim in self.dims.items() if dim)


@dataclass(frozen=True)
class MapInvariants:
    rank: int
    torsion: Tuple[int, ...]


def _peel_units(matrix: Matrix, ring: GroundRing) -> Tuple[int, Matrix]:
    rows: Dict[int, Dict[int, Scalar]] = {}
    for r, row in enumerate(matrix):
        entries = {c: value for c, value in enumerate(row) if value != 0}
        if entries:
            rows[r] = entries
    peeled = 0
    while True:
        pivot = next(
            ((r, c, v) for r, entries in rows.items() for c, v in entries.items() if ring.is_unit(v)),
            None,
        )
        if pivot is None:
            break
        r, c, v = pivot
        pivot_row = rows.pop(r)
        inverse = ring.inverse(v)
        for other, entries in list(rows.items()):
            if c not in entries:
                continue
            factor = entries[c] * inverse
            for column, value in pivot_row.items():
                updated = entries.get(column, 0) - factor * value
                if updated:
                    entries[column] = updated
                else:
                    entries.pop(column, None)
            if not entries:
                del rows[other]
        peeled += 1
    columns = sorted({c for entries in rows.values() for c in entries})
    rest = [[entries.get(c, 0) for c in columns] for _, entries in sorted(rows.items())]
    return peeled, rest


def _prime_powers(value: int) -> List[int]:
    return [int(p) ** e for p, e in sorted(factorint(value).items())]


def map_invariants(matrix: Matrix, ring: GroundRing = INTEGERS) -> MapInvariants:
    """Rank of ``matrix`` and, over the integers, its torsion as prime powers."""
    peeled, rest = _peel_units(matrix, ring)
    if not rest or not rest[0]:
        return MapInvariants(peeled, ())
    shape = (len(rest), len(rest[0]))
    if ring.selector == "q":
        elements = [[QQ(Fraction(v).numerator, Fraction(v).denominator) for v in row] for row in rest]
        return MapInvariants(peeled + DomainMatrix(elements, shape, QQ).rank(), ())
    elements = [[ZZ(int(v)) for v in row] for row in rest]
    factors = [int(f) for f in invariant_factors(DomainMatrix(elements, shape, ZZ)) if f != 0]
    torsion: List[int] = []
    for value in factors:
        if abs(value) > 1:
            torsion.extend(_prime_powers(abs(value)))
    return MapInvariants(peeled + len(factors), tuple(sorted(torsion)))


def smith_homology(complex_: ScalarComplex, ring: GroundRing = INTEGERS) -> Dict[int, Tuple[int, Tuple[int, ...]]]:
    """``i -> (betti, torsion)`` for every degree with a non-zero module.

    Torsion in degree ``i`` comes from the non-unit invariant factors of the
    incoming map ``C_{i-1} -> C_i``.
    """
    invariants: Dict[int, MapInvariants] = {}
    for i, matrix in complex_.maps.items():
        if matrix and matrix[0]:
            invariants[i] = map_invariants(matrix, ring)
    result: Dict[int, Tuple[int, Tuple[int, ...]]] = {}
    for i in complex_.degrees():
        outgoing = invariants.get(i, MapInvariants(0, ()))
        incoming = invariants.get(i - 1, MapInvariants(0, ()))
        betti = complex_.dims[i] - outgoing.rank - incoming.rank
        if betti < 0:
            raise ArithmeticError(f"Negative Betti number in degree {i}: d^2 is not zero")
        if betti or incoming.torsion:
            result[i] = (betti, incoming.torsion)
    return result


__all__ = ["Matrix", "ScalarComplex", "MapInvariants", "map_invariants", "smith_homology"]
