"""Formal direct sums of graded smoothings and matrices of cobordisms.

A ``MatMorphism`` stores its cells sparsely. Cell ``(i, j)`` maps entry
``j`` of the domain to entry ``i`` of the codomain, so composition is the
ordinary matrix product ``(F ∘ G)[i, j] = Σ_k F[i, k] G[k, j]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from .cobordism import CobLin, compose_cob, identity_cobordism
from .exceptions import BoundaryMismatch, DimensionMismatch
from .smoothing import GradedSmoothing

Cell = Tuple[int, int, CobLin]


@dataclass(frozen=True)
class MatObject:
    entries: Tuple[GradedSmoothing, ...] = ()

    def __post_init__(self) -> None:
        counts = {entry.smoothing.boundary_count for entry in self.entries}
        if len(counts) > 1:
            raise BoundaryMismatch(f"Entries mix boundary counts {sorted(counts)}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[GradedSmoothing]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> GradedSmoothing:
        return self.entries[index]

    @property
    def boundary_count(self) -> Optional[int]:
        return self.entries[0].smoothing.boundary_count if self.entries else None


@dataclass(frozen=True)
class MatMorphism:
    domain: MatObject
    codomain: MatObject
    cells: Tuple[Cell, ...] = ()

    @classmethod
    def build(
        cls, domain: MatObject, codomain: MatObject, cells: Iterable[Cell]
    ) -> "MatMorphism":
        """Validate, sum repeated positions and drop zero cells."""
        merged: Dict[Tuple[int, int], CobLin] = {}
        for row, column, value in cells:
            if not (0 <= row < len(codomain) and 0 <= column < len(domain)):
                raise DimensionMismatch(
                    f"Cell ({row}, {column}) outside a "
                    f"{len(codomain)}x{len(domain)} matrix"
                )
            source = domain[column].smoothing
            target = codomain[row].smoothing
            if value.bottom != source or value.top != target:
                raise BoundaryMismatch(
                    f"Cell ({row}, {column}) runs {value.bottom}->{value.top}, "
                    f"expected {source}->{target}"
                )
            key = (row, column)
            merged[key] = merged[key] + value if key in merged else value
        kept = tuple(
            (row, column, value)
            for (row, column), value in sorted(merged.items())
            if not value.is_zero()
        )
        return cls(domain, codomain, kept)

    @classmethod
    def zero(cls, domain: MatObject, codomain: MatObject) -> "MatMorphism":
        return cls(domain, codomain, ())

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.codomain), len(self.domain)

    def cell(self, row: int, column: int) -> CobLin:
        for r, c, value in self.cells:
            if (r, c) == (row, column):
                return value
        return CobLin.zero(self.domain[column].smoothing, self.codomain[row].smoothing)

    def is_zero(self) -> bool:
        return not self.cells

    def by_column(self) -> Dict[int, List[Tuple[int, CobLin]]]:
        columns: Dict[int, List[Tuple[int, CobLin]]] = {}
        for row, column, value in self.cells:
            columns.setdefault(column, []).append((row, value))
        return columns


def mat_identity(obj: MatObject) -> MatMorphism:
    return MatMorphism.build(
        obj, obj, [(i, i, identity_cobordism(entry.smoothing)) for i, entry in enumerate(obj)]
    )


def mat_compose(outer: MatMorphism, inner: MatMorphism) -> MatMorphism:
    """``outer ∘ inner``: apply ``inner`` first."""
    if len(outer.domain) != len(inner.codomain):
        raise DimensionMismatch(
            f"Cannot compose {outer.shape[0]}x{outer.shape[1]} with "
            f"{inner.shape[0]}x{inner.shape[1]}"
        )
    if outer.domain != inner.codomain:
        raise DimensionMismatch("Inner codomain differs from outer domain")
    outer_columns = outer.by_column()
    cells: List[Cell] = []
    for middle, column, first in inner.cells:
        for row, second in outer_columns.get(middle, ()):
            cells.append((row, column, compose_cob(first, second)))
    return MatMorphism.build(inner.domain, outer.codomain, cells)


__all__ = [
    "Cell",
    "MatObject",
    "MatMorphism",
    "mat_identity",
    "mat_compose",
]
