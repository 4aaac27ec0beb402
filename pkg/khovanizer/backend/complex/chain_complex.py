"""Bounded chain complexes over the matrix category of cobordisms."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

from ..cobordism import (
    INTEGERS,
    GradedSmoothing,
    GroundRing,
    MatMorphism,
    MatObject,
    degree,
    mat_compose,
)
from .exceptions import InhomogeneousDifferential, NotAComplex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChainComplex:
    """``objects[r - min_degree]`` sits in homological degree ``r``.

    ``differentials[n]`` maps ``objects[n]`` to ``objects[n + 1]``; there is
    one fewer differential than objects.
    """

    min_degree: int
    objects: Tuple[MatObject, ...]
    differentials: Tuple[MatMorphism, ...] = ()
    ring: GroundRing = field(default=INTEGERS)

    def __post_init__(self) -> None:
        expected = max(len(self.objects) - 1, 0)
        if len(self.differentials) != expected:
            raise ValueError(
                f"{len(self.objects)} objects need {expected} differentials, "
                f"got {len(self.differentials)}"
            )

    @classmethod
    def empty(cls, ring: GroundRing = INTEGERS) -> "ChainComplex":
        return cls(0, (), (), ring)

    @property
    def max_degree(self) -> int:
        return self.min_degree + len(self.objects) - 1

    def degrees(self) -> range:
        return range(self.min_degree, self.min_degree + len(self.objects))

    def is_empty(self) -> bool:
        return all(len(obj) == 0 for obj in self.objects)

    def object_at(self, r: int) -> MatObject:
        index = r - self.min_degree
        if 0 <= index < len(self.objects):
            return self.objects[index]
        return MatObject()

    def differential_at(self, r: int) -> MatMorphism:
        index = r - self.min_degree
        if 0 <= index < len(self.differentials):
            return self.differentials[index]
        return MatMorphism.zero(self.object_at(r), self.object_at(r + 1))

    def entries(self) -> Iterator[Tuple[int, int, GradedSmoothing]]:
        for r in self.degrees():
            for index, graded in enumerate(self.object_at(r)):
                yield r, index, graded

    @property
    def size(self) -> int:
        return sum(len(obj) for obj in self.objects)

    @property
    def boundary_count(self) -> Optional[int]:
        for obj in self.objects:
            if obj.boundary_count is not None:
                return obj.boundary_count
        return None

    def loop_count(self) -> int:
        return sum(graded.smoothing.loop_count for _, _, graded in self.entries())

    def with_ring(self, ring: GroundRing) -> "ChainComplex":
        return ChainComplex(self.min_degree, self.objects, self.differentials, ring)


def _check_homogeneous(r: int, matrix: MatMorphism) -> None:
    for row, column, value in matrix.cells:
        source = matrix.domain[column]
        target = matrix.codomain[row]
        for cobordism, _ in value.terms:
            total = degree(cobordism) + target.q_shift - source.q_shift
            if total != 0:
                raise InhomogeneousDifferential(
                    r, (row, column), f"{source} -> {target} has degree {total}"
                )


def validate(complex_: ChainComplex) -> None:
    """Check shapes, homogeneity and ``d ∘ d = 0``; raise on the first failure."""
    for offset, matrix in enumerate(complex_.differentials):
        r = complex_.min_degree + offset
        if matrix.domain != complex_.objects[offset] or (
            matrix.codomain != complex_.objects[offset + 1]
        ):
            raise NotAComplex(r)
        _check_homogeneous(r, matrix)
    for offset in range(len(complex_.differentials) - 1):
        r = complex_.min_degree + offset
        square = mat_compose(complex_.differentials[offset + 1], complex_.differentials[offset])
        if not square.is_zero():
            row, column, _ = square.cells[0]
            raise NotAComplex(r, (row, column))
    logger.debug("Validated complex with %d objects", complex_.size)


def is_valid(complex_: ChainComplex) -> bool:
    try:
        validate(complex_)
    except (NotAComplex, InhomogeneousDifferential):
        return False
    return True


def shift(complex_: ChainComplex, amount: int) -> ChainComplex:
    """Homological shift: the object in degree ``r`` moves to ``r + amount``."""
    return ChainComplex(
        complex_.min_degree + amount, complex_.objects, complex_.differentials, complex_.ring
    )


def object_multiset(complex_: ChainComplex) -> Counter:
    """Graded objects counted with their homological degree."""
    return Counter((r, graded) for r, _, graded in complex_.entries())


def euler_class(complex_: ChainComplex) -> Counter:
    """Signed count of graded objects; zero entries are dropped."""
    signed: Counter = Counter()
    for r, _, graded in complex_.entries():
        signed[graded] += -1 if r % 2 else 1
    return Counter({key: value for key, value in signed.items() if value != 0})


def describe(complex_: ChainComplex) -> List[str]:
    lines = []
    for r in complex_.degrees():
        entries = ", ".join(str(graded) for graded in complex_.object_at(r))
        lines.append(f"{r}: {entries}")
    return lines


__all__ = [
    "ChainComplex",
    "validate",
    "is_valid",
    "shift",
    "object_multiset",
    "euler_class",
    "describe",
]
