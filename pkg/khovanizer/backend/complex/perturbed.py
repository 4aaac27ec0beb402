"""Perturbed double complexes.

Objects live on nodes ``(p, q)``. A map ``d^i`` runs from ``(p, q)`` to
``(p - i + 1, q + i)``; ``d^0`` is the vertical differential of column
``q``. The total complex puts ``(p, q)`` in degree ``p + q``.

Keys of a double complex always start with the node, ``(p, q, index, ...)``,
so delooped copies stay on the node of their parent.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Mapping, Optional, Tuple

from ..cobordism import INTEGERS, CobLin, GradedSmoothing, GroundRing, NotInvertible, compose_cob
from .chain_complex import ChainComplex
from .exceptions import InvalidPDC, NoSuchLoop
from .reduction import ReductionReport
from .workspace import ComplexWorkspace, Key

logger = logging.getLogger(__name__)

Node = Tuple[int, int]


class PerturbedDoubleComplex(ComplexWorkspace):
    def __init__(self, ring: GroundRing = INTEGERS) -> None:
        super().__init__(ring)
        self._next_index: Dict[Node, int] = {}

    def copy(self) -> "PerturbedDoubleComplex":
        duplicate = super().copy()
        assert isinstance(duplicate, PerturbedDoubleComplex)
        duplicate._next_index = dict(self._next_index)
        return duplicate

    @staticmethod
    def node_of(key: Key) -> Node:
        return key[0], key[1]

    def add(self, p: int, q: int, graded: GradedSmoothing) -> Key:
        index = self._next_index.get((p, q), 0)
        self._next_index[(p, q)] = index + 1
        key = (p, q, index)
        self.add_object(key, p + q, graded)
        return key

    def add_object(self, key: Key, degree: int, graded: GradedSmoothing) -> None:
        if len(key) < 3 or key[0] + key[1] != degree:
            raise InvalidPDC(f"Key {key} does not name a node in total degree {degree}")
        super().add_object(key, degree, graded)
        node = self.node_of(key)
        self._next_index[node] = max(self._next_index.get(node, 0), key[2] + 1)

    def arrow_index(self, source: Key, target: Key) -> int:
        (p1, q1), (p2, q2) = self.node_of(source), self.node_of(target)
        index = q2 - q1
        if index < 0 or p2 != p1 - index + 1:
            raise InvalidPDC(
                f"No perturbation maps node {(p1, q1)} to node {(p2, q2)}",
                source=source,
            )
        return index

    def set_cell(self, source: Key, target: Key, value: CobLin) -> None:
        self.arrow_index(source, target)
        super().set_cell(source, target, value)

    def nodes(self) -> List[Node]:
        return sorted({self.node_of(key) for key in self.objects})

    def node(self, p: int, q: int) -> List[Key]:
        return sorted(key for key in self.objects if self.node_of(key) == (p, q))

    def column(self, q: int) -> List[Key]:
        return [key for key in self.keys() if key[1] == q]

    def span(self) -> int:
        """Largest arrow index present."""
        return max(
            (self.arrow_index(s, t) for s, targets in self.outgoing.items() for t in targets),
            default=0,
        )

    def maps(self, index: int) -> List[Tuple[Key, Key, CobLin]]:
        return [(s, t, v) for s, t, v in self.cells() if self.arrow_index(s, t) == index]


def relation_failures(
    pdc: PerturbedDoubleComplex, k: Optional[int] = None
) -> List[Tuple[int, Key, Key]]:
    """Sources and targets where ``Σ_i d^i ∘ d^{k-i}`` is nonzero."""
    failures = []
    for source in pdc.keys():
        sums: Dict[Tuple[Key, int], CobLin] = {}
        for middle, first in pdc.outgoing[source].items():
            a = pdc.arrow_index(source, middle)
            for target, second in pdc.outgoing[middle].items():
                total = a + pdc.arrow_index(middle, target)
                if k is not None and total != k:
                    continue
                composite = compose_cob(first, second)
                slot = (target, total)
                sums[slot] = sums[slot] + composite if slot in sums else composite
        for (target, total), value in sorted(sums.items()):
            if not value.is_zero():
                failures.append((total, source, target))
    return failures


def relations_hold(pdc: PerturbedDoubleComplex, k: int) -> bool:
    return not relation_failures(pdc, k)


def validate_pdc(pdc: PerturbedDoubleComplex) -> None:
    failures = relation_failures(pdc)
    if failures:
        k, source, target = failures[0]
        raise InvalidPDC(
            f"Σ d^i d^(k-i) is nonzero for k={k} from {source} to {target}",
            k=k,
            source=source,
        )


def complex_as_pdc(
    complex_: ChainComplex, columns: Mapping[Tuple[int, int], int]
) -> PerturbedDoubleComplex:
    """Spread a complex over the grid: entry ``(r, index)`` goes to column ``columns[(r, index)]``.

    Missing entries sit in column 0. Columns may not decrease along the
    differential; an arrow climbing ``i`` columns becomes part of ``d^i``.
    """
    pdc = PerturbedDoubleComplex(complex_.ring)
    keys: Dict[Tuple[int, int], Key] = {}
    for r, index, graded in complex_.entries():
        q = columns.get((r, index), 0)
        keys[(r, index)] = pdc.add(r - q, q, graded)
    for offset, matrix in enumerate(complex_.differentials):
        r = complex_.min_degree + offset
        for row, column, value in matrix.cells:
            pdc.set_cell(keys[(r, column)], keys[(r + 1, row)], value)
    return pdc


def total_complex(pdc: PerturbedDoubleComplex, check: bool = True) -> ChainComplex:
    """``Tot(Ω)^n = ⊕_{p+q=n} Ω_{p,q}`` with ``d = Σ_i d^i``; nodes ordered by ``p``."""
    if check:
        validate_pdc(pdc)
    return pdc.to_complex()


def vertical_gauss_eliminate(
    pdc: PerturbedDoubleComplex, column: int, position: Tuple[int, int, int]
) -> PerturbedDoubleComplex:
    """Cancel the ``d^0`` cell from entry ``source`` of ``(p, column)``
    to entry ``target`` of ``(p + 1, column)``; ``position`` is
    ``(p, target, source)``.

    Every ``d^{i+j}`` from a node feeding the target to a node fed by the
    source picks up ``- γ_i φ⁻¹ δ_j``.
    """
    p, row, entry = position
    sources = pdc.node(p, column)
    targets = pdc.node(p + 1, column)
    if not (0 <= entry < len(sources) and 0 <= row < len(targets)):
        raise NotInvertible(f"No entry {position} in column {column}")
    result = pdc.copy()
    assert isinstance(result, PerturbedDoubleComplex)
    result.eliminate(sources[entry], targets[row])
    return result


def deloop_in_pdc(
    pdc: PerturbedDoubleComplex, position: Tuple[int, int, int], loop: int = 0
) -> PerturbedDoubleComplex:
    """Deloop entry ``position = (p, q, index)``; every incident ``d^i`` is conjugated."""
    p, q, index = position
    keys = pdc.node(p, q)
    result = pdc.copy()
    assert isinstance(result, PerturbedDoubleComplex)
    if not 0 <= index < len(keys):
        raise NoSuchLoop(f"Node {(p, q)} has no entry {index}")
    result.deloop(keys[index], loop)
    return result


def reduce_column(pdc: PerturbedDoubleComplex, column: int) -> ReductionReport:
    """Run the reduction inside one vertical complex, in place.

    Only ``d^0`` isomorphisms of that column are cancelled; objects of other
    columns are never touched.
    """
    report = ReductionReport()
    stack = [key for key in reversed(pdc.column(column)) if pdc.objects[key].smoothing.loop_count]
    while stack:
        key = stack.pop()
        if key not in pdc or not pdc.objects[key].smoothing.loop_count:
            continue
        plus, minus = pdc.deloop(key, 0)
        report.deloop_count += 1
        stack.extend((minus, plus))
    changed = True
    while changed:
        changed = False
        for key in pdc.column(column):
            if key not in pdc:
                continue
            for target in sorted(pdc.outgoing[key]):
                if target[1] == column and pdc.invertible_unit(key, target) is not None:
                    pdc.eliminate(key, target)
                    report.elimination_count += 1
                    changed = True
                    break
            if changed:
                break
    logger.debug(
        "Column %d: %d deloops, %d eliminations",
        column,
        report.deloop_count,
        report.elimination_count,
    )
    return report


__all__ = [
    "Node",
    "PerturbedDoubleComplex",
    "complex_as_pdc",
    "relation_failures",
    "relations_hold",
    "validate_pdc",
    "total_complex",
    "vertical_gauss_eliminate",
    "deloop_in_pdc",
    "reduce_column",
]
