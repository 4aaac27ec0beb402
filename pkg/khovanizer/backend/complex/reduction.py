"""Delooping and Gaussian elimination.

``dg_reduce`` removes every loop first (delooping never creates new
isomorphisms between loops, and elimination never creates loops), then
cancels unit multiples of identities until none are left.
"""

from __future__ import annotations

import heapq
import logging
import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..cobordism import NotInvertible
from .chain_complex import ChainComplex, validate
from .exceptions import NoSuchLoop
from .workspace import ComplexWorkspace, Key

logger = logging.getLogger(__name__)


@dataclass
class ReductionReport:
    deloop_count: int = 0
    elimination_count: int = 0
    complex: Optional[ChainComplex] = None

    def merge(self, other: "ReductionReport") -> None:
        self.deloop_count += other.deloop_count
        self.elimination_count += other.elimination_count


def deloop(complex_: ChainComplex, r: int, entry: int, loop: int = 0) -> ChainComplex:
    """Replace ``entry`` of degree ``r`` by two copies without ``loop``."""
    workspace = ComplexWorkspace.from_complex(complex_)
    if (r, entry) not in workspace:
        raise NoSuchLoop(f"No entry {entry} in degree {r}")
    workspace.deloop((r, entry), loop)
    return workspace.to_complex()


def find_invertible_entry(complex_: ChainComplex) -> Optional[Tuple[int, int, int]]:
    """First ``(r, row, column)`` whose cell is a unit times an identity.

    Degrees are scanned upwards, then source columns, then target rows.
    """
    ring = complex_.ring
    for offset, matrix in enumerate(complex_.differentials):
        r = complex_.min_degree + offset
        for row, column, value in sorted(matrix.cells, key=lambda cell: (cell[1], cell[0])):
            if matrix.domain[column] != matrix.codomain[row]:
                continue
            unit = value.invertible_unit()
            if unit is not None and ring.is_unit(unit):
                return r, row, column
    return None


def gaussian_eliminate(complex_: ChainComplex, r: int, row: int, column: int) -> ChainComplex:
    """Cancel cell ``(row, column)`` of ``d_r``."""
    workspace = ComplexWorkspace.from_complex(complex_)
    source, target = (r, column), (r + 1, row)
    if source not in workspace or target not in workspace:
        raise NotInvertible(f"No cell ({row}, {column}) in d_{r}")
    workspace.eliminate(source, target)
    return workspace.to_complex()


def deloop_all(
    workspace: ComplexWorkspace,
    report: ReductionReport,
    rng: Optional[random.Random] = None,
) -> None:
    if rng is not None:
        while True:
            pending = workspace.loop_keys()
            if not pending:
                return
            key = rng.choice(pending)
            loop = rng.randrange(workspace.objects[key].smoothing.loop_count)
            workspace.deloop(key, loop)
            report.deloop_count += 1
    stack = list(reversed(workspace.loop_keys()))
    while stack:
        key = stack.pop()
        if key not in workspace or not workspace.objects[key].smoothing.loop_count:
            continue
        plus, minus = workspace.deloop(key, 0)
        report.deloop_count += 1
        if workspace.objects[plus].smoothing.loop_count:
            stack.append(minus)
            stack.append(plus)


def _candidates(workspace: ComplexWorkspace) -> List[Tuple[int, Key, Key]]:
    found = []
    for source, target, _ in workspace.cells():
        if workspace.invertible_unit(source, target) is not None:
            found.append((workspace.degree_of[source], source, target))
    return found


def eliminate_all(
    workspace: ComplexWorkspace,
    report: ReductionReport,
    rng: Optional[random.Random] = None,
) -> None:
    if rng is not None:
        while True:
            options = _candidates(workspace)
            if not options:
                return
            _, source, target = rng.choice(options)
            workspace.eliminate(source, target)
            report.elimination_count += 1
    heap = _candidates(workspace)
    heapq.heapify(heap)
    while heap:
        _, source, target = heapq.heappop(heap)
        if source not in workspace or target not in workspace:
            continue
        if workspace.invertible_unit(source, target) is None:
            continue
        touched = workspace.eliminate(source, target)
        report.elimination_count += 1
        for x, y in touched:
            if x in workspace and y in workspace and workspace.invertible_unit(x, y) is not None:
                heapq.heappush(heap, (workspace.degree_of[x], x, y))


def reduce_workspace(
    workspace: ComplexWorkspace,
    rng: Optional[random.Random] = None,
) -> ReductionReport:
    report = ReductionReport()
    deloop_all(workspace, report, rng)
    eliminate_all(workspace, report, rng)
    return report


def dg_reduce(
    complex_: ChainComplex,
    rng: Optional[random.Random] = None,
    validate_steps: bool = False,
) -> Tuple[ChainComplex, ReductionReport]:
    """Deloop and eliminate until the complex is reduced.

    With ``rng`` the loop and the isomorphism handled next are drawn at
    random instead of taken in scan order.
    """
    if validate_steps:
        validate(complex_)
    workspace = ComplexWorkspace.from_complex(complex_)
    before = len(workspace)
    report = reduce_workspace(workspace, rng)
    reduced = workspace.to_complex()
    if validate_steps:
        validate(reduced)
    report.complex = reduced
    logger.debug(
        "Reduced %d objects to %d (%d deloops, %d eliminations)",
        before,
        reduced.size,
        report.deloop_count,
        report.elimination_count,
    )
    return reduced, report


def is_reduced(complex_: ChainComplex) -> bool:
    return complex_.loop_count() == 0 and find_invertible_entry(complex_) is None


__all__ = [
    "ReductionReport",
    "deloop",
    "find_invertible_entry",
    "gaussian_eliminate",
    "deloop_all",
    "eliminate_all",
    "reduce_workspace",
    "dg_reduce",
    "is_reduced",
]
