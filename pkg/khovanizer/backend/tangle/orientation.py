"""Strand orientations and crossing signs.

Strands are followed straight through crossings (slot ``s`` to ``s + 2``).
Every under-pass runs from slot ``a`` to slot ``c``, which fixes the
direction of any strand passing under somewhere. A strand that is never
under is oriented from its smaller open end; a closed one enters the
crossing listed first for its smallest label.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .diagram import End, TangleDiagram
from .exceptions import BadIncidence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Strand:
    """Ends visited in order, each the point where the strand enters a crossing."""

    entries: Tuple[End, ...]
    closed: bool


@dataclass(frozen=True)
class CrossingSigns:
    signs: Tuple[int, ...]
    strands: Tuple[Strand, ...]

    @property
    def positive(self) -> int:
        return sum(1 for sign in self.signs if sign > 0)

    @property
    def negative(self) -> int:
        return sum(1 for sign in self.signs if sign < 0)

    @property
    def writhe(self) -> int:
        return sum(self.signs)


def walk_strand(diagram: TangleDiagram, start: End) -> Tuple[List[End], bool]:
    """Enter a crossing at ``start`` and follow the strand until it ends or returns."""
    entries: List[End] = []
    current: Optional[End] = start
    while current is not None:
        if entries and current == start:
            return entries, True
        entries.append(current)
        crossing, slot = current
        leave = (crossing, (slot + 2) % 4)
        label = diagram.crossings[crossing][leave[1]]
        current = diagram.other_end(label, leave)
    return entries, False


def _against_pinned_sign(diagram: TangleDiagram, entry: End) -> bool:
    if diagram.signs is None:
        return False
    crossing, slot = entry
    return slot != (3 if diagram.signs[crossing] > 0 else 1)


def _reverse(entries: List[End]) -> List[End]:
    """The same strand walked backwards."""
    return [(crossing, (slot + 2) % 4) for crossing, slot in reversed(entries)]


def trace_strands(diagram: TangleDiagram) -> List[Strand]:
    """All strands, each oriented consistently with its under-passes.

    A strand that is never under follows the pinned signs when the diagram
    carries them.
    """
    visited = set()
    starts: List[End] = [diagram.edge_ends[label][0] for label in sorted(diagram.open_edges)]
    for label in diagram.labels:
        starts.append(diagram.edge_ends[label][0])
    strands: List[Strand] = []
    for start in starts:
        if start in visited:
            continue
        entries, closed = walk_strand(diagram, start)
        forward = any(slot == 0 for _, slot in entries)
        backward = any(slot == 2 for _, slot in entries)
        if forward and backward:
            crossing = next(c for c, slot in entries if slot == 2)
            raise BadIncidence(
                f"Strand through crossing {crossing} passes under in both directions",
                diagram.crossings[crossing][2],
            )
        if backward or (not forward and _against_pinned_sign(diagram, entries[0])):
            entries = _reverse(entries)
        for crossing, slot in entries:
            visited.add((crossing, slot))
            visited.add((crossing, (slot + 2) % 4))
        strands.append(Strand(tuple(entries), closed))
    return strands


def crossing_signs(diagram: TangleDiagram) -> CrossingSigns:
    """Sign of every crossing: positive when the over-strand runs ``d -> b``."""
    strands = trace_strands(diagram)
    signs: Dict[int, int] = {}
    for strand in strands:
        for crossing, slot in strand.entries:
            if slot == 3:
                signs[crossing] = 1
            elif slot == 1:
                signs[crossing] = -1
    missing = [i for i in range(diagram.crossing_count) if i not in signs]
    if missing:
        raise BadIncidence(f"Crossing {missing[0]} has no over-strand", diagram.crossings[missing[0]][1])
    found = tuple(signs[i] for i in range(diagram.crossing_count))
    if diagram.signs is not None and found != tuple(diagram.signs):
        crossing = next(i for i, (a, b) in enumerate(zip(found, diagram.signs)) if a != b)
        raise BadIncidence(
            f"Crossing {crossing} cannot have sign {diagram.signs[crossing]} with these strands",
            diagram.crossings[crossing][1],
        )
    result = CrossingSigns(found, tuple(strands))
    logger.debug("Crossing signs: n+ = %d, n- = %d", result.positive, result.negative)
    return result


__all__ = ["Strand", "CrossingSigns", "walk_strand", "trace_strands", "crossing_signs"]
