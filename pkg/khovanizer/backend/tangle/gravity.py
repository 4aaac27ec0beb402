"""Gravity information of alternating diagrams.

Every edge carries an arrow pointing in to the under-crossing at one end and
out of the over-crossing at the other. Such arrows exist exactly when the
diagram is alternating. Inside a crossing disc the under slots are tails of
the smoothing arcs and the over slots are heads; on the tangle boundary an
open edge leaving an over slot is a head.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .diagram import End, TangleDiagram, components
from .exceptions import NotAlternating, Split

logger = logging.getLogger(__name__)


def is_over_slot(slot: int) -> bool:
    return slot % 2 == 1


@dataclass(frozen=True)
class GravityAssignment:
    """Edge label -> ``(from, to)`` ends; ``None`` stands for the tangle boundary."""

    arrows: Dict[int, Tuple[Optional[End], Optional[End]]]
    boundary_heads: Tuple[bool, ...]

    def points_into(self, label: int) -> Optional[End]:
        return self.arrows[label][1]


def gravity_or_none(diagram: TangleDiagram) -> Optional[GravityAssignment]:
    try:
        return assign_gravity(diagram, require_connected=False)
    except NotAlternating:
        return None


def assign_gravity(diagram: TangleDiagram, require_connected: bool = True) -> GravityAssignment:
    """Orient every edge from its over end to its under end.

    Raises ``NotAlternating`` when an edge joins two under or two over
    slots, or when the boundary of a connected tangle does not alternate
    between in and out points.
    """
    if require_connected and (len(components(diagram)) > 1 or (diagram.loops and diagram.crossings)):
        raise Split("Gravity is only defined here for non-split diagrams")
    arrows: Dict[int, Tuple[Optional[End], Optional[End]]] = {}
    for label, ends in diagram.edge_ends.items():
        if len(ends) == 1:
            (end,) = ends
            arrows[label] = (end, None) if is_over_slot(end[1]) else (None, end)
            continue
        first, second = ends
        if is_over_slot(first[1]) == is_over_slot(second[1]):
            kind = "over" if is_over_slot(first[1]) else "under"
            raise NotAlternating(
                f"Edge {label} runs between two {kind}-crossings "
                f"(crossings {first[0]} and {second[0]})",
                label,
            )
        arrows[label] = (first, second) if is_over_slot(first[1]) else (second, first)
    heads = tuple(is_over_slot(diagram.edge_ends[label][0][1]) for label in diagram.open_edges)
    if diagram.boundary_ordered and heads:
        n = len(heads)
        for position in range(n):
            if heads[position] == heads[(position + 1) % n]:
                label = diagram.open_edges[position]
                raise NotAlternating(
                    f"Boundary points {label} and {diagram.open_edges[(position + 1) % n]} "
                    f"are both {'out' if heads[position] else 'in'}-points",
                    label,
                )
    logger.debug("Gravity assigned to %d edges", len(arrows))
    return GravityAssignment(arrows, heads)


def is_alternating(diagram: TangleDiagram) -> bool:
    return gravity_or_none(diagram) is not None


__all__ = [
    "GravityAssignment",
    "assign_gravity",
    "gravity_or_none",
    "is_alternating",
    "is_over_slot",
]
