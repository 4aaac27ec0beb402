"""Circles of the smoothings in the cube of a closed diagram."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .diagram import TangleDiagram
from .exceptions import NotClosed


@dataclass(frozen=True)
class State:
    """Vertex ``bits`` of the cube; ``circle_of[label]`` indexes ``circles``.

    Free loops of the diagram come after the circles through crossings.
    """

    bits: int
    circle_of: Dict[int, int]
    circle_count: int

    @property
    def height(self) -> int:
        return bin(self.bits).count("1")


def smoothing_pairs(crossing: Tuple[int, int, int, int], bit: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    a, b, c, d = crossing
    if bit:
        return (a, d), (b, c)
    return (a, b), (c, d)


def _find(parent: Dict[int, int], item: int) -> int:
    while parent[item] != item:
        parent[item] = parent[parent[item]]
        item = parent[item]
    return item


def resolve_state(diagram: TangleDiagram, bits: int) -> State:
    if diagram.open_edges:
        raise NotClosed("The cube of smoothings needs a diagram without open edges")
    parent = {label: label for label in diagram.labels}
    for index, crossing in enumerate(diagram.crossings):
        for x, y in smoothing_pairs(crossing, (bits >> index) & 1):
            rx, ry = _find(parent, x), _find(parent, y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    roots = sorted({_find(parent, label) for label in parent})
    index_of = {root: n for n, root in enumerate(roots)}
    circle_of = {label: index_of[_find(parent, label)] for label in parent}
    return State(bits, circle_of, len(roots) + diagram.loops)


def all_states(diagram: TangleDiagram) -> List[State]:
    return [resolve_state(diagram, bits) for bits in range(1 << diagram.crossing_count)]


__all__ = ["State", "smoothing_pairs", "resolve_state", "all_states"]
