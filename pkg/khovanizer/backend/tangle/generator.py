"""Diagram generators for property tests and Reidemeister fixtures.

``random_alternating_tangle`` grows a disc one crossing at a time, gluing
the new crossing to a run of consecutive boundary points so that every
edge goes from an over slot to an under slot. The result is connected,
planar and alternating by construction.
"""

from __future__ import annotations

import logging
import random
from typing import List, Optional, Sequence, Set

from .diagram import TangleDiagram, make_diagram
from .orientation import walk_strand

logger = logging.getLogger(__name__)


def _orient_under_passes(crossings: List[List[int]], open_edges: Sequence[int]) -> List[List[int]]:
    """Turn crossings by half a revolution until every under-pass runs ``a -> c``."""
    draft = make_diagram(crossings, list(open_edges) or None)
    visited: Set = set()
    flipped: Set[int] = set()
    starts = [draft.edge_ends[label][0] for label in open_edges]
    starts.extend(draft.edge_ends[label][0] for label in draft.labels)
    for start in starts:
        if start in visited:
            continue
        entries, _ = walk_strand(draft, start)
        for crossing, slot in entries:
            visited.add((crossing, slot))
            visited.add((crossing, (slot + 2) % 4))
            if slot == 2:
                flipped.add(crossing)
    return [
        crossing[2:] + crossing[:2] if index in flipped else list(crossing)
        for index, crossing in enumerate(crossings)
    ]


def random_alternating_tangle(
    rng: random.Random,
    max_crossings: int = 6,
    max_boundary: int = 8,
    min_crossings: int = 1,
    close_probability: float = 0.25,
    name: Optional[str] = None,
) -> TangleDiagram:
    """A connected alternating tangle with at least two boundary points."""
    if max_boundary < 2 or max_crossings < 1:
        raise ValueError("Tangles need at least one crossing and two boundary points")
    target = rng.randint(min_crossings, max_crossings)
    crossings: List[List[int]] = [[1, 2, 3, 4]]
    boundary = [1, 2, 3, 4]
    heads = [False, True, False, True]
    next_label = 5
    while len(crossings) < target:
        n = len(boundary)
        options = [
            (shared, start)
            for shared in (1, 2, 3)
            if shared <= n and 2 <= n + 4 - 2 * shared <= max_boundary
            for start in range(n)
        ]
        if not options:
            break
        shared, start = rng.choice(options)
        labels = boundary[start:] + boundary[:start]
        statuses = heads[start:] + heads[:start]
        # a head on the disc meets an under slot of the new crossing
        first_slot = rng.choice((0, 2) if statuses[0] else (1, 3))
        slots: List[int] = [0, 0, 0, 0]
        for p in range(shared):
            slots[(first_slot - p) % 4] = labels[p]
        free = [(first_slot + 1 + p) % 4 for p in range(4 - shared)]
        for slot in free:
            slots[slot] = next_label
            next_label += 1
        crossings.append(slots)
        boundary = [slots[slot] for slot in free] + labels[shared:]
        heads = [slot % 2 == 1 for slot in free] + statuses[shared:]
    while len(boundary) > 2 and (len(boundary) > max_boundary or rng.random() < close_probability):
        n = len(boundary)
        position = rng.randrange(n)
        keep, drop = boundary[position], boundary[(position + 1) % n]
        crossings = [[keep if label == drop else label for label in c] for c in crossings]
        if position == n - 1:
            boundary, heads = boundary[1 : n - 1], heads[1 : n - 1]
        else:
            boundary = boundary[:position] + boundary[position + 2 :]
            heads = heads[:position] + heads[position + 2 :]
    crossings = _orient_under_passes(crossings, boundary)
    diagram = make_diagram(crossings, boundary, 0, name)
    logger.debug("Generated %d-crossing tangle on %d points", len(crossings), len(boundary))
    return diagram


def braid_closure(word: Sequence[int], strands: Optional[int] = None, name: Optional[str] = None) -> TangleDiagram:
    """Closure of a braid word; ``i`` is ``σ_i`` and ``-i`` its inverse.

    Strands are numbered from the left starting at ``1``, and ``σ_i``
    crosses strands ``i`` and ``i + 1`` positively.
    """
    if strands is None:
        strands = max((abs(g) for g in word), default=0) + 1
    labels = list(range(1, strands + 1))
    next_label = strands + 1
    crossings: List[List[int]] = []
    for generator in word:
        i = abs(generator)
        if generator == 0 or i >= strands:
            raise ValueError(f"Generator {generator} does not act on {strands} strands")
        x, y = labels[i - 1], labels[i]
        x_out, y_out = next_label, next_label + 1
        next_label += 2
        if generator > 0:
            crossings.append([y, y_out, x_out, x])
        else:
            crossings.append([x, y, y_out, x_out])
        labels[i - 1], labels[i] = x_out, y_out
    rename = {final: start for start, final in enumerate(labels, 1) if final != start}
    crossings = [[rename.get(label, label) for label in c] for c in crossings]
    loops = sum(1 for start, final in enumerate(labels, 1) if final == start)
    return make_diagram(crossings, None, loops, name)


__all__ = ["random_alternating_tangle", "braid_closure"]
