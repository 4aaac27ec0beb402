"""Khovanov homology from the full cube of smoothings.

Every vertex ``v`` of the cube is a set of circles; its chain group is the
tensor power of ``V = <1, x>`` with ``deg 1 = +1`` and ``deg x = -1``.
Edges merge or split circles through the multiplication and
comultiplication of ``V``. Nothing here uses cobordisms, so the result is an
independent check of the reduction pipeline.
"""

from __future__ import annotations

import itertools
import logging
from typing import Dict, List, Optional, Tuple

from ..cobordism import INTEGERS, GroundRing
from ..homology import HomologyGroup, HomologyTable, ScalarComplex, smith_homology
from ..services.event_service import CancellationToken
from .diagram import TangleDiagram, check_planar
from .exceptions import BadIncidence, NotClosed
from .orientation import crossing_signs
from .states import State, all_states

logger = logging.getLogger(__name__)

ONE, X = 0, 1

Generator = Tuple[int, Tuple[int, ...]]


def _degree(labels: Tuple[int, ...]) -> int:
    return sum(1 if label == ONE else -1 for label in labels)


def _multiply(a: int, b: int) -> Optional[int]:
    if a == ONE:
        return b
    if b == ONE:
        return a
    return None


def _comultiply(a: int) -> List[Tuple[int, int]]:
    if a == ONE:
        return [(ONE, X), (X, ONE)]
    return [(X, X)]


def _edge_map(
    diagram: TangleDiagram,
    source: State,
    target: State,
    crossing: int,
    labels: Tuple[int, ...],
) -> List[Tuple[int, ...]]:
    """Images of one generator along the edge that changes ``crossing``."""
    a, b, c, d = diagram.crossings[crossing]
    first, second = source.circle_of[a], source.circle_of[c]
    image: Dict[int, int] = {}
    for label, circle in source.circle_of.items():
        if circle not in (first, second):
            image[target.circle_of[label]] = labels[circle]
    fixed_loops = target.circle_count - diagram.loops
    free = {fixed_loops + n: labels[source.circle_count - diagram.loops + n] for n in range(diagram.loops)}
    results: List[Tuple[int, ...]] = []
    if first != second:
        merged = target.circle_of[a]
        value = _multiply(labels[first], labels[second])
        if value is None:
            return []
        image[merged] = value
        image.update(free)
        results.append(tuple(image[n] for n in range(target.circle_count)))
        return results
    left, right = target.circle_of[a], target.circle_of[b]
    if left == right:
        raise BadIncidence(
            f"Changing crossing {crossing} neither merges nor splits circles; the code is not planar",
            a,
        )
    for x, y in _comultiply(labels[first]):
        image[left], image[right] = x, y
        image.update(free)
        results.append(tuple(image[n] for n in range(target.circle_count)))
    return results


def cube_oracle(
    diagram: TangleDiagram,
    ring: GroundRing = INTEGERS,
    cancellation_token: Optional[CancellationToken] = None,
) -> HomologyTable:
    """Homology of the cube of smoothings with the usual edge signs."""
    if diagram.open_edges:
        raise NotClosed("The oracle only handles links")
    check_planar(diagram)
    signs = crossing_signs(diagram)
    n = diagram.crossing_count
    n_plus, n_minus = signs.positive, signs.negative
    states = all_states(diagram)
    basis: Dict[Tuple[int, int], List[Generator]] = {}
    for state in states:
        r = state.height - n_minus
        for labels in itertools.product((ONE, X), repeat=state.circle_count):
            j = _degree(labels) + state.height + n_plus - 2 * n_minus
            basis.setdefault((r, j), []).append((state.bits, labels))
    index = {key: {gen: n for n, gen in enumerate(gens)} for key, gens in basis.items()}
    complexes: Dict[int, ScalarComplex] = {}
    for (r, j), gens in basis.items():
        complex_ = complexes.setdefault(j, ScalarComplex())
        complex_.dims[r] = len(gens)
    for (r, j), gens in sorted(basis.items()):
        if cancellation_token is not None:
            cancellation_token.throw_if_cancellation_requested("cube oracle")
        targets = index.get((r + 1, j))
        if not targets:
            continue
        matrix = [[0] * len(gens) for _ in range(len(targets))]
        for column, (bits, labels) in enumerate(gens):
            for crossing in range(n):
                if bits >> crossing & 1:
                    continue
                sign = -1 if bin(bits & ((1 << crossing) - 1)).count("1") % 2 else 1
                target_bits = bits | (1 << crossing)
                for image in _edge_map(diagram, states[bits], states[target_bits], crossing, labels):
                    matrix[targets[(target_bits, image)]][column] += sign
        complexes[j].maps[r] = matrix
    groups: Dict[Tuple[int, int], HomologyGroup] = {}
    for j, complex_ in complexes.items():
        for i, (betti, torsion) in smith_homology(complex_, ring).items():
            groups[(i, j)] = HomologyGroup(betti, torsion if ring.selector == "z" else ())
    logger.debug("Cube oracle: %d vertices, %d generators", len(states), sum(len(g) for g in basis.values()))
    return HomologyTable(ring, groups)


__all__ = ["cube_oracle"]
