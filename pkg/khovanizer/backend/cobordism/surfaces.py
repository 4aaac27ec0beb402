"""Local relations on dotted surfaces.

Components are normalised with the relations

* sphere = 0, dotted sphere = 1,
* a component carrying two dots = 0,
* neck cutting, which turns every handle into two dots' worth of a dot
  (a handle equals ``2 *`` dot on the same component).

``normalise_component`` and ``evaluate_closed`` give the closed forms used by
composition. ``reduce_surface`` applies the same relations one at a time in a
caller-chosen (possibly random) order; composition must agree with it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple


@dataclass(frozen=True, order=True)
class Component:
    """A connected genus-0 piece of a reduced cobordism.

    ``bottom`` and ``top`` are sorted curve indices of the source and target
    smoothings touched by the piece.
    """

    bottom: Tuple[int, ...]
    top: Tuple[int, ...]
    dotted: bool = False

    @property
    def is_closed(self) -> bool:
        return not self.bottom and not self.top


@dataclass
class RawComponent:
    """A component before normalisation: any genus, any number of dots."""

    bottom: Tuple[int, ...]
    top: Tuple[int, ...]
    genus: int = 0
    dots: int = 0

    @property
    def is_closed(self) -> bool:
        return not self.bottom and not self.top


def evaluate_closed(genus: int, dots: int) -> int:
    """Value of a closed connected surface: ``2**g`` when ``g + dots == 1``."""
    if genus < 0 or dots < 0:
        raise ValueError("genus and dots must be nonnegative")
    return 2 ** genus if genus + dots == 1 else 0


def normalise_component(genus: int, dots: int) -> Optional[Tuple[int, bool]]:
    """Coefficient and dot flag of an open component, ``None`` when it vanishes."""
    total = genus + dots
    if total >= 2:
        return None
    return 2 ** genus, total == 1


def neck_cut(component: RawComponent) -> Tuple[int, RawComponent]:
    """Trade one handle for a dot; the coefficient is 2."""
    if component.genus < 1:
        raise ValueError("no handle to cut")
    return 2, RawComponent(component.bottom, component.top, component.genus - 1, component.dots + 1)


_NECK_CUT = "neck_cut"
_TWO_DOTS = "two_dots"
_CLOSED = "closed"


def _applicable(component: RawComponent) -> List[str]:
    moves: List[str] = []
    if component.genus > 0:
        moves.append(_NECK_CUT)
    if component.dots >= 2:
        moves.append(_TWO_DOTS)
    if component.is_closed and component.genus == 0:
        moves.append(_CLOSED)
    return moves


def reduce_surface(
    components: Sequence[RawComponent],
    rng: Optional[random.Random] = None,
) -> Optional[Tuple[int, Tuple[Component, ...]]]:
    """Apply the local relations one move at a time.

    Without ``rng`` the first applicable move is taken; with it the move and
    the component are drawn at random. Returns the coefficient and the
    normalised components, or ``None`` when the surface evaluates to zero.
    """
    work = [RawComponent(c.bottom, c.top, c.genus, c.dots) for c in components]
    coefficient = 1
    while True:
        options = [
            (index, move)
            for index, component in enumerate(work)
            for move in _applicable(component)
        ]
        if not options:
            break
        index, move = rng.choice(options) if rng is not None else options[0]
        component = work[index]
        if move == _NECK_CUT:
            factor, work[index] = neck_cut(component)
            coefficient *= factor
        elif move == _TWO_DOTS:
            return None
        else:
            value = evaluate_closed(0, component.dots)
            if value == 0:
                return None
            coefficient *= value
            del work[index]
    normal = tuple(
        sorted(Component(c.bottom, c.top, c.dots == 1) for c in work)
    )
    return coefficient, normal


__all__ = [
    "Component",
    "RawComponent",
    "evaluate_closed",
    "neck_cut",
    "normalise_component",
    "reduce_surface",
]
