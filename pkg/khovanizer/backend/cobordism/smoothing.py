"""Oriented crossingless smoothings and their rotation numbers.

A smoothing with ``2k`` boundary points is stored as a planar perfect
matching. Arcs are ordered by their smallest endpoint and the free loops are
kept as a sorted tuple of signs, so two smoothings that differ only in the
order in which loops were listed compare equal.

Curves are indexed arcs first (``0..k-1``) and loops after (``k..``); the
cobordism layer refers to curves by these indices.

The standard closure caps every head ``h`` to the point ``h + 1`` outside
the disc. With this capping every closure loop turns counterclockwise, so the
rotation number is the number of closure loops plus the signed count of
free loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

from .exceptions import CrossingMatching, NonAlternating

Arc = Tuple[int, int]


@dataclass(frozen=True)
class OrientedSmoothing:
    """Planar matching of ``boundary_count`` points plus free loops.

    ``oriented`` is ``False`` for smoothings of non-alternating diagrams;
    their arcs are stored as ``(min, max)`` pairs and their loops carry the
    sign ``0``.
    """

    boundary_count: int
    arcs: Tuple[Arc, ...]
    loops: Tuple[int, ...] = ()
    oriented: bool = True

    @cached_property
    def arc_of_point(self) -> Tuple[int, ...]:
        owner = [0] * self.boundary_count
        for index, (tail, head) in enumerate(self.arcs):
            owner[tail] = index
            owner[head] = index
        return tuple(owner)

    @cached_property
    def partner(self) -> Tuple[int, ...]:
        other = [0] * self.boundary_count
        for tail, head in self.arcs:
            other[tail] = head
            other[head] = tail
        return tuple(other)

    @cached_property
    def heads(self) -> Tuple[bool, ...]:
        """``heads[p]`` is true when point ``p`` is the head of its arc."""
        flags = [False] * self.boundary_count
        for _tail, head in self.arcs:
            flags[head] = True
        return tuple(flags)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    @property
    def loop_count(self) -> int:
        return len(self.loops)

    @property
    def curve_count(self) -> int:
        return len(self.arcs) + len(self.loops)

    @property
    def is_closed(self) -> bool:
        return self.boundary_count == 0

    def is_head(self, point: int) -> bool:
        return self.heads[point]

    def loop_curve(self, loop_index: int) -> int:
        return len(self.arcs) + loop_index

    def without_loop(self, loop_index: int) -> "OrientedSmoothing":
        loops = self.loops[:loop_index] + self.loops[loop_index + 1:]
        return OrientedSmoothing(self.boundary_count, self.arcs, loops, self.oriented)

    def __str__(self) -> str:
        if self.oriented:
            arcs = ",".join(f"{t}>{h}" for t, h in self.arcs)
            loops = "".join("+" if sign > 0 else "-" for sign in self.loops)
        else:
            arcs = ",".join(f"{a}-{b}" for a, b in self.arcs)
            loops = "o" * len(self.loops)
        return f"[{arcs}|{loops}]"


@dataclass(frozen=True)
class GradedSmoothing:
    """A smoothing with a quantum shift, written ``σ{q}``."""

    smoothing: OrientedSmoothing
    q_shift: int = 0

    def shifted(self, amount: int) -> "GradedSmoothing":
        return GradedSmoothing(self.smoothing, self.q_shift + amount)

    def __str__(self) -> str:
        return f"{self.smoothing}{{{self.q_shift}}}"


EMPTY = OrientedSmoothing(0, ())


def build_smoothing(
    boundary_count: int,
    arcs: Iterable[Arc],
    loops: Iterable[int] = (),
    oriented: bool = True,
) -> OrientedSmoothing:
    """Normalise without validating; callers guarantee a planar matching."""
    if oriented:
        ordered = tuple(sorted(arcs, key=lambda arc: min(arc)))
        signs = tuple(sorted(loops))
    else:
        ordered = tuple(sorted((min(a, b), max(a, b)) for a, b in arcs))
        signs = tuple(0 for _ in loops)
    return OrientedSmoothing(boundary_count, ordered, signs, oriented)


def _check_planar(boundary_count: int, arcs: Sequence[Arc]) -> None:
    owner: List[Optional[int]] = [None] * boundary_count
    for index, (a, b) in enumerate(arcs):
        for point in (a, b):
            if not 0 <= point < boundary_count:
                raise CrossingMatching(
                    f"Point {point} is outside 0..{boundary_count - 1}"
                )
            if owner[point] is not None:
                raise CrossingMatching(f"Point {point} is used by two arcs")
            owner[point] = index
    if any(entry is None for entry in owner):
        missing = [p for p, entry in enumerate(owner) if entry is None]
        raise CrossingMatching(f"Points {missing} are not matched")
    stack: List[int] = []
    for point in range(boundary_count):
        arc = owner[point]
        assert arc is not None
        if stack and stack[-1] == arc:
            stack.pop()
        elif arc in stack:
            a, b = arcs[arc]
            raise CrossingMatching(f"Arc {a}-{b} crosses another arc")
        else:
            stack.append(arc)


def make_smoothing(
    arcs: Iterable[Arc],
    loops: Iterable[int] = (),
    boundary_count: Optional[int] = None,
    oriented: bool = True,
) -> OrientedSmoothing:
    """Validate and build a smoothing from ``(tail, head)`` pairs."""
    arc_list = [(int(a), int(b)) for a, b in arcs]
    loop_list = [int(sign) for sign in loops]
    if boundary_count is None:
        boundary_count = 2 * len(arc_list)
    if boundary_count != 2 * len(arc_list):
        raise CrossingMatching(
            f"{len(arc_list)} arcs cannot match {boundary_count} boundary points"
        )
    _check_planar(boundary_count, arc_list)
    if oriented:
        bad = [sign for sign in loop_list if sign not in (1, -1)]
        if bad:
            raise ValueError(f"Loop orientations must be +1 or -1, got {bad}")
        smoothing = build_smoothing(boundary_count, arc_list, loop_list)
        heads = smoothing.heads
        for point in range(boundary_count):
            if heads[point] == heads[(point + 1) % boundary_count]:
                raise NonAlternating(
                    f"Points {point} and {(point + 1) % boundary_count} are both "
                    f"{'heads' if heads[point] else 'tails'}"
                )
        return smoothing
    return build_smoothing(boundary_count, arc_list, loop_list, oriented=False)


def closure_cycles(smoothing: OrientedSmoothing) -> List[List[int]]:
    """Arc indices of each loop of the standard closure."""
    if not smoothing.oriented:
        raise NonAlternating("Unoriented smoothings have no standard closure")
    n = smoothing.boundary_count
    owner = smoothing.arc_of_point
    following = [owner[(head + 1) % n] for _tail, head in smoothing.arcs]
    seen = [False] * len(smoothing.arcs)
    cycles: List[List[int]] = []
    for start in range(len(smoothing.arcs)):
        if seen[start]:
            continue
        cycle: List[int] = []
        current = start
        while not seen[current]:
            seen[current] = True
            cycle.append(current)
            current = following[current]
        cycles.append(cycle)
    return cycles


def standard_closure(smoothing: OrientedSmoothing) -> OrientedSmoothing:
    """Cap every head to the next point; the result has no boundary."""
    if smoothing.boundary_count == 0:
        return smoothing
    created = len(closure_cycles(smoothing))
    return build_smoothing(0, (), smoothing.loops + (1,) * created)


def rotation_number(smoothing: OrientedSmoothing) -> int:
    if not smoothing.oriented:
        raise NonAlternating("Rotation numbers need an oriented smoothing")
    closure = len(closure_cycles(smoothing)) if smoothing.boundary_count else 0
    return closure + sum(smoothing.loops)


def shifted_rotation_number(graded: GradedSmoothing) -> int:
    return rotation_number(graded.smoothing) + graded.q_shift


__all__ = [
    "Arc",
    "OrientedSmoothing",
    "GradedSmoothing",
    "EMPTY",
    "build_smoothing",
    "make_smoothing",
    "closure_cycles",
    "standard_closure",
    "rotation_number",
    "shifted_rotation_number",
]
