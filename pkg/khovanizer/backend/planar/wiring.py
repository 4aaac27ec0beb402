"""Compiled planar diagrams.

A ``Wiring`` records, for every output boundary point, the input point it
comes from, and every arc of the diagram that joins two input points. It is
the form in which words act on smoothings, cobordisms and complexes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from ..cobordism import OrientedSmoothing, build_smoothing
from .exceptions import ArityMismatch, OrientationMismatch
from .operators import (
    Binary,
    OperatorWord,
    Unary,
    curl_survivors,
    join_survivors,
    operator_rotation_number,
)

Ref = Tuple[int, int]


@dataclass(frozen=True)
class Connection:
    """An arc of the diagram joining input point ``a`` to input point ``b``.

    ``sign`` is the curl sign for unary steps and ``0`` for joins.
    """

    a: Ref
    b: Ref
    step: int
    sign: int


@dataclass(frozen=True)
class Wiring:
    input_arities: Tuple[int, ...]
    outputs: Tuple[Ref, ...]
    connections: Tuple[Connection, ...] = ()
    rotation: int = 0

    @property
    def output_arity(self) -> int:
        return len(self.outputs)

    def signature(self) -> Tuple:
        """Equal for words that describe the same planar diagram."""
        arcs = sorted((min(c.a, c.b), max(c.a, c.b), c.sign) for c in self.connections)
        return self.input_arities, self.outputs, tuple(arcs)


@lru_cache(maxsize=4096)
def compile_word(word: OperatorWord) -> Wiring:
    slots: Dict[int, List[Ref]] = {
        slot: [(slot, point) for point in range(arity)]
        for slot, arity in enumerate(word.input_arities)
    }
    connections: List[Connection] = []
    for index, step in enumerate(word.steps):
        if isinstance(step, Unary):
            refs = slots[step.slot]
            n = len(refs)
            connections.append(
                Connection(refs[step.position], refs[(step.position + 1) % n], index, step.sign)
            )
            slots[step.slot] = curl_survivors(refs, step.position)
        else:
            assert isinstance(step, Binary)
            first, second = slots[step.first], slots.pop(step.second)
            connections.append(
                Connection(first[step.first_point], second[step.second_point], index, 0)
            )
            slots[step.first] = join_survivors(first, step.first_point, second, step.second_point)
    (outputs,) = slots.values()
    return Wiring(word.input_arities, tuple(outputs), tuple(connections), operator_rotation_number(word))


def rotation_wiring(arity: int, offset: int) -> Wiring:
    """Re-index the boundary so that old point ``offset`` becomes point ``0``."""
    if arity == 0:
        return Wiring((0,), ())
    return Wiring((arity,), tuple((0, (offset + p) % arity) for p in range(arity)))


def as_wiring(diagram: "OperatorWord | Wiring") -> Wiring:
    return diagram if isinstance(diagram, Wiring) else compile_word(diagram)


@dataclass(frozen=True)
class Trace:
    """The composed smoothing and, per output curve, the input curves it contains."""

    smoothing: OrientedSmoothing
    provenance: Tuple[Tuple[Ref, ...], ...]


def _check_inputs(wiring: Wiring, smoothings: Sequence[OrientedSmoothing]) -> bool:
    if len(smoothings) != len(wiring.input_arities):
        raise ArityMismatch(
            f"Diagram takes {len(wiring.input_arities)} inputs, got {len(smoothings)}"
        )
    for index, (smoothing, arity) in enumerate(zip(smoothings, wiring.input_arities)):
        if smoothing.boundary_count != arity:
            raise ArityMismatch(
                f"Input {index} has {smoothing.boundary_count} boundary points, expected {arity}"
            )
    orientations = {s.oriented for s in smoothings}
    if len(orientations) > 1:
        raise OrientationMismatch("Cannot mix oriented and unoriented smoothings")
    oriented = orientations.pop() if orientations else True
    if oriented:
        for connection in wiring.connections:
            (i, x), (j, y) = connection.a, connection.b
            head_a = smoothings[i].heads[x]
            if head_a == smoothings[j].heads[y]:
                raise OrientationMismatch(
                    f"Step {connection.step} joins two {'heads' if head_a else 'tails'}"
                )
            if connection.sign != 0 and (connection.sign > 0) != head_a:
                raise OrientationMismatch(f"Curl at step {connection.step} has the wrong sign")
    return oriented


@lru_cache(maxsize=65536)
def trace(wiring: Wiring, smoothings: Tuple[OrientedSmoothing, ...]) -> Trace:
    oriented = _check_inputs(wiring, smoothings)
    output_of: Dict[Ref, int] = {ref: p for p, ref in enumerate(wiring.outputs)}
    joined: Dict[Ref, Tuple[Ref, int]] = {}
    for index, connection in enumerate(wiring.connections):
        joined[connection.a] = (connection.b, index)
        joined[connection.b] = (connection.a, index)
    visited = set()
    arcs: List[Tuple[Tuple[int, int], Tuple[Ref, ...]]] = []
    for start, ref in enumerate(wiring.outputs):
        if (ref[0], smoothings[ref[0]].arc_of_point[ref[1]]) in visited:
            continue
        curves: List[Ref] = []
        current = ref
        while True:
            i, x = current
            curve = (i, smoothings[i].arc_of_point[x])
            visited.add(curve)
            curves.append(curve)
            other = (i, smoothings[i].partner[x])
            if other in output_of:
                end = output_of[other]
                break
            current = joined[other][0]
        starts_at_tail = not smoothings[ref[0]].heads[ref[1]] if oriented else True
        arc = (start, end) if starts_at_tail else (end, start)
        arcs.append((arc, tuple(curves)))
    cycles: List[Tuple[int, Tuple[Ref, ...]]] = []
    for i, smoothing in enumerate(smoothings):
        for arc_index, (tail, _head) in enumerate(smoothing.arcs):
            if (i, arc_index) in visited:
                continue
            curves = []
            last_step = -1
            sign = 0
            current = (i, tail)
            while True:
                j, x = current
                curve = (j, smoothings[j].arc_of_point[x])
                if curve in visited:
                    break
                visited.add(curve)
                curves.append(curve)
                other = (j, smoothings[j].partner[x])
                current, connection_index = joined[other]
                connection = wiring.connections[connection_index]
                if connection.step > last_step:
                    last_step = connection.step
                    sign = connection.sign
            cycles.append((sign if oriented else 0, tuple(curves)))
    for i, smoothing in enumerate(smoothings):
        for loop_index, sign in enumerate(smoothing.loops):
            cycles.append((sign, ((i, smoothing.loop_curve(loop_index)),)))

    boundary = wiring.output_arity
    normal = build_smoothing(boundary, [arc for arc, _ in arcs], [], oriented)
    order = sorted(range(len(arcs)), key=lambda n: min(arcs[n][0]))
    provenance: List[Tuple[Ref, ...]] = [arcs[n][1] for n in order]
    loop_order = sorted(range(len(cycles)), key=lambda n: cycles[n][0])
    provenance.extend(cycles[n][1] for n in loop_order)
    result = OrientedSmoothing(
        boundary,
        normal.arcs,
        tuple(cycles[n][0] if oriented else 0 for n in loop_order),
        oriented,
    )
    return Trace(result, tuple(provenance))


__all__ = [
    "Ref",
    "Connection",
    "Wiring",
    "compile_word",
    "rotation_wiring",
    "as_wiring",
    "Trace",
    "trace",
]
