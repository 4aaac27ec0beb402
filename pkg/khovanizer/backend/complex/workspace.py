"""Mutable sparse view of a complex used while reducing it.

Objects are addressed by tuple keys that stay stable while other objects
are removed or delooped. A delooped object ``key`` is replaced by
``key + (0,)`` (shift ``+1``) and ``key + (1,)`` (shift ``-1``).
"""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from ..cobordism import (
    INTEGERS,
    CobLin,
    GradedSmoothing,
    GroundRing,
    MatMorphism,
    MatObject,
    NotInvertible,
    Scalar,
    cap_top_loop,
    compose_cob,
    cup_bottom_loop,
)
from .chain_complex import ChainComplex
from .exceptions import NoSuchLoop

Key = Tuple[int, ...]


class ComplexWorkspace:
    def __init__(self, ring: GroundRing = INTEGERS) -> None:
        self.ring = ring
        self.objects: Dict[Key, GradedSmoothing] = {}
        self.degree_of: Dict[Key, int] = {}
        self.outgoing: Dict[Key, Dict[Key, CobLin]] = {}
        self.incoming: Dict[Key, Dict[Key, CobLin]] = {}

    @classmethod
    def from_complex(cls, complex_: ChainComplex) -> "ComplexWorkspace":
        """Keys are ``(r, index)`` in the order of the complex."""
        workspace = cls(complex_.ring)
        for r, index, graded in complex_.entries():
            workspace.add_object((r, index), r, graded)
        for offset, matrix in enumerate(complex_.differentials):
            r = complex_.min_degree + offset
            for row, column, value in matrix.cells:
                workspace.set_cell((r, column), (r + 1, row), value)
        return workspace

    def copy(self) -> "ComplexWorkspace":
        duplicate = self.__class__.__new__(self.__class__)
        duplicate.__dict__.update(self.__dict__)
        duplicate.objects = dict(self.objects)
        duplicate.degree_of = dict(self.degree_of)
        duplicate.outgoing = {key: dict(cells) for key, cells in self.outgoing.items()}
        duplicate.incoming = {key: dict(cells) for key, cells in self.incoming.items()}
        return duplicate

    def __len__(self) -> int:
        return len(self.objects)

    def __contains__(self, key: object) -> bool:
        return key in self.objects

    def keys(self) -> List[Key]:
        return sorted(self.objects, key=lambda key: (self.degree_of[key], key))

    def add_object(self, key: Key, degree: int, graded: GradedSmoothing) -> None:
        if key in self.objects:
            raise KeyError(f"Object {key} already present")
        self.objects[key] = graded
        self.degree_of[key] = degree
        self.outgoing[key] = {}
        self.incoming[key] = {}

    def remove_object(self, key: Key) -> None:
        for target in list(self.outgoing[key]):
            del self.incoming[target][key]
        for source in list(self.incoming[key]):
            del self.outgoing[source][key]
        del self.objects[key]
        del self.degree_of[key]
        del self.outgoing[key]
        del self.incoming[key]

    def cell(self, source: Key, target: Key) -> Optional[CobLin]:
        return self.outgoing[source].get(target)

    def set_cell(self, source: Key, target: Key, value: CobLin) -> None:
        if self.degree_of[target] != self.degree_of[source] + 1:
            raise ValueError(f"Cell {source} -> {target} does not raise the degree by one")
        if value.is_zero():
            self.outgoing[source].pop(target, None)
            self.incoming[target].pop(source, None)
            return
        self.outgoing[source][target] = value
        self.incoming[target][source] = value

    def add_to_cell(self, source: Key, target: Key, value: CobLin) -> None:
        current = self.cell(source, target)
        self.set_cell(source, target, value if current is None else current + value)

    def cells(self) -> Iterator[Tuple[Key, Key, CobLin]]:
        for source in self.keys():
            for target in sorted(self.outgoing[source]):
                yield source, target, self.outgoing[source][target]

    def loop_keys(self) -> List[Key]:
        return [key for key in self.keys() if self.objects[key].smoothing.loop_count]

    def loop_count(self) -> int:
        return sum(graded.smoothing.loop_count for graded in self.objects.values())

    def deloop(self, key: Key, loop_index: int = 0) -> Tuple[Key, Key]:
        """Split off one loop of ``key``; returns the keys of the ``+1`` and ``-1`` copies."""
        if key not in self.objects:
            raise NoSuchLoop(f"No object {key}")
        graded = self.objects[key]
        smoothing = graded.smoothing
        if not 0 <= loop_index < smoothing.loop_count:
            raise NoSuchLoop(f"Object {key} ({graded}) has no loop {loop_index}")
        r = self.degree_of[key]
        reduced = smoothing.without_loop(loop_index)
        plus, minus = key + (0,), key + (1,)
        incoming = list(self.incoming[key].items())
        outgoing = list(self.outgoing[key].items())
        self.remove_object(key)
        self.add_object(plus, r, GradedSmoothing(reduced, graded.q_shift + 1))
        self.add_object(minus, r, GradedSmoothing(reduced, graded.q_shift - 1))
        for source, value in incoming:
            self.set_cell(source, plus, cap_top_loop(value, loop_index, dotted=True))
            self.set_cell(source, minus, cap_top_loop(value, loop_index, dotted=False))
        for target, value in outgoing:
            self.set_cell(plus, target, cup_bottom_loop(value, loop_index, dotted=False))
            self.set_cell(minus, target, cup_bottom_loop(value, loop_index, dotted=True))
        return plus, minus

    def invertible_unit(self, source: Key, target: Key) -> Optional[Scalar]:
        value = self.outgoing.get(source, {}).get(target)
        if value is None or self.objects[source] != self.objects[target]:
            return None
        unit = value.invertible_unit()
        if unit is None or not self.ring.is_unit(unit):
            return None
        return unit

    def eliminate(self, source: Key, target: Key) -> List[Tuple[Key, Key]]:
        """Cancel the isomorphism ``source -> target``.

        Every other cell ``x -> y`` becomes ``ε - γ φ⁻¹ δ``; returns the
        cells that were touched.
        """
        unit = self.invertible_unit(source, target)
        if unit is None:
            raise NotInvertible(f"Cell {source} -> {target} is not an isomorphism")
        inverse = self.ring.inverse(unit)
        deltas = [(x, v) for x, v in self.incoming[target].items() if x != source]
        gammas = [(y, v) for y, v in self.outgoing[source].items() if y != target]
        touched: List[Tuple[Key, Key]] = []
        for x, delta in deltas:
            for y, gamma in gammas:
                correction = compose_cob(delta, gamma)
                if correction.is_zero():
                    continue
                self.add_to_cell(x, y, correction.scale(-inverse))
                touched.append((x, y))
        self.remove_object(source)
        self.remove_object(target)
        return touched

    def to_complex(self) -> ChainComplex:
        if not self.objects:
            return ChainComplex.empty(self.ring)
        low = min(self.degree_of.values())
        high = max(self.degree_of.values())
        by_degree: Dict[int, List[Key]] = {r: [] for r in range(low, high + 1)}
        for key in self.keys():
            by_degree[self.degree_of[key]].append(key)
        position = {key: i for keys in by_degree.values() for i, key in enumerate(keys)}
        objects = [
            MatObject(tuple(self.objects[key] for key in by_degree[r]))
            for r in range(low, high + 1)
        ]
        differentials = []
        for offset in range(high - low):
            r = low + offset
            cells = [
                (position[target], position[source], value)
                for source in by_degree[r]
                for target, value in self.outgoing[source].items()
            ]
            differentials.append(MatMorphism.build(objects[offset], objects[offset + 1], cells))
        return ChainComplex(low, tuple(objects), tuple(differentials), self.ring)


def workspace_from_entries(
    entries: Iterable[Tuple[Key, int, GradedSmoothing]],
    cells: Iterable[Tuple[Key, Key, CobLin]],
    ring: GroundRing = INTEGERS,
) -> ComplexWorkspace:
    workspace = ComplexWorkspace(ring)
    for key, r, graded in entries:
        workspace.add_object(key, r, graded)
    for source, target, value in cells:
        workspace.add_to_cell(source, target, value)
    return workspace


__all__ = ["Key", "ComplexWorkspace", "workspace_from_entries"]
