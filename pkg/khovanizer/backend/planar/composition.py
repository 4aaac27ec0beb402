"""Planar composition of smoothings, cobordisms and complexes.

The cobordism ``D(f_1, ..., f_d)`` is the union of the input surfaces
and one strip per arc of ``D``. Each strip is glued along two vertical
segments and lowers the Euler characteristic by one; the handles it may
create are removed by neck cutting.
"""

from __future__ import annotations

import itertools
import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..cobordism import (
    CobLin,
    Component,
    GradedSmoothing,
    OrientedSmoothing,
    ReducedCobordism,
    circle_count,
    evaluate_closed,
    identity_cobordism,
    normalise_component,
)
from ..cobordism.ring import Scalar
from ..complex import (
    ChainComplex,
    ComplexWorkspace,
    PerturbedDoubleComplex,
    dg_reduce,
)
from .exceptions import ArityMismatch
from .operators import OperatorWord, closure_word
from .wiring import Wiring, as_wiring, trace

logger = logging.getLogger(__name__)

Diagram = Union[OperatorWord, Wiring]


def apply_to_smoothings(
    diagram: Diagram, smoothings: Sequence[OrientedSmoothing]
) -> OrientedSmoothing:
    return trace(as_wiring(diagram), tuple(smoothings)).smoothing


class _UnionFind:
    def __init__(self, size: int) -> None:
        self.parent = list(range(size))

    def find(self, item: int) -> int:
        while self.parent[item] != item:
            self.parent[item] = self.parent[self.parent[item]]
            item = self.parent[item]
        return item

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@lru_cache(maxsize=65536)
def planar_cobordism(
    wiring: Wiring, cobordisms: Tuple[ReducedCobordism, ...]
) -> Optional[Tuple[int, ReducedCobordism]]:
    """Apply ``wiring`` to one cobordism per input."""
    bottom = trace(wiring, tuple(c.bottom for c in cobordisms))
    top = trace(wiring, tuple(c.top for c in cobordisms))
    offsets = list(itertools.accumulate([0] + [len(c.components) for c in cobordisms]))
    union = _UnionFind(offsets[-1])
    below_owner: List[Dict[int, int]] = []
    above_owner: List[Dict[int, int]] = []
    euler: Dict[int, int] = {}
    dots: Dict[int, int] = {}
    for i, cobordism in enumerate(cobordisms):
        below: Dict[int, int] = {}
        above: Dict[int, int] = {}
        for index, component in enumerate(cobordism.components):
            node = offsets[i] + index
            for curve in component.bottom:
                below[curve] = node
            for curve in component.top:
                above[curve] = node
            euler[node] = 2 - circle_count(
                cobordism.bottom, cobordism.top, component.bottom, component.top
            )
            dots[node] = int(component.dotted)
        below_owner.append(below)
        above_owner.append(above)
    for connection in wiring.connections:
        (i, x), (j, y) = connection.a, connection.b
        first = below_owner[i][cobordisms[i].bottom.arc_of_point[x]]
        second = below_owner[j][cobordisms[j].bottom.arc_of_point[y]]
        union.union(first, second)
    merged_euler: Dict[int, int] = {}
    merged_dots: Dict[int, int] = {}
    for node, value in euler.items():
        root = union.find(node)
        merged_euler[root] = merged_euler.get(root, 0) + value
        merged_dots[root] = merged_dots.get(root, 0) + dots[node]
    for connection in wiring.connections:
        i, x = connection.a
        root = union.find(below_owner[i][cobordisms[i].bottom.arc_of_point[x]])
        merged_euler[root] -= 1
    bottoms: Dict[int, List[int]] = {}
    tops: Dict[int, List[int]] = {}
    for curve, refs in enumerate(bottom.provenance):
        i, inner = refs[0]
        bottoms.setdefault(union.find(below_owner[i][inner]), []).append(curve)
    for curve, refs in enumerate(top.provenance):
        i, inner = refs[0]
        tops.setdefault(union.find(above_owner[i][inner]), []).append(curve)

    coefficient = 1
    components: List[Component] = []
    for root in sorted(merged_euler):
        below_curves = tuple(sorted(bottoms.get(root, ())))
        above_curves = tuple(sorted(tops.get(root, ())))
        b = circle_count(bottom.smoothing, top.smoothing, below_curves, above_curves)
        twice_genus = 2 - b - merged_euler[root]
        assert twice_genus >= 0 and twice_genus % 2 == 0, "non-orientable planar gluing"
        genus = twice_genus // 2
        if not below_curves and not above_curves:
            value = evaluate_closed(genus, merged_dots[root])
            if value == 0:
                return None
            coefficient *= value
            continue
        normal = normalise_component(genus, merged_dots[root])
        if normal is None:
            return None
        factor, dotted = normal
        coefficient *= factor
        components.append(Component(below_curves, above_curves, dotted))
    return coefficient, ReducedCobordism(bottom.smoothing, top.smoothing, tuple(sorted(components)))


def planar_coblin(diagram: Diagram, morphisms: Sequence[CobLin]) -> CobLin:
    """Multilinear extension of ``planar_cobordism``."""
    wiring = as_wiring(diagram)
    source = apply_to_smoothings(wiring, [m.bottom for m in morphisms])
    target = apply_to_smoothings(wiring, [m.top for m in morphisms])
    terms: List[Tuple[ReducedCobordism, Scalar]] = []
    for choice in itertools.product(*(m.terms for m in morphisms)):
        coefficient: Scalar = 1
        for _, value in choice:
            coefficient *= value
        glued = planar_cobordism(wiring, tuple(cob for cob, _ in choice))
        if glued is not None:
            factor, cobordism = glued
            terms.append((cobordism, coefficient * factor))
    return CobLin.from_terms(source, target, terms)


def _check_arities(wiring: Wiring, inputs: Sequence[ChainComplex]) -> None:
    if len(inputs) != len(wiring.input_arities):
        raise ArityMismatch(f"Diagram takes {len(wiring.input_arities)} complexes, got {len(inputs)}")
    for index, (complex_, arity) in enumerate(zip(inputs, wiring.input_arities)):
        count = complex_.boundary_count
        if count is not None and count != arity:
            raise ArityMismatch(f"Complex {index} lives on {count} points, expected {arity}")


def compose_into_workspace(diagram: Diagram, inputs: Sequence[ChainComplex]) -> ComplexWorkspace:
    """``Ω^r = ⊕_{r = Σ r_i} D(Ω_1^{r_1}, ..., Ω_d^{r_d})`` with the sign
    ``(-1)^{Σ_{j<i} r_j}`` on the differential of the ``i``-th input.

    Object keys are ``(r_1, i_1, r_2, i_2, ...)``.
    """
    wiring = as_wiring(diagram)
    _check_arities(wiring, inputs)
    ring = inputs[0].ring if inputs else ChainComplex.empty().ring
    workspace = ComplexWorkspace(ring)
    entries = [list(c.entries()) for c in inputs]
    for combination in itertools.product(*entries):
        key = tuple(itertools.chain.from_iterable((r, i) for r, i, _ in combination))
        smoothing = apply_to_smoothings(wiring, [g.smoothing for _, _, g in combination])
        workspace.add_object(
            key,
            sum(r for r, _, _ in combination),
            GradedSmoothing(smoothing, sum(g.q_shift for _, _, g in combination)),
        )
    for position, complex_ in enumerate(inputs):
        others = entries[:position] + [[None]] + entries[position + 1 :]
        for offset, matrix in enumerate(complex_.differentials):
            r = complex_.min_degree + offset
            for row, column, value in matrix.cells:
                for combination in itertools.product(*others):
                    sign = -1 if sum(c[0] for c in combination[:position]) % 2 else 1
                    morphisms = [
                        value if n == position else identity_cobordism(c[2].smoothing)
                        for n, c in enumerate(combination)
                    ]
                    source = list(combination)
                    target = list(combination)
                    source[position] = (r, column, None)
                    target[position] = (r + 1, row, None)
                    source_key = tuple(itertools.chain.from_iterable((e[0], e[1]) for e in source))
                    target_key = tuple(itertools.chain.from_iterable((e[0], e[1]) for e in target))
                    glued = planar_coblin(wiring, morphisms)
                    workspace.add_to_cell(source_key, target_key, glued.scale(sign))
    return workspace


def apply_to_complexes(diagram: Diagram, inputs: Sequence[ChainComplex]) -> ChainComplex:
    return compose_into_workspace(diagram, inputs).to_complex()


def apply_as_pdc(
    diagram: Diagram, first: ChainComplex, second: ChainComplex
) -> PerturbedDoubleComplex:
    """``Ω_{p,q} = D(Ω_1^p, Ω_2^q)``: ``d^0`` from ``first``, ``d^1`` from ``second``."""
    wiring = as_wiring(diagram)
    _check_arities(wiring, (first, second))
    pdc = PerturbedDoubleComplex(first.ring)
    keys: Dict[Tuple[int, int, int, int], Tuple[int, ...]] = {}
    for (p, i, x), (q, j, y) in itertools.product(first.entries(), second.entries()):
        smoothing = apply_to_smoothings(wiring, [x.smoothing, y.smoothing])
        keys[(p, i, q, j)] = pdc.add(p, q, GradedSmoothing(smoothing, x.q_shift + y.q_shift))
    for offset, matrix in enumerate(first.differentials):
        p = first.min_degree + offset
        for row, column, value in matrix.cells:
            for q, j, y in second.entries():
                glued = planar_coblin(wiring, [value, identity_cobordism(y.smoothing)])
                pdc.add_to_cell(keys[(p, column, q, j)], keys[(p + 1, row, q, j)], glued)
    for offset, matrix in enumerate(second.differentials):
        q = second.min_degree + offset
        for row, column, value in matrix.cells:
            for p, i, x in first.entries():
                sign = -1 if p % 2 else 1
                glued = planar_coblin(wiring, [identity_cobordism(x.smoothing), value])
                pdc.add_to_cell(keys[(p, i, q, column)], keys[(p, i, q + 1, row)], glued.scale(sign))
    return pdc


def head_pattern(complex_: ChainComplex) -> Optional[Tuple[bool, ...]]:
    """The common head pattern of an oriented complex, ``None`` when empty or unoriented."""
    for _, _, graded in complex_.entries():
        if not graded.smoothing.oriented:
            return None
        return graded.smoothing.heads
    return None


def close_to_link(complex_: ChainComplex) -> ChainComplex:
    """Close every boundary point by positive curls and reduce."""
    count = complex_.boundary_count or 0
    if count == 0:
        reduced, _ = dg_reduce(complex_)
        return reduced
    word = closure_word(count, head_pattern(complex_))
    reduced, _ = dg_reduce(apply_to_complexes(word, [complex_]))
    return reduced


__all__ = [
    "Diagram",
    "apply_to_smoothings",
    "planar_cobordism",
    "planar_coblin",
    "compose_into_workspace",
    "apply_to_complexes",
    "apply_as_pdc",
    "head_pattern",
    "close_to_link",
]
