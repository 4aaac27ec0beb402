"""Reduced dotted cobordisms and their formal linear combinations."""

from __future__ import annotations

import bisect
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .exceptions import BoundaryMismatch
from .ring import Scalar
from .smoothing import OrientedSmoothing
from .surfaces import Component, evaluate_closed, normalise_component

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReducedCobordism:
    """A genus-0 cobordism with at most one dot per component.

    Components are kept sorted, so equal cobordisms compare equal.
    """

    bottom: OrientedSmoothing
    top: OrientedSmoothing
    components: Tuple[Component, ...]

    def __post_init__(self) -> None:
        if self.bottom.boundary_count != self.top.boundary_count:
            raise BoundaryMismatch(
                f"Cannot join {self.bottom.boundary_count} bottom points "
                f"to {self.top.boundary_count} top points"
            )

    @property
    def dots(self) -> int:
        return sum(1 for component in self.components if component.dotted)

    def is_identity(self) -> bool:
        if self.bottom != self.top:
            return False
        if len(self.components) != self.bottom.curve_count:
            return False
        return all(
            c.bottom == (i,) and c.top == (i,) and not c.dotted
            for i, c in enumerate(self.components)
        )

    def __str__(self) -> str:
        parts = []
        for c in self.components:
            dot = "*" if c.dotted else ""
            parts.append(f"{list(c.bottom)}|{list(c.top)}{dot}")
        return f"{self.bottom}->{self.top}: " + " ".join(parts)


@lru_cache(maxsize=8192)
def boundary_circles(
    bottom: OrientedSmoothing, top: OrientedSmoothing
) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Boundary circle of every bottom curve and every top curve.

    Bottom and top arcs joined at the boundary points form circles; loops
    are circles of their own. Returns one circle id per curve of each side.
    """
    n = bottom.boundary_count
    bottom_owner = bottom.arc_of_point
    top_owner = top.arc_of_point
    bottom_circle = [-1] * bottom.curve_count
    top_circle = [-1] * top.curve_count
    circle = 0
    for start in range(n):
        if bottom_circle[bottom_owner[start]] >= 0:
            continue
        point = start
        while True:
            bottom_circle[bottom_owner[point]] = circle
            point = bottom.partner[point]
            top_circle[top_owner[point]] = circle
            point = top.partner[point]
            if point == start:
                break
        circle += 1
    for index in range(bottom.arc_count, bottom.curve_count):
        bottom_circle[index] = circle
        circle += 1
    for index in range(top.arc_count, top.curve_count):
        top_circle[index] = circle
        circle += 1
    return tuple(bottom_circle), tuple(top_circle)


def circle_count(
    bottom: OrientedSmoothing,
    top: OrientedSmoothing,
    bottom_curves: Iterable[int],
    top_curves: Iterable[int],
) -> int:
    below, above = boundary_circles(bottom, top)
    return len({below[i] for i in bottom_curves} | {above[i] for i in top_curves})


def degree(cobordism: ReducedCobordism) -> int:
    """``χ - k - 2 * dots`` for a cobordism between ``2k``-point smoothings."""
    euler = 0
    for component in cobordism.components:
        euler += 2 - circle_count(
            cobordism.bottom, cobordism.top, component.bottom, component.top
        )
    k = cobordism.bottom.boundary_count // 2
    return euler - k - 2 * cobordism.dots


class _UnionFind:
    def __init__(self, size: int) -> None:
        self.parent = list(range(size))

    def find(self, item: int) -> int:
        root = item
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[item] != root:
            self.parent[item], item = root, self.parent[item]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _owners(components: Sequence[Component], count: int, top: bool) -> List[int]:
    owner = [-1] * count
    for index, component in enumerate(components):
        for curve in component.top if top else component.bottom:
            owner[curve] = index
    return owner


@lru_cache(maxsize=65536)
def compose_reduced(
    lower: ReducedCobordism, upper: ReducedCobordism
) -> Optional[Tuple[int, ReducedCobordism]]:
    """Stack ``upper`` on ``lower`` and normalise.

    Returns the scalar and the reduced cobordism, or ``None`` when the
    local relations kill the composite.
    """
    if lower.top != upper.bottom:
        raise BoundaryMismatch(f"Cannot glue {lower.top} to {upper.bottom}")
    middle = lower.top
    low_count = len(lower.components)
    union = _UnionFind(low_count + len(upper.components))
    low_owner = _owners(lower.components, middle.curve_count, top=True)
    up_owner = _owners(upper.components, middle.curve_count, top=False)
    for curve in range(middle.curve_count):
        union.union(low_owner[curve], low_count + up_owner[curve])

    euler: Dict[int, int] = {}
    dots: Dict[int, int] = {}
    bottoms: Dict[int, List[int]] = {}
    tops: Dict[int, List[int]] = {}
    for index, component in enumerate(lower.components):
        root = union.find(index)
        b = circle_count(lower.bottom, lower.top, component.bottom, component.top)
        euler[root] = euler.get(root, 0) + 2 - b
        dots[root] = dots.get(root, 0) + int(component.dotted)
        bottoms.setdefault(root, []).extend(component.bottom)
    for index, component in enumerate(upper.components):
        root = union.find(low_count + index)
        b = circle_count(upper.bottom, upper.top, component.bottom, component.top)
        euler[root] = euler.get(root, 0) + 2 - b
        dots[root] = dots.get(root, 0) + int(component.dotted)
        tops.setdefault(root, []).extend(component.top)
    for curve in range(middle.arc_count):
        root = union.find(low_owner[curve])
        euler[root] -= 1

    coefficient = 1
    result: List[Component] = []
    for root in sorted(euler):
        bottom = tuple(sorted(bottoms.get(root, ())))
        top = tuple(sorted(tops.get(root, ())))
        b = circle_count(lower.bottom, upper.top, bottom, top)
        twice_genus = 2 - b - euler[root]
        assert twice_genus >= 0 and twice_genus % 2 == 0, "non-orientable gluing"
        genus = twice_genus // 2
        if not bottom and not top:
            value = evaluate_closed(genus, dots[root])
            if value == 0:
                return None
            coefficient *= value
            continue
        normal = normalise_component(genus, dots[root])
        if normal is None:
            return None
        factor, dotted = normal
        coefficient *= factor
        result.append(Component(bottom, top, dotted))
    return coefficient, ReducedCobordism(lower.bottom, upper.top, tuple(sorted(result)))


def _loop_pieces(
    component: Component, bottom_arcs: int, top_arcs: int
) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    pieces: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = []
    rest_bottom = tuple(i for i in component.bottom if i < bottom_arcs)
    rest_top = tuple(i for i in component.top if i < top_arcs)
    if rest_bottom or rest_top:
        pieces.append((rest_bottom, rest_top))
    pieces.extend(((i,), ()) for i in component.bottom if i >= bottom_arcs)
    pieces.extend(((), (i,)) for i in component.top if i >= top_arcs)
    return pieces


@lru_cache(maxsize=65536)
def split_loops(cobordism: ReducedCobordism) -> Tuple[ReducedCobordism, ...]:
    """Neck-cut every loop off the component it shares with other curves.

    A loop bounds a disc in its own smoothing, so the neck around it can be
    cut: an undotted component splitting into ``b`` pieces becomes the sum
    of the ``b`` ways to leave exactly one piece undotted, a dotted one
    becomes the single term with every piece dotted. All coefficients are 1.
    The result is the same morphism with every loop on a disc of its own,
    which is the form delooping produces.
    """
    bottom_arcs = cobordism.bottom.arc_count
    top_arcs = cobordism.top.arc_count
    variants: List[List[Component]] = [[]]
    for component in cobordism.components:
        pieces = _loop_pieces(component, bottom_arcs, top_arcs)
        if len(pieces) == 1:
            choices = [[component]]
        elif component.dotted:
            choices = [[Component(b, t, True) for b, t in pieces]]
        else:
            choices = [
                [Component(b, t, i != plain) for i, (b, t) in enumerate(pieces)]
                for plain in range(len(pieces))
            ]
        variants = [variant + choice for variant in variants for choice in choices]
    return tuple(
        ReducedCobordism(cobordism.bottom, cobordism.top, tuple(sorted(variant)))
        for variant in variants
    )


Term = Tuple[ReducedCobordism, Scalar]


@dataclass(frozen=True)
class CobLin:
    """Formal linear combination of reduced cobordisms ``bottom -> top``."""

    bottom: OrientedSmoothing
    top: OrientedSmoothing
    terms: Tuple[Term, ...] = ()

    @classmethod
    def zero(cls, bottom: OrientedSmoothing, top: OrientedSmoothing) -> "CobLin":
        return cls(bottom, top, ())

    @classmethod
    def from_terms(
        cls,
        bottom: OrientedSmoothing,
        top: OrientedSmoothing,
        terms: Iterable[Term],
    ) -> "CobLin":
        """Collect like terms and drop zero coefficients."""
        totals: Dict[ReducedCobordism, Scalar] = {}
        for cobordism, coefficient in terms:
            if cobordism.bottom != bottom or cobordism.top != top:
                raise BoundaryMismatch(
                    f"Term {cobordism} does not run from {bottom} to {top}"
                )
            totals[cobordism] = totals.get(cobordism, 0) + coefficient
        kept = [
            (cobordism, _tidy(value)) for cobordism, value in totals.items() if value != 0
        ]
        kept.sort(key=lambda term: term[0].components)
        return cls(bottom, top, tuple(kept))

    @classmethod
    def single(cls, cobordism: ReducedCobordism, coefficient: Scalar = 1) -> "CobLin":
        return cls.from_terms(cobordism.bottom, cobordism.top, [(cobordism, coefficient)])

    @property
    def has_loops(self) -> bool:
        return bool(self.bottom.loop_count or self.top.loop_count)

    def canonical(self) -> "CobLin":
        """The same morphism with every loop split off by neck cutting.

        Without loops the reduced form is already unique.
        """
        if not self.has_loops:
            return self
        return CobLin.from_terms(
            self.bottom,
            self.top,
            (
                (piece, coefficient)
                for cobordism, coefficient in self.terms
                for piece in split_loops(cobordism)
            ),
        )

    def is_zero(self) -> bool:
        if len(self.terms) < 2:
            return not self.terms
        return not self.canonical().terms

    def equals(self, other: "CobLin") -> bool:
        """Equality as morphisms, not as written sums."""
        return (self - other).is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def _check_shape(self, other: "CobLin") -> None:
        if self.bottom != other.bottom or self.top != other.top:
            raise BoundaryMismatch(
                f"Cannot add {self.bottom}->{self.top} and {other.bottom}->{other.top}"
            )

    def __add__(self, other: "CobLin") -> "CobLin":
        self._check_shape(other)
        return CobLin.from_terms(self.bottom, self.top, self.terms + other.terms)

    def __neg__(self) -> "CobLin":
        return self.scale(-1)

    def __sub__(self, other: "CobLin") -> "CobLin":
        return self + (-other)

    def scale(self, factor: Scalar) -> "CobLin":
        if factor == 0:
            return CobLin.zero(self.bottom, self.top)
        return CobLin(
            self.bottom,
            self.top,
            tuple((cob, _tidy(coefficient * factor)) for cob, coefficient in self.terms),
        )

    def degrees(self) -> List[int]:
        return sorted({degree(cob) for cob, _ in self.terms})

    def scalar(self) -> Scalar:
        """Coefficient of the empty cobordism; only meaningful on closed smoothings."""
        if self.bottom.curve_count or self.top.curve_count:
            raise ValueError(f"{self.bottom}->{self.top} is not a scalar")
        return self.terms[0][1] if self.terms else 0

    def invertible_unit(self) -> Optional[Scalar]:
        """The coefficient when this is ``unit * identity``, else ``None``."""
        if len(self.terms) != 1:
            return None
        cobordism, coefficient = self.terms[0]
        if not cobordism.is_identity():
            return None
        return coefficient

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{coefficient}*({cob})" for cob, coefficient in self.terms)


def _tidy(value: Scalar) -> Scalar:
    denominator = getattr(value, "denominator", 1)
    if denominator == 1 and not isinstance(value, int):
        return int(value)
    return value


def compose_cob(first: CobLin, second: CobLin) -> CobLin:
    """``first`` followed by ``second`` (``second ∘ first``)."""
    if first.top != second.bottom:
        raise BoundaryMismatch(
            f"Cannot compose {first.bottom}->{first.top} with "
            f"{second.bottom}->{second.top}"
        )
    if not first.terms or not second.terms:
        return CobLin.zero(first.bottom, second.top)
    terms: List[Term] = []
    for lower, a in first.terms:
        for upper, b in second.terms:
            glued = compose_reduced(lower, upper)
            if glued is not None:
                factor, cobordism = glued
                terms.append((cobordism, a * b * factor))
    return CobLin.from_terms(first.bottom, second.top, terms)


def identity_cobordism(smoothing: OrientedSmoothing) -> CobLin:
    components = tuple(Component((i,), (i,)) for i in range(smoothing.curve_count))
    return CobLin.single(ReducedCobordism(smoothing, smoothing, components))


def connected_cobordism(
    bottom: OrientedSmoothing, top: OrientedSmoothing, dotted: bool = False
) -> ReducedCobordism:
    """The genus-0 cobordism with a single component touching every curve.

    Between the two smoothings of a crossing this is the saddle.
    """
    component = Component(
        tuple(range(bottom.curve_count)), tuple(range(top.curve_count)), dotted
    )
    return ReducedCobordism(bottom, top, (component,))


def saddle(bottom: OrientedSmoothing, top: OrientedSmoothing) -> CobLin:
    return CobLin.single(connected_cobordism(bottom, top))


def _with_loop(smoothing: OrientedSmoothing, sign: int) -> Tuple[OrientedSmoothing, int]:
    position = bisect.bisect_right(smoothing.loops, sign)
    loops = smoothing.loops[:position] + (sign,) + smoothing.loops[position:]
    grown = OrientedSmoothing(
        smoothing.boundary_count, smoothing.arcs, loops, smoothing.oriented
    )
    return grown, position


def cap(smoothing: OrientedSmoothing, loop_index: int, dotted: bool = False) -> CobLin:
    """Death of one loop, optionally dotted: ``σ ⊔ ○ -> σ``."""
    target = smoothing.without_loop(loop_index)
    removed = smoothing.loop_curve(loop_index)
    components = [Component((removed,), (), dotted)]
    for curve in range(smoothing.curve_count):
        if curve == removed:
            continue
        shifted = curve if curve < removed else curve - 1
        components.append(Component((curve,), (shifted,)))
    return CobLin.single(ReducedCobordism(smoothing, target, tuple(sorted(components))))


def cup(smoothing: OrientedSmoothing, sign: int = 1, dotted: bool = False) -> CobLin:
    """Birth of one loop, optionally dotted: ``σ -> σ ⊔ ○``."""
    if not smoothing.oriented:
        sign = 0
    target, position = _with_loop(smoothing, sign)
    born = target.loop_curve(position)
    components = [Component((), (born,), dotted)]
    for curve in range(smoothing.curve_count):
        shifted = curve if curve < born else curve + 1
        components.append(Component((curve,), (shifted,)))
    return CobLin.single(ReducedCobordism(smoothing, target, tuple(sorted(components))))


def _drop_curve(
    cobordism: ReducedCobordism, curve: int, on_top: bool, dotted: bool
) -> Optional[Tuple[int, Tuple[Component, ...]]]:
    coefficient = 1
    components: List[Component] = []

    def shift(indices: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(i if i < curve else i - 1 for i in indices if i != curve)

    for component in cobordism.components:
        touched = curve in (component.top if on_top else component.bottom)
        bottom = component.bottom if on_top else shift(component.bottom)
        top = shift(component.top) if on_top else component.top
        if not touched:
            components.append(Component(bottom, top, component.dotted))
            continue
        dots = int(component.dotted) + int(dotted)
        if dots >= 2:
            return None
        if not bottom and not top:
            coefficient *= evaluate_closed(0, dots)
            if coefficient == 0:
                return None
            continue
        components.append(Component(bottom, top, dots == 1))
    return coefficient, tuple(sorted(components))


def cap_top_loop(morphism: CobLin, loop_index: int, dotted: bool) -> CobLin:
    """``morphism`` followed by a (dotted) cap on one loop of its target.

    Capping a loop never changes the genus of the component it bounds.
    """
    target = morphism.top.without_loop(loop_index)
    curve = morphism.top.loop_curve(loop_index)
    terms: List[Term] = []
    for cobordism, coefficient in morphism.terms:
        dropped = _drop_curve(cobordism, curve, on_top=True, dotted=dotted)
        if dropped is not None:
            factor, components = dropped
            terms.append(
                (ReducedCobordism(morphism.bottom, target, components), coefficient * factor)
            )
    return CobLin.from_terms(morphism.bottom, target, terms)


def cup_bottom_loop(morphism: CobLin, loop_index: int, dotted: bool) -> CobLin:
    """A (dotted) cup on one loop of the source followed by ``morphism``."""
    source = morphism.bottom.without_loop(loop_index)
    curve = morphism.bottom.loop_curve(loop_index)
    terms: List[Term] = []
    for cobordism, coefficient in morphism.terms:
        dropped = _drop_curve(cobordism, curve, on_top=False, dotted=dotted)
        if dropped is not None:
            factor, components = dropped
            terms.append(
                (ReducedCobordism(source, morphism.top, components), coefficient * factor)
            )
    return CobLin.from_terms(source, morphism.top, terms)


__all__ = [
    "ReducedCobordism",
    "CobLin",
    "Term",
    "boundary_circles",
    "circle_count",
    "degree",
    "compose_reduced",
    "compose_cob",
    "identity_cobordism",
    "connected_cobordism",
    "saddle",
    "cap",
    "cup",
    "cap_top_loop",
    "cup_bottom_loop",
]
