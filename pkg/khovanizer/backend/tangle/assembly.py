"""Khovanov complexes of diagrams by progressive composition.

Crossings are attached one at a time. The boundary of the partial tangle is
tracked as a cyclic list of edge labels; an attachment is the word that
joins the new crossing at the first shared label and then curls every pair
of equal neighbouring labels. The partial complex is reduced after each
attachment, so its size stays governed by the boundary, not by the number
of crossings.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from ..cobordism import INTEGERS, GroundRing
from ..complex import ChainComplex, ReductionReport, dg_reduce, reduce_workspace, tensor, validate
from ..homology import HomologyTable, homology_table
from ..planar import (
    Binary,
    OperatorWord,
    Unary,
    apply_to_complexes,
    close_to_link,
    compose_into_workspace,
    curl_sign,
    rotation_wiring,
)
from ..planar.operators import Pattern, curl_survivors, join_survivors
from ..services.event_service import CancellationToken
from .crossing import crossing_complex, loop_complex
from .diagram import TangleDiagram, check_planar, components
from .exceptions import BadIncidence, NotAlternating, Split
from .gravity import gravity_or_none
from .orientation import crossing_signs

logger = logging.getLogger(__name__)

CROSSING_PATTERN: Pattern = (False, True, False, True)


@dataclass
class TangleComplex:
    """A reduced complex with the edge label sitting at each boundary point."""

    complex: ChainComplex
    boundary: Tuple[int, ...]
    pattern: Optional[Pattern]
    order: Tuple[int, ...] = ()
    report: ReductionReport = field(default_factory=ReductionReport)

    @property
    def oriented(self) -> bool:
        return self.pattern is not None or not self.boundary


@dataclass(frozen=True)
class Attachment:
    word: OperatorWord
    boundary: Tuple[int, ...]
    pattern: Optional[Pattern]


def _close_neighbours(
    labels: List[int],
    pattern: Optional[List[bool]],
    steps: List,
    slot: int = 0,
) -> Tuple[List[int], Optional[List[bool]]]:
    while len(labels) >= 2:
        n = len(labels)
        position = next((j for j in range(n) if labels[j] == labels[(j + 1) % n]), None)
        if position is None:
            break
        steps.append(Unary(slot, position, curl_sign(None if pattern is None else tuple(pattern), position)))
        labels = curl_survivors(labels, position)
        if pattern is not None:
            pattern = curl_survivors(pattern, position)
    return labels, pattern


def self_closure(labels: Sequence[int], pattern: Optional[Pattern]) -> Attachment:
    """Curl the equal neighbours of a single piece (the kinks of a crossing)."""
    steps: List = []
    remaining, heads = _close_neighbours(list(labels), None if pattern is None else list(pattern), steps)
    word = OperatorWord((len(labels),), tuple(steps), None if pattern is None else (pattern,))
    return Attachment(word, tuple(remaining), None if heads is None else tuple(heads))


def join_attachment(
    first: Sequence[int],
    second: Sequence[int],
    patterns: Optional[Tuple[Pattern, Pattern]] = None,
) -> Attachment:
    """The word gluing two pieces along all of their shared labels."""
    shared = set(first) & set(second)
    if not shared:
        raise BadIncidence("The pieces share no edge")
    first_point = next(i for i, label in enumerate(first) if label in shared)
    second_point = list(second).index(first[first_point])
    steps: List = [Binary(0, first_point, 1, second_point)]
    labels = join_survivors(first, first_point, second, second_point)
    pattern = None
    if patterns is not None:
        pattern = join_survivors(patterns[0], first_point, patterns[1], second_point)
    labels, pattern = _close_neighbours(labels, pattern, steps)
    word = OperatorWord((len(first), len(second)), tuple(steps), patterns)
    return Attachment(word, tuple(labels), None if pattern is None else tuple(pattern))


def is_legal(boundary: Sequence[int]) -> bool:
    """A piece is a disc only when no label is left on two boundary points."""
    return len(set(boundary)) == len(boundary)


def _boundary_after(current: Optional[Sequence[int]], labels: Sequence[int]) -> Optional[Tuple[int, ...]]:
    if current is None:
        result = self_closure(labels, None).boundary
    elif not set(current) & set(labels):
        return None
    else:
        result = join_attachment(current, labels).boundary
    return result if is_legal(result) else None


def _order_piece(
    diagram: TangleDiagram, piece: Sequence[int], rng: Optional[random.Random] = None
) -> List[int]:
    remaining = set(piece)
    order: List[int] = []
    current: Optional[Tuple[int, ...]] = None
    while remaining:
        options = []
        for index in sorted(remaining):
            boundary = _boundary_after(current, diagram.crossings[index])
            if boundary is not None:
                options.append((len(boundary), index, boundary))
        if not options:
            raise BadIncidence(
                f"No planar attachment for crossings {sorted(remaining)}",
                diagram.crossings[min(remaining)][0],
            )
        if rng is None:
            _, index, boundary = min(options)
        else:
            _, index, boundary = rng.choice(options)
        order.append(index)
        remaining.discard(index)
        current = boundary
        logger.debug("Crossing %d attached, boundary now %d points", index, len(boundary))
    return order


def crossing_order(diagram: TangleDiagram, rng: Optional[random.Random] = None) -> Tuple[int, ...]:
    """Greedy order keeping every partial boundary as small as possible.

    Ties go to the lowest crossing index; pieces of a split diagram follow
    one another. With ``rng`` a random legal order is drawn instead.
    """
    order: List[int] = []
    for piece in components(diagram):
        order.extend(_order_piece(diagram, piece, rng))
    return tuple(order)


def _assemble_piece(
    diagram: TangleDiagram,
    order: Sequence[int],
    signs: Sequence[int],
    oriented: bool,
    ring: GroundRing,
    token: Optional[CancellationToken],
    validate_steps: bool,
) -> TangleComplex:
    report = ReductionReport()
    base = CROSSING_PATTERN if oriented else None
    first = order[0]
    start = self_closure(diagram.crossings[first], base)
    complex_ = crossing_complex(signs[first], oriented, ring)
    if start.word.steps:
        complex_ = apply_to_complexes(start.word, [complex_])
    complex_, step_report = dg_reduce(complex_, validate_steps=validate_steps)
    report.merge(step_report)
    boundary, pattern = start.boundary, start.pattern
    for index in order[1:]:
        if token is not None:
            token.throw_if_cancellation_requested("assembly")
        patterns = None if pattern is None or base is None else (pattern, base)
        attachment = join_attachment(boundary, diagram.crossings[index], patterns)
        if not is_legal(attachment.boundary):
            raise BadIncidence(f"Attaching crossing {index} leaves a non-planar boundary")
        workspace = compose_into_workspace(
            attachment.word, [complex_, crossing_complex(signs[index], oriented, ring)]
        )
        report.merge(reduce_workspace(workspace))
        complex_ = workspace.to_complex()
        if validate_steps:
            validate(complex_)
        boundary, pattern = attachment.boundary, attachment.pattern
        logger.debug(
            "Attached crossing %d: %d objects on %d boundary points",
            index,
            complex_.size,
            len(boundary),
        )
    return TangleComplex(complex_, tuple(boundary), pattern, tuple(order), report)


def _rotate(result: TangleComplex, offset: int) -> TangleComplex:
    n = len(result.boundary)
    if n == 0 or offset % n == 0:
        return result
    rotated = apply_to_complexes(rotation_wiring(n, offset), [result.complex])
    boundary = result.boundary[offset:] + result.boundary[:offset]
    pattern = None if result.pattern is None else result.pattern[offset:] + result.pattern[:offset]
    return TangleComplex(rotated, boundary, pattern, result.order, result.report)


def match_boundary(result: TangleComplex, diagram: TangleDiagram) -> TangleComplex:
    boundary = result.boundary
    if not boundary:
        return result
    if not diagram.boundary_ordered:
        return _rotate(result, boundary.index(min(boundary)))
    wanted = tuple(diagram.open_edges)
    offset = boundary.index(wanted[0]) if wanted[0] in boundary else -1
    if offset < 0 or boundary[offset:] + boundary[:offset] != wanted:
        raise BadIncidence(
            f"Open edges {list(wanted)} are not in counterclockwise order "
            f"(assembly found {list(boundary)})",
            wanted[0],
        )
    return _rotate(result, offset)


def assemble(
    diagram: TangleDiagram,
    ring: GroundRing = INTEGERS,
    require_alternating: bool = False,
    cancellation_token: Optional[CancellationToken] = None,
    validate_steps: bool = False,
    rng: Optional[random.Random] = None,
) -> TangleComplex:
    """Reduced Khovanov complex of ``diagram`` with its boundary labels.

    Alternating diagrams are assembled with gravity orientations, so the
    result carries rotation numbers; other diagrams use unoriented
    smoothings. ``require_alternating`` turns the latter case into
    ``NotAlternating``.
    """
    check_planar(diagram)
    gravity = gravity_or_none(diagram)
    if gravity is None and require_alternating:
        raise NotAlternating("The diagram is not alternating")
    oriented = gravity is not None
    signs = crossing_signs(diagram).signs
    pieces = components(diagram)
    open_labels = set(diagram.open_edges)
    open_pieces = [
        piece for piece in pieces if any(label in open_labels for i in piece for label in diagram.crossings[i])
    ]
    if len(open_pieces) > 1:
        raise Split(f"The tangle has {len(open_pieces)} pieces with open edges")
    order = crossing_order(diagram, rng)
    position = {index: n for n, index in enumerate(order)}
    ordered_pieces = open_pieces + [piece for piece in pieces if piece not in open_pieces]
    results = [
        _assemble_piece(
            diagram,
            sorted(piece, key=position.__getitem__),
            signs,
            oriented,
            ring,
            cancellation_token,
            validate_steps,
        )
        for piece in ordered_pieces
    ]
    if diagram.loops:
        results.append(TangleComplex(loop_complex(diagram.loops, ring), (), None))
    combined = results[0]
    for other in results[1:]:
        merged, step_report = dg_reduce(tensor(combined.complex, other.complex))
        combined.report.merge(other.report)
        combined.report.merge(step_report)
        combined = TangleComplex(merged, combined.boundary, combined.pattern, combined.order, combined.report)
    if len(results) == 1 and not diagram.crossings:
        reduced, step_report = dg_reduce(combined.complex)
        combined.report.merge(step_report)
        combined = TangleComplex(reduced, (), None, (), combined.report)
    combined.order = order
    combined.report.complex = combined.complex
    result = match_boundary(combined, diagram)
    logger.info(
        "Assembled %s: %d crossings, %d objects, %d deloops, %d eliminations",
        diagram.name or "diagram",
        diagram.crossing_count,
        result.complex.size,
        result.report.deloop_count,
        result.report.elimination_count,
    )
    return result


def kh(
    diagram: TangleDiagram,
    ring: GroundRing = INTEGERS,
    require_alternating: bool = False,
    cancellation_token: Optional[CancellationToken] = None,
    validate_steps: bool = False,
) -> ChainComplex:
    """The reduced Khovanov complex of a tangle or link diagram."""
    return assemble(
        diagram,
        ring,
        require_alternating=require_alternating,
        cancellation_token=cancellation_token,
        validate_steps=validate_steps,
    ).complex


def khovanov_homology(
    diagram: TangleDiagram,
    ring: GroundRing = INTEGERS,
    cancellation_token: Optional[CancellationToken] = None,
    validate_steps: bool = False,
) -> HomologyTable:
    """Bigraded homology of a link, or of the standard closure of a tangle."""
    complex_ = kh(diagram, ring, cancellation_token=cancellation_token, validate_steps=validate_steps)
    if complex_.boundary_count:
        complex_ = close_to_link(complex_)
    return homology_table(complex_, ring)


def compose_pieces(first: TangleComplex, second: TangleComplex) -> TangleComplex:
    """Glue two assembled pieces along their shared labels and reduce."""
    patterns = None
    if first.pattern is not None and second.pattern is not None:
        patterns = (first.pattern, second.pattern)
    attachment = join_attachment(first.boundary, second.boundary, patterns)
    if not is_legal(attachment.boundary):
        raise BadIncidence("The pieces do not glue to a disc")
    workspace = compose_into_workspace(attachment.word, [first.complex, second.complex])
    report = reduce_workspace(workspace)
    complex_ = workspace.to_complex()
    report.complex = complex_
    return TangleComplex(
        complex_, attachment.boundary, attachment.pattern, first.order + second.order, report
    )


__all__ = [
    "CROSSING_PATTERN",
    "TangleComplex",
    "Attachment",
    "self_closure",
    "join_attachment",
    "is_legal",
    "crossing_order",
    "assemble",
    "kh",
    "khovanov_homology",
    "match_boundary",
    "compose_pieces",
]
