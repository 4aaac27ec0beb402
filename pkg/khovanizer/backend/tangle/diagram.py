"""Planar diagram (PD) codes for tangles and links.

A crossing ``X(a, b, c, d)`` lists its four edge labels counterclockwise,
starting at the incoming under-strand; ``a -> c`` is the under-strand and
``b - d`` the over-strand. Slots ``0`` and ``2`` are under slots.

Open edges are labels used by a single crossing. Their counterclockwise
order around the tangle disc is given explicitly in JSON input; otherwise
it is inferred during assembly.
"""

from __future__ import annotations

import json
import logging
import re
from collections import Counter
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from .exceptions import BadIncidence, ParseError

logger = logging.getLogger(__name__)

Crossing = Tuple[int, int, int, int]
End = Tuple[int, int]

_TOKEN = re.compile(
    r"\s*(?P<kind>[A-Za-z]+)\s*[\(\[](?P<args>[^\)\]]*)[\)\]]\s*,?",
)


@dataclass(frozen=True)
class TangleDiagram:
    """PD crossings, open edges in boundary order and free loops.

    ``signs`` pins the crossing signs of a piece cut out of a larger diagram,
    whose strands may be never under inside the piece.
    """

    crossings: Tuple[Crossing, ...]
    open_edges: Tuple[int, ...] = ()
    loops: int = 0
    name: Optional[str] = None
    boundary_ordered: bool = field(default=True, compare=False)
    signs: Optional[Tuple[int, ...]] = None

    def __post_init__(self) -> None:
        if self.signs is None:
            return
        if len(self.signs) != len(self.crossings) or any(s not in (1, -1) for s in self.signs):
            raise BadIncidence(f"Expected one sign of +1 or -1 per crossing, got {list(self.signs)}")

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def is_link(self) -> bool:
        return not self.open_edges

    @property
    def labels(self) -> Tuple[int, ...]:
        return tuple(sorted({label for crossing in self.crossings for label in crossing}))

    @cached_property
    def edge_ends(self) -> Dict[int, Tuple[End, ...]]:
        """Label -> the ``(crossing, slot)`` pairs it is attached to."""
        ends: Dict[int, List[End]] = {}
        for index, crossing in enumerate(self.crossings):
            for slot, label in enumerate(crossing):
                ends.setdefault(label, []).append((index, slot))
        return {label: tuple(found) for label, found in ends.items()}

    def other_end(self, label: int, end: End) -> Optional[End]:
        """The end of ``label`` that is not ``end``; ``None`` for open edges."""
        for candidate in self.edge_ends[label]:
            if candidate != end:
                return candidate
        return None

    def __str__(self) -> str:
        parts = [f"X({','.join(str(label) for label in c)})" for c in self.crossings]
        parts.extend("Loop()" for _ in range(self.loops))
        return " ".join(parts) or "Loop()"


def _check_incidence(
    crossings: Sequence[Crossing], open_edges: Optional[Sequence[int]]
) -> Tuple[int, ...]:
    counts = Counter(label for crossing in crossings for label in crossing)
    for label, count in sorted(counts.items()):
        if label <= 0:
            raise BadIncidence(f"Edge label {label} is not a positive integer", label)
        if count > 2:
            raise BadIncidence(f"Edge {label} is used {count} times", label)
    single = sorted(label for label, count in counts.items() if count == 1)
    if open_edges is None:
        return tuple(single)
    if len(set(open_edges)) != len(open_edges):
        raise BadIncidence("Open edges are listed twice")
    if sorted(open_edges) != single:
        missing = sorted(set(single) - set(open_edges))
        extra = sorted(set(open_edges) - set(single))
        label = (missing or extra)[0]
        raise BadIncidence(
            f"Open edges do not match the labels used once (unlisted: {missing}, "
            f"not open: {extra})",
            label,
        )
    if len(open_edges) % 2:
        raise BadIncidence(f"A tangle needs an even number of open edges, got {len(open_edges)}")
    return tuple(int(label) for label in open_edges)


def make_diagram(
    crossings: Iterable[Sequence[int]],
    open_edges: Optional[Sequence[int]] = None,
    loops: int = 0,
    name: Optional[str] = None,
) -> TangleDiagram:
    """Validate incidences and build a diagram.

    Without ``open_edges`` the labels used once become open edges in
    increasing order and the boundary order is left to assembly.
    """
    parsed: List[Crossing] = []
    for crossing in crossings:
        values = tuple(int(label) for label in crossing)
        if len(values) != 4:
            raise BadIncidence(f"Crossing {list(values)} does not have four edges")
        parsed.append((values[0], values[1], values[2], values[3]))
    if loops < 0:
        raise BadIncidence("The number of free loops cannot be negative")
    edges = _check_incidence(parsed, open_edges)
    return TangleDiagram(
        tuple(parsed), edges, loops, name, boundary_ordered=open_edges is not None or not edges
    )


def _parse_text(text: str, name: Optional[str]) -> TangleDiagram:
    body = text.strip()
    wrapper = re.fullmatch(r"PD\s*[\[\(](.*)[\]\)]", body, flags=re.DOTALL | re.IGNORECASE)
    if wrapper:
        body = wrapper.group(1)
    crossings: List[List[int]] = []
    loops = 0
    position = 0
    while position < len(body):
        if body[position:].strip() == "":
            break
        match = _TOKEN.match(body, position)
        if match is None:
            raise ParseError("Expected X(a,b,c,d) or Loop(n)", position)
        kind = match.group("kind").lower()
        args = [part.strip() for part in match.group("args").split(",") if part.strip()]
        try:
            values = [int(arg) for arg in args]
        except ValueError:
            raise ParseError(f"Non-integer edge label in {match.group(0).strip()}", position) from None
        if kind == "x":
            if len(values) != 4:
                raise ParseError(f"Crossing with {len(values)} labels", position)
            crossings.append(values)
        elif kind == "loop":
            if len(values) > 1:
                raise ParseError("Loop takes at most one label", position)
            loops += 1
        else:
            raise ParseError(f"Unknown token {match.group('kind')!r}", position)
        position = match.end()
    if not crossings and not loops:
        raise ParseError("Empty diagram")
    return make_diagram(crossings, None, loops, name)


def _parse_document(document: Mapping[str, Any], name: Optional[str]) -> TangleDiagram:
    if not isinstance(document, Mapping):
        raise ParseError("A JSON diagram must be an object")
    crossings = document.get("crossings", [])
    if not isinstance(crossings, list) or not all(isinstance(c, list) for c in crossings):
        raise ParseError("'crossings' must be a list of four-element lists")
    open_edges = document.get("open_edges")
    if open_edges is not None and not isinstance(open_edges, list):
        raise ParseError("'open_edges' must be a list")
    loops = document.get("loops", 0)
    if not isinstance(loops, int) or isinstance(loops, bool):
        raise ParseError("'loops' must be an integer")
    if not crossings and not loops:
        raise ParseError("Empty diagram")
    for crossing in crossings:
        if len(crossing) != 4 or not all(isinstance(v, int) and not isinstance(v, bool) for v in crossing):
            raise ParseError(f"Crossing {crossing} is not four integers")
    return make_diagram(crossings, open_edges, loops, document.get("name", name))


def parse_pd(source: Union[str, Mapping[str, Any]], name: Optional[str] = None) -> TangleDiagram:
    """Read PD text (``X(1,4,2,5) X(3,6,4,1) ...``) or a JSON diagram."""
    if isinstance(source, Mapping):
        return _parse_document(source, name)
    stripped = source.strip()
    if stripped.startswith("{"):
        try:
            document = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise ParseError(f"Invalid JSON: {e.msg}", e.pos) from e
        return _parse_document(document, name)
    return _parse_text(source, name)


def crossing_graph(diagram: TangleDiagram) -> nx.MultiGraph:
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(diagram.crossing_count))
    for label, ends in diagram.edge_ends.items():
        if len(ends) == 2:
            graph.add_edge(ends[0][0], ends[1][0], label=label)
    return graph


def components(diagram: TangleDiagram) -> List[Tuple[int, ...]]:
    """Crossing sets of the connected pieces, ordered by smallest crossing."""
    pieces = [tuple(sorted(part)) for part in nx.connected_components(crossing_graph(diagram))]
    return sorted(pieces)


def is_split(diagram: TangleDiagram) -> bool:
    pieces = len(components(diagram)) + diagram.loops
    return pieces > 1


def _face_count(rotations: Mapping[Any, Sequence[int]], ends: Mapping[int, List[Tuple[Any, int]]]) -> Dict[Any, int]:
    """Faces of the ribbon graph, per vertex of the component they lie in."""
    seen = set()
    faces: Dict[Any, int] = {}
    for vertex, labels in rotations.items():
        for slot in range(len(labels)):
            if (vertex, slot) in seen:
                continue
            current = (vertex, slot)
            while current not in seen:
                seen.add(current)
                v, t = current
                leave = (t + 1) % len(rotations[v])
                label = rotations[v][leave]
                pair = ends[label]
                current = pair[1] if pair[0] == (v, leave) else pair[0]
            faces[vertex] = faces.get(vertex, 0) + 1
    return faces


def check_planar(diagram: TangleDiagram) -> None:
    """Raise ``BadIncidence`` when the PD code has no planar realisation.

    Each connected piece must satisfy ``V - E + F = 2`` for its ribbon
    graph. Open edges end on one extra boundary vertex when their order is
    known, and on a leaf vertex of their own otherwise.
    """
    rotations: Dict[Any, Sequence[int]] = {
        ("x", index): crossing for index, crossing in enumerate(diagram.crossings)
    }
    if diagram.open_edges:
        if diagram.boundary_ordered:
            rotations[("boundary",)] = tuple(reversed(diagram.open_edges))
        else:
            for label in diagram.open_edges:
                rotations[("leaf", label)] = (label,)
    ends: Dict[int, List[Tuple[Any, int]]] = {}
    for vertex, labels in rotations.items():
        for slot, label in enumerate(labels):
            ends.setdefault(label, []).append((vertex, slot))
    graph = nx.MultiGraph()
    graph.add_nodes_from(rotations)
    for label, pair in ends.items():
        graph.add_edge(pair[0][0], pair[1][0], label=label)
    faces = _face_count(rotations, ends)
    for part in nx.connected_components(graph):
        vertices = len(part)
        edges = graph.subgraph(part).number_of_edges()
        found = sum(faces.get(vertex, 0) for vertex in part)
        if vertices - edges + found != 2:
            label = min(l for v in part for l in rotations[v])
            raise BadIncidence(
                f"PD code is not planar: {found} faces where {edges - vertices + 2} are needed",
                label,
            )


def sub_tangle(diagram: TangleDiagram, crossings: Iterable[int]) -> TangleDiagram:
    """The sub-diagram on ``crossings``; its boundary order is left to assembly.

    The piece keeps the crossing signs it has inside ``diagram``.
    """
    from .orientation import crossing_signs

    chosen = sorted(set(crossings))
    if not chosen:
        raise BadIncidence("A sub-tangle needs at least one crossing")
    selected = [diagram.crossings[i] for i in chosen]
    parent = crossing_signs(diagram).signs
    return replace(make_diagram(selected, None, 0, None), signs=tuple(parent[i] for i in chosen))


__all__ = [
    "Crossing",
    "End",
    "TangleDiagram",
    "make_diagram",
    "parse_pd",
    "crossing_graph",
    "components",
    "is_split",
    "check_planar",
    "sub_tangle",
]
