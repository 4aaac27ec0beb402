"""Bigraded homology tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Mapping, Optional, Tuple

import sympy

from ..cobordism import INTEGERS, GroundRing, ground_ring
from .exceptions import HomologyError

HOMOLOGY_FORMAT = "khovanizer.homology"
HOMOLOGY_VERSION = 1

Bidegree = Tuple[int, int]

q, t = sympy.symbols("q t")


@dataclass(frozen=True)
class HomologyGroup:
    betti: int = 0
    torsion: Tuple[int, ...] = ()

    def is_zero(self) -> bool:
        return self.betti == 0 and not self.torsion

    def __str__(self) -> str:
        parts = [str(self.betti)] if self.betti else []
        parts.extend(f"Z{order}" for order in self.torsion)
        return "+".join(parts) or "0"


@dataclass
class HomologyTable:
    """``(i, j) -> HomologyGroup``; zero groups are never stored."""

    ring: GroundRing = INTEGERS
    groups: Dict[Bidegree, HomologyGroup] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {}
        for key, group in self.groups.items():
            if group.is_zero():
                continue
            if group.torsion and self.ring.selector == "q":
                raise HomologyError(f"Torsion {group.torsion} at {key} over the rationals")
            cleaned[(int(key[0]), int(key[1]))] = HomologyGroup(group.betti, tuple(sorted(group.torsion)))
        self.groups = dict(sorted(cleaned.items()))

    @classmethod
    def from_ranks(cls, ranks: Mapping[Bidegree, int], ring: GroundRing = INTEGERS) -> "HomologyTable":
        return cls(ring, {key: HomologyGroup(value) for key, value in ranks.items()})

    def betti(self, i: int, j: int) -> int:
        return self.groups.get((i, j), HomologyGroup()).betti

    def torsion(self, i: int, j: int) -> Tuple[int, ...]:
        return self.groups.get((i, j), HomologyGroup()).torsion

    def ranks(self) -> Dict[Bidegree, int]:
        return {key: group.betti for key, group in self.groups.items() if group.betti}

    def items(self) -> Iterator[Tuple[Bidegree, HomologyGroup]]:
        return iter(self.groups.items())

    def is_empty(self) -> bool:
        return not self.groups

    def total_rank(self) -> int:
        return sum(group.betti for group in self.groups.values())

    def rationalised(self) -> "HomologyTable":
        """The rational table: torsion dropped, Betti numbers kept."""
        return HomologyTable.from_ranks(self.ranks(), ground_ring("q"))

    def __len__(self) -> int:
        return len(self.groups)

    def to_document(self) -> Dict[str, Any]:
        return {
            "format": HOMOLOGY_FORMAT,
            "version": HOMOLOGY_VERSION,
            "ring": self.ring.selector,
            "entries": [
                {"i": i, "j": j, "betti": group.betti, "torsion": list(group.torsion)}
                for (i, j), group in self.groups.items()
            ],
        }

    @classmethod
    def from_document(cls, document: Mapping[str, Any]) -> "HomologyTable":
        if document.get("format") != HOMOLOGY_FORMAT:
            raise HomologyError(f"Not a homology document: {document.get('format')!r}")
        groups = {
            (entry["i"], entry["j"]): HomologyGroup(entry["betti"], tuple(entry.get("torsion", ())))
            for entry in document.get("entries", [])
        }
        return cls(ground_ring(document.get("ring", "z")), groups)


def two_line_check(table: HomologyTable) -> Optional[int]:
    """``K`` when the rational support lies on ``j - 2i = K ± 1``.

    A support on the single line ``j - 2i = s`` reports ``K = s + 1``.
    """
    lines = sorted({j - 2 * i for (i, j), group in table.items() if group.betti})
    if len(lines) == 1:
        return lines[0] + 1
    if len(lines) == 2 and lines[1] - lines[0] == 2:
        return lines[0] + 1
    return None


def poincare_polynomial(table: HomologyTable) -> sympy.Expr:
    return sympy.Add(*(group.betti * t**i * q**j for (i, j), group in table.items()))


def euler_characteristic(table: HomologyTable) -> sympy.Expr:
    """``Σ (-1)^i q^j dim H^{i,j}``, the unnormalised Jones polynomial."""
    return sympy.expand(sympy.Add(*((-1) ** (i % 2) * group.betti * q**j for (i, j), group in table.items())))


def tensor_tables(first: HomologyTable, second: HomologyTable) -> HomologyTable:
    """Rational Künneth product, the homology of a split union."""
    for table in (first, second):
        if any(group.torsion for _, group in table.items()):
            raise HomologyError("Products of tables are only formed over the rationals")
    ranks: Dict[Bidegree, int] = {}
    for (i1, j1), a in first.items():
        for (i2, j2), b in second.items():
            key = (i1 + i2, j1 + j2)
            ranks[key] = ranks.get(key, 0) + a.betti * b.betti
    return HomologyTable.from_ranks(ranks, ground_ring("q"))


def render_table(table: HomologyTable) -> str:
    """Rows ``j`` descending, columns ``i`` ascending; empty cells are ``.``."""
    if table.is_empty():
        return "(zero)"
    columns = list(range(min(i for i, _ in table.groups), max(i for i, _ in table.groups) + 1))
    rows = list(range(max(j for _, j in table.groups), min(j for _, j in table.groups) - 1, -1))
    cells: List[List[str]] = [
        [f"j={j}"] + [str(table.groups[(i, j)]) if (i, j) in table.groups else "." for i in columns]
        for j in rows
        if any((i, j) in table.groups for i in columns)
    ]
    header = ["", *(f"i={i}" for i in columns)]
    widths = [max(len(line[n]) for line in [header] + cells) for n in range(len(header))]
    lines = ["  ".join(value.rjust(widths[n]) for n, value in enumerate(line)) for line in [header] + cells]
    return "\n".join(line.rstrip() for line in lines)


__all__ = [
    "HOMOLOGY_FORMAT",
    "HOMOLOGY_VERSION",
    "Bidegree",
    "HomologyGroup",
    "HomologyTable",
    "two_line_check",
    "poincare_polynomial",
    "euler_characteristic",
    "tensor_tables",
    "render_table",
    "q",
    "t",
]
