from __future__ import annotations

from ..exceptions import KhovanizerError


class CobordismError(KhovanizerError):
    """Base exception for smoothings, cobordisms and their matrices."""


class CrossingMatching(CobordismError):
    """Raised when the arcs of a smoothing do not form a planar matching."""


class NonAlternating(CobordismError):
    """Raised when heads and tails do not alternate around the boundary."""


class BoundaryMismatch(CobordismError):
    """Raised when two cobordisms are glued along different smoothings."""


class DimensionMismatch(CobordismError):
    """Raised when matrix shapes do not agree."""


class NotInvertible(CobordismError):
    """Raised when an entry is not a unit multiple of an identity."""


__all__ = [
    "CobordismError",
    "CrossingMatching",
    "NonAlternating",
    "BoundaryMismatch",
    "DimensionMismatch",
    "NotInvertible",
]
