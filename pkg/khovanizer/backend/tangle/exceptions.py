from __future__ import annotations

from typing import Optional

from ..exceptions import KhovanizerError


class TangleError(KhovanizerError):
    """Base exception for diagram input and assembly."""


class ParseError(TangleError):
    """Raised when PD text or JSON cannot be read."""

    def __init__(self, message: str, position: Optional[int] = None) -> None:
        self.position = position
        where = f" (at character {position})" if position is not None else ""
        super().__init__(f"{message}{where}")


class BadIncidence(TangleError):
    """Raised when edge labels do not describe a planar diagram."""

    def __init__(self, message: str, label: Optional[int] = None) -> None:
        self.label = label
        super().__init__(message)


class NotAlternating(TangleError):
    """Raised when a diagram has no consistent gravity information."""

    def __init__(self, message: str, label: Optional[int] = None) -> None:
        self.label = label
        super().__init__(message)


class Split(TangleError):
    """Raised when a connected diagram is required but several pieces are present."""


class NotClosed(TangleError):
    """Raised when a link is required but the diagram has open edges."""


__all__ = ["TangleError", "ParseError", "BadIncidence", "NotAlternating", "Split", "NotClosed"]
