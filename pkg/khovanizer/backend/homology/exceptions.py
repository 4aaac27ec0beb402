from __future__ import annotations

from typing import Optional, Tuple

from ..exceptions import KhovanizerError


class HomologyError(KhovanizerError):
    """Base exception for homology extraction."""


class NotFullyReduced(HomologyError):
    """Raised when a link complex still has loops, boundary or mixed-degree cells."""

    def __init__(self, message: str, degree: Optional[int] = None, cell: Optional[Tuple[int, int]] = None) -> None:
        self.degree = degree
        self.cell = cell
        super().__init__(message)


__all__ = ["HomologyError", "NotFullyReduced"]
