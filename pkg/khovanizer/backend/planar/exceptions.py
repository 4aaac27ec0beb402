from __future__ import annotations

from ..exceptions import KhovanizerError


class PlanarError(KhovanizerError):
    """Base exception for planar operators and their application."""


class ArityMismatch(PlanarError):
    """Raised when inputs do not have the boundary counts an operator expects."""


class OrientationMismatch(PlanarError):
    """Raised when an operator joins two heads, two tails, or curls the wrong way."""


__all__ = ["PlanarError", "ArityMismatch", "OrientationMismatch"]
