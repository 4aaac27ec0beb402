from __future__ import annotations

from typing import Any, Optional, Tuple

from ..exceptions import KhovanizerError


class ComplexError(KhovanizerError):
    """Base exception for chain complexes and perturbed double complexes."""


class NotAComplex(ComplexError):
    """Raised when ``d ∘ d`` does not vanish."""

    def __init__(self, degree: int, cell: Optional[Tuple[int, int]] = None) -> None:
        self.degree = degree
        self.cell = cell
        where = f" at cell {cell}" if cell is not None else ""
        super().__init__(f"d_{degree + 1} ∘ d_{degree} is nonzero{where}")


class InhomogeneousDifferential(ComplexError):
    """Raised when a differential cell does not have quantum degree zero."""

    def __init__(self, degree: int, cell: Tuple[int, int], detail: str = "") -> None:
        self.degree = degree
        self.cell = cell
        message = f"Differential d_{degree} is not homogeneous at cell {cell}"
        super().__init__(f"{message}: {detail}" if detail else message)


class NoSuchLoop(ComplexError):
    """Raised when delooping is asked for a loop that is not there."""


class InvalidPDC(ComplexError):
    """Raised when a perturbed double complex breaks ``Σ d^i d^{k-i} = 0``."""

    def __init__(self, message: str, k: Optional[int] = None, source: Any = None) -> None:
        self.k = k
        self.source = source
        super().__init__(message)


__all__ = [
    "ComplexError",
    "NotAComplex",
    "InhomogeneousDifferential",
    "NoSuchLoop",
    "InvalidPDC",
]
