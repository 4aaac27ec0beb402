"""Exact ground rings used for cobordism coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exceptions import NotInvertible

Scalar = Union[int, Fraction]

_SELECTORS = {
    "z": "z",
    "zz": "z",
    "int": "z",
    "integers": "z",
    "q": "q",
    "qq": "q",
    "rationals": "q",
}


def _normalise(value: Scalar) -> Scalar:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value.numerator)
    return value


@dataclass(frozen=True)
class GroundRing:
    """Coefficient ring of a computation: the integers or the rationals."""

    selector: str

    def __post_init__(self) -> None:
        if self.selector not in ("z", "q"):
            raise ValueError(f"Unknown ground ring selector: {self.selector!r}")

    @property
    def name(self) -> str:
        return "integers" if self.selector == "z" else "rationals"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def coerce(self, value: Union[Scalar, str]) -> Scalar:
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, bool):
            raise TypeError("Booleans are not ring elements")
        if self.selector == "z":
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise ValueError(f"{value} is not an integer")
                return int(value.numerator)
            return int(value)
        return _normalise(Fraction(value))

    def is_unit(self, value: Scalar) -> bool:
        if self.selector == "z":
            return value in (1, -1)
        return value != 0

    def inverse(self, value: Scalar) -> Scalar:
        if not self.is_unit(value):
            raise NotInvertible(f"{value} is not a unit over the {self.name}")
        if self.selector == "z":
            return value
        return _normalise(Fraction(1) / Fraction(value))

    def format(self, value: Scalar) -> str:
        return str(_normalise(value))

    def __str__(self) -> str:
        return self.selector


INTEGERS = GroundRing("z")
RATIONALS = GroundRing("q")


def ground_ring(selector: Union[str, GroundRing]) -> GroundRing:
    """Resolve a ring selector such as ``"z"`` or ``"q"``."""
    if isinstance(selector, GroundRing):
        return selector
    try:
        return GroundRing(_SELECTORS[selector.strip().lower()])
    except KeyError:
        raise ValueError(
            f"Unknown ground ring: {selector!r}. Use 'z' or 'q'."
        ) from None


__all__ = ["Scalar", "GroundRing", "INTEGERS", "RATIONALS", "ground_ring"]
