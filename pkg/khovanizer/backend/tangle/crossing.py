"""The two-term complex of a single crossing.

Boundary points are the crossing slots ``0..3``. The 0-smoothing joins
``a-b`` and ``c-d``; the 1-smoothing joins ``a-d`` and ``b-c``. With
gravity the under slots are tails, so the 0-smoothing runs ``0 -> 1``,
``2 -> 3`` (a clockwise pair, rotation number 1) and the 1-smoothing runs
``0 -> 3``, ``2 -> 1`` (counterclockwise, rotation number 2).
"""

from __future__ import annotations

from typing import Tuple

from ..cobordism import (
    INTEGERS,
    GradedSmoothing,
    GroundRing,
    MatMorphism,
    MatObject,
    OrientedSmoothing,
    build_smoothing,
    saddle,
)
from ..complex import ChainComplex


def crossing_smoothings(oriented: bool = True) -> Tuple[OrientedSmoothing, OrientedSmoothing]:
    zero = build_smoothing(4, [(0, 1), (2, 3)], oriented=oriented)
    one = build_smoothing(4, [(0, 3), (2, 1)], oriented=oriented)
    return zero, one


def crossing_complex(sign: int, oriented: bool = True, ring: GroundRing = INTEGERS) -> ChainComplex:
    """``[0-smoothing -> 1-smoothing]`` with the saddle as differential.

    Negative: degrees ``-1, 0`` with shifts ``{-2}, {-1}``. Positive:
    degrees ``0, 1`` with shifts ``{1}, {2}``.
    """
    if sign not in (1, -1):
        raise ValueError(f"Crossing sign must be +1 or -1, got {sign}")
    zero, one = crossing_smoothings(oriented)
    if sign < 0:
        low, shifts = -1, (-2, -1)
    else:
        low, shifts = 0, (1, 2)
    source = MatObject((GradedSmoothing(zero, shifts[0]),))
    target = MatObject((GradedSmoothing(one, shifts[1]),))
    differential = MatMorphism.build(source, target, [(0, 0, saddle(zero, one))])
    return ChainComplex(low, (source, target), (differential,), ring)


def loop_complex(count: int = 1, ring: GroundRing = INTEGERS) -> ChainComplex:
    """``count`` free loops as a single boundary-free object in degree 0."""
    graded = GradedSmoothing(build_smoothing(0, (), (1,) * count), 0)
    return ChainComplex(0, (MatObject((graded,)),), (), ring)


__all__ = ["crossing_smoothings", "crossing_complex", "loop_complex"]
