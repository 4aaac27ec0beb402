"""Diagonality of reduced complexes and of their partial closures.

A reduced complex is ``C``-diagonal when ``2r - R(σ{q}) = C`` for every
object ``σ{q}`` in degree ``r``. It is coherently diagonal when in addition
every partial closure ``U`` yields a ``(C - R_U)``-diagonal complex.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..cobordism import GradedSmoothing, NonAlternating, shifted_rotation_number
from ..complex import ChainComplex, dg_reduce, is_reduced
from ..planar import (
    OperatorWord,
    apply_to_complexes,
    compile_word,
    enumerate_partial_closures,
    head_pattern,
    operator_rotation_number,
)
from ..tangle.exceptions import NotAlternating

logger = logging.getLogger(__name__)

Witness = Tuple[Tuple[int, GradedSmoothing], Tuple[int, GradedSmoothing]]


class DiagonalStatus(str, Enum):
    DIAGONAL = "diagonal"
    NOT_DIAGONAL = "not_diagonal"
    NOT_REDUCED = "not_reduced"


@dataclass(frozen=True)
class DiagonalityVerdict:
    status: DiagonalStatus
    constant: Optional[int] = None
    witness: Optional[Witness] = None
    word: Optional[OperatorWord] = None
    expected: Optional[int] = None
    vacuous: bool = False
    checked: int = 0

    @property
    def is_diagonal(self) -> bool:
        return self.status is DiagonalStatus.DIAGONAL

    def to_document(self) -> Dict[str, Any]:
        document: Dict[str, Any] = {"status": self.status.value, "constant": self.constant}
        if self.witness is not None:
            document["witness"] = [
                {"degree": r, "object": str(graded), "value": 2 * r - shifted_rotation_number(graded)}
                for r, graded in self.witness
            ]
        if self.word is not None:
            document["word"] = [str(step) for step in self.word.steps]
            document["expected"] = self.expected
        if self.checked:
            document["closures_checked"] = self.checked
        return document


def _rotation_constant(r: int, graded: GradedSmoothing) -> int:
    try:
        return 2 * r - shifted_rotation_number(graded)
    except NonAlternating as e:
        raise NotAlternating(f"Object {graded} in degree {r} has no orientation") from e


def diagonality(complex_: ChainComplex, reduce: bool = True) -> DiagonalityVerdict:
    """Reduce (unless told not to) and compare ``2r - R`` across all objects.

    The empty complex counts as ``0``-diagonal.
    """
    if reduce:
        complex_, _ = dg_reduce(complex_)
    elif not is_reduced(complex_):
        return DiagonalityVerdict(DiagonalStatus.NOT_REDUCED)
    first: Optional[Tuple[int, GradedSmoothing]] = None
    constant: Optional[int] = None
    for r, _, graded in complex_.entries():
        value = _rotation_constant(r, graded)
        if first is None:
            first, constant = (r, graded), value
        elif value != constant:
            return DiagonalityVerdict(DiagonalStatus.NOT_DIAGONAL, witness=(first, (r, graded)))
    if first is None:
        return DiagonalityVerdict(DiagonalStatus.DIAGONAL, 0, vacuous=True)
    return DiagonalityVerdict(DiagonalStatus.DIAGONAL, constant)


def expected_constant(parts: Sequence[int], word: OperatorWord) -> int:
    """``Σ C_i - R_w`` for a word applied to ``C_i``-diagonal inputs."""
    return sum(parts) - operator_rotation_number(word)


def coherent_diagonality(
    complex_: ChainComplex,
    arity: Optional[int] = None,
    max_length: Optional[int] = None,
) -> DiagonalityVerdict:
    """Check the complex and every partial closure of length below ``arity / 2``.

    Returns the first closure word whose result is not diagonal with the
    predicted constant.
    """
    complex_, _ = dg_reduce(complex_)
    if arity is None:
        arity = complex_.boundary_count or 0
    base = diagonality(complex_, reduce=False)
    if not base.is_diagonal or arity == 0 or base.vacuous:
        return base
    pattern = head_pattern(complex_)
    if pattern is None:
        raise NotAlternating("Partial closures need an oriented complex")
    assert base.constant is not None
    length = arity // 2 - 1 if max_length is None else max_length
    seen = set()
    checked = 0
    for word in enumerate_partial_closures(arity, length, pattern):
        if not word.steps:
            continue
        signature = compile_word(word).signature()
        if signature in seen:
            continue
        seen.add(signature)
        checked += 1
        expected = expected_constant([base.constant], word)
        closed = diagonality(apply_to_complexes(word, [complex_]))
        if not closed.is_diagonal or (not closed.vacuous and closed.constant != expected):
            logger.debug("Closure %s breaks coherence", word.steps)
            return DiagonalityVerdict(
                DiagonalStatus.NOT_DIAGONAL,
                closed.constant,
                closed.witness,
                word,
                expected,
                checked=checked,
            )
    logger.debug("%d distinct partial closures are diagonal", checked)
    return DiagonalityVerdict(DiagonalStatus.DIAGONAL, base.constant, checked=checked)


def single_line_shape(complex_: ChainComplex) -> Optional[int]:
    """``K`` when a two-point complex is a column of single arcs with ``q = 2r + K``."""
    complex_, _ = dg_reduce(complex_)
    if complex_.boundary_count not in (None, 2):
        return None
    offsets: List[int] = []
    for r, _, graded in complex_.entries():
        smoothing = graded.smoothing
        if smoothing.arc_count != 1 or smoothing.loop_count:
            return None
        offsets.append(graded.q_shift - 2 * r)
    if len(set(offsets)) != 1:
        return None
    return offsets[0]


__all__ = [
    "Witness",
    "DiagonalStatus",
    "DiagonalityVerdict",
    "diagonality",
    "expected_constant",
    "coherent_diagonality",
    "single_line_shape",
]
