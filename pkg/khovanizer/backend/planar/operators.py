"""Basic planar operators and words in them.

A word acts on numbered slots, one per input. ``Unary(slot, position, sign)``
curls the points ``position`` and ``position + 1`` (cyclically) of a slot
together. ``Binary(first, first_point, second, second_point)`` joins one
point of each slot by a single arc; the result stays in ``first`` and
``second`` is used up. A valid word leaves exactly one slot.

Boundary points that survive a basic operator keep their cyclic order and
are re-indexed from the basepoint of the (first) input: a curl at
``(n - 1, 0)`` makes point ``1`` the new basepoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .exceptions import ArityMismatch, OrientationMismatch

Pattern = Tuple[bool, ...]


class OperatorKind(str, Enum):
    UNARY_POSITIVE = "unary_positive"
    UNARY_NEGATIVE = "unary_negative"
    UNARY_UNORIENTED = "unary_unoriented"
    BINARY = "binary"


@dataclass(frozen=True)
class Unary:
    slot: int
    position: int
    sign: int

    @property
    def kind(self) -> OperatorKind:
        if self.sign > 0:
            return OperatorKind.UNARY_POSITIVE
        if self.sign < 0:
            return OperatorKind.UNARY_NEGATIVE
        return OperatorKind.UNARY_UNORIENTED


@dataclass(frozen=True)
class Binary:
    first: int
    first_point: int
    second: int
    second_point: int

    @property
    def kind(self) -> OperatorKind:
        return OperatorKind.BINARY


BasicOperator = Union[Unary, Binary]


def curl_survivors(items: Sequence, position: int) -> List:
    n = len(items)
    if position == n - 1:
        return list(items[1 : n - 1])
    return list(items[:position]) + list(items[position + 2 :])


def join_survivors(first: Sequence, first_point: int, second: Sequence, second_point: int) -> List:
    return (
        list(first[:first_point])
        + list(second[second_point + 1 :])
        + list(second[:second_point])
        + list(first[first_point + 1 :])
    )


@dataclass(frozen=True)
class OperatorWord:
    """Input arities, optional head patterns of the inputs, and the steps."""

    input_arities: Tuple[int, ...]
    steps: Tuple[BasicOperator, ...] = ()
    patterns: Optional[Tuple[Pattern, ...]] = None

    def __post_init__(self) -> None:
        self._simulate()

    def _simulate(self) -> Tuple[int, List[int]]:
        """Check the word; returns the surviving slot and the per-step rotation numbers."""
        arities: Dict[int, int] = dict(enumerate(self.input_arities))
        heads: Dict[int, List[bool]] = {}
        if self.patterns is not None:
            if len(self.patterns) != len(self.input_arities):
                raise ArityMismatch("One head pattern per input is required")
            for slot, pattern in enumerate(self.patterns):
                if len(pattern) != self.input_arities[slot]:
                    raise ArityMismatch(f"Pattern of input {slot} has the wrong length")
                heads[slot] = list(pattern)
        for arity in self.input_arities:
            if arity < 0 or arity % 2:
                raise ArityMismatch(f"Arity {arity} is not even")
        contributions: List[int] = []
        for index, step in enumerate(self.steps):
            if isinstance(step, Unary):
                n = arities.get(step.slot)
                if n is None:
                    raise ArityMismatch(f"Step {index} uses missing slot {step.slot}")
                if n < 2 or not 0 <= step.position < n:
                    raise ArityMismatch(f"Step {index} curls position {step.position} of arity {n}")
                if step.slot in heads:
                    pattern = heads[step.slot]
                    is_head = pattern[step.position]
                    if is_head == pattern[(step.position + 1) % n]:
                        raise OrientationMismatch(f"Step {index} curls two points of equal status")
                    if step.sign != 0 and (step.sign > 0) != is_head:
                        raise OrientationMismatch(
                            f"Step {index}: a curl starting at a "
                            f"{'head' if is_head else 'tail'} is "
                            f"{'positive' if is_head else 'negative'}"
                        )
                    heads[step.slot] = curl_survivors(pattern, step.position)
                arities[step.slot] = n - 2
                if step.sign > 0:
                    contributions.append(0)
                elif step.sign < 0:
                    contributions.append(-2 if n == 2 else -1)
                else:
                    contributions.append(0)
            else:
                n1 = arities.get(step.first)
                n2 = arities.get(step.second)
                if n1 is None or n2 is None or step.first == step.second:
                    raise ArityMismatch(f"Step {index} joins unavailable slots")
                if not (0 <= step.first_point < n1 and 0 <= step.second_point < n2):
                    raise ArityMismatch(f"Step {index} joins points outside the inputs")
                if step.first in heads and step.second in heads:
                    a = heads[step.first][step.first_point]
                    b = heads[step.second][step.second_point]
                    if a == b:
                        raise OrientationMismatch(f"Step {index} joins two points of equal status")
                    heads[step.first] = join_survivors(
                        heads[step.first], step.first_point, heads[step.second], step.second_point
                    )
                    del heads[step.second]
                arities[step.first] = n1 + n2 - 2
                del arities[step.second]
                contributions.append(-1)
        if len(arities) != 1:
            raise ArityMismatch(f"Word leaves {len(arities)} disconnected pieces")
        (survivor,) = arities
        return survivor, contributions

    @property
    def input_count(self) -> int:
        return len(self.input_arities)

    @property
    def output_arity(self) -> int:
        return sum(self.input_arities) - 2 * len(self.steps)

    @property
    def output_slot(self) -> int:
        return self._simulate()[0]

    def rotation_contributions(self) -> List[int]:
        return self._simulate()[1]

    def output_pattern(self) -> Optional[Pattern]:
        if self.patterns is None:
            return None
        current: Dict[int, List[bool]] = {i: list(p) for i, p in enumerate(self.patterns)}
        for step in self.steps:
            if isinstance(step, Unary):
                current[step.slot] = curl_survivors(current[step.slot], step.position)
            else:
                current[step.first] = join_survivors(
                    current[step.first], step.first_point,
                    current[step.second], step.second_point,
                )
                del current[step.second]
        (pattern,) = current.values()
        return tuple(pattern)

    def __len__(self) -> int:
        return len(self.steps)


def operator_rotation_number(word: OperatorWord) -> int:
    """``R_w``: curls count ``0`` (positive) or ``-1`` (negative), joins ``-1``.

    Convention: a negative curl on an arity-2 input, which closes the input
    up completely, counts ``-2``; on larger inputs it counts ``-1``.
    ``compile_word`` stores the total as ``Wiring.rotation`` and
    ``expected_constant`` subtracts it from the constants of the inputs.
    """
    return sum(word.rotation_contributions())


def alternating_pattern(arity: int, first_is_head: bool = False) -> Pattern:
    return tuple((index % 2 == 1) != first_is_head for index in range(arity))


def curl_sign(pattern: Optional[Pattern], position: int) -> int:
    if pattern is None:
        return 0
    return 1 if pattern[position] else -1


def unary(arity: int, position: int, sign: int, pattern: Optional[Pattern] = None) -> OperatorWord:
    patterns = None if pattern is None else (pattern,)
    return OperatorWord((arity,), (Unary(0, position, sign),), patterns)


def binary(
    first_arity: int,
    first_point: int,
    second_arity: int,
    second_point: int,
    patterns: Optional[Tuple[Pattern, Pattern]] = None,
) -> OperatorWord:
    return OperatorWord(
        (first_arity, second_arity), (Binary(0, first_point, 1, second_point),), patterns
    )


def identity_word(arity: int, pattern: Optional[Pattern] = None) -> OperatorWord:
    return OperatorWord((arity,), (), None if pattern is None else (pattern,))


def then(first: OperatorWord, second: OperatorWord) -> OperatorWord:
    """Feed the output of ``first`` into the only input of ``second``."""
    if second.input_count != 1:
        raise ArityMismatch("Only single-input words can follow another word")
    if second.input_arities[0] != first.output_arity:
        raise ArityMismatch(
            f"Output arity {first.output_arity} does not match input arity "
            f"{second.input_arities[0]}"
        )
    slot = first.output_slot
    moved: List[BasicOperator] = []
    for step in second.steps:
        if isinstance(step, Unary):
            moved.append(Unary(slot, step.position, step.sign))
        else:
            raise ArityMismatch("A single-input word cannot contain joins")
    return OperatorWord(first.input_arities, first.steps + tuple(moved), first.patterns)


def enumerate_partial_closures(
    arity: int, max_length: int, pattern: Optional[Pattern] = None
) -> Iterator[OperatorWord]:
    """All words of at most ``max_length`` curls on one input of ``arity`` points.

    The sign of every curl is forced by the head pattern; the default pattern
    has tails at even points.
    """
    if pattern is None:
        pattern = alternating_pattern(arity)
    if len(pattern) != arity:
        raise ArityMismatch(f"Pattern of length {len(pattern)} for arity {arity}")

    def extend(
        steps: Tuple[Unary, ...], current: Pattern
    ) -> Iterator[Tuple[Unary, ...]]:
        yield steps
        if len(steps) >= max_length or len(current) < 2:
            return
        for position in range(len(current)):
            step = Unary(0, position, curl_sign(current, position))
            yield from extend(steps + (step,), tuple(curl_survivors(current, position)))

    for steps in extend((), tuple(pattern)):
        yield OperatorWord((arity,), steps, (tuple(pattern),))


def closure_word(arity: int, pattern: Optional[Pattern] = None) -> OperatorWord:
    """Close every head ``h`` to ``h + 1`` by positive curls."""
    if pattern is None:
        pattern = alternating_pattern(arity)
    current = list(pattern)
    steps: List[Unary] = []
    while current:
        position = current.index(True)
        steps.append(Unary(0, position, 1))
        current = curl_survivors(current, position)
    return OperatorWord((arity,), tuple(steps), (tuple(pattern),))


__all__ = [
    "Pattern",
    "OperatorKind",
    "Unary",
    "Binary",
    "BasicOperator",
    "OperatorWord",
    "curl_survivors",
    "join_survivors",
    "operator_rotation_number",
    "alternating_pattern",
    "curl_sign",
    "unary",
    "binary",
    "identity_word",
    "then",
    "enumerate_partial_closures",
    "closure_word",
]
