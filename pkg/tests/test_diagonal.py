import pytest

from khovanizer.backend.cobordism import GradedSmoothing, MatObject, make_smoothing
from khovanizer.backend.complex import ChainComplex
from khovanizer.backend.diagonal import (
    DiagonalStatus,
    coherent_diagonality,
    diagonality,
    expected_constant,
    single_line_shape,
)
from khovanizer.backend.planar import alternating_pattern, apply_to_complexes, binary, unary
from khovanizer.backend.tangle import NotAlternating, crossing_complex, find_entry, loop_complex
from khovanizer.core.suites import load_complex_entry

ZERO = make_smoothing([(0, 1), (2, 3)])
ONE = make_smoothing([(0, 3), (2, 1)])


@pytest.mark.parametrize("sign, constant", [(-1, -1), (1, -2)])
def test_crossings_are_diagonal(sign, constant):
    verdict = diagonality(crossing_complex(sign))
    assert verdict.is_diagonal
    assert verdict.constant == constant
    assert not verdict.vacuous


def test_empty_complex_is_vacuously_diagonal():
    verdict = diagonality(ChainComplex.empty())
    assert verdict.status is DiagonalStatus.DIAGONAL
    assert verdict.constant == 0
    assert verdict.vacuous


def test_witness_names_two_objects():
    objects = MatObject((GradedSmoothing(ZERO, 0), GradedSmoothing(ONE, 0)))
    verdict = diagonality(ChainComplex(0, (objects,), ()))
    assert verdict.status is DiagonalStatus.NOT_DIAGONAL
    assert set(verdict.witness) == {(0, GradedSmoothing(ZERO, 0)), (0, GradedSmoothing(ONE, 0))}
    values = [entry["value"] for entry in verdict.to_document()["witness"]]
    assert sorted(values) == [-2, -1]


def test_a_single_circle_is_not_diagonal():
    assert diagonality(loop_complex(1)).status is DiagonalStatus.NOT_DIAGONAL
    assert diagonality(loop_complex(1), reduce=False).status is DiagonalStatus.NOT_REDUCED


def test_unoriented_complexes_have_no_rotation_numbers():
    with pytest.raises(NotAlternating):
        diagonality(crossing_complex(-1, oriented=False))


def test_expected_constant_of_a_join():
    assert expected_constant([-1, -1], binary(4, 1, 4, 0)) == -1
    assert expected_constant([-2], unary(4, 1, 1)) == -2


def test_joined_crossings_follow_the_expected_constant():
    glued = apply_to_complexes(binary(4, 1, 4, 0), [crossing_complex(-1), crossing_complex(-1)])
    verdict = diagonality(glued)
    assert verdict.is_diagonal
    assert verdict.constant == expected_constant([-1, -1], binary(4, 1, 4, 0))


@pytest.mark.parametrize("sign", [1, -1])
def test_crossings_are_coherently_diagonal(sign):
    verdict = coherent_diagonality(crossing_complex(sign))
    assert verdict.is_diagonal
    assert verdict.checked == 4


def test_diagonal_complex_that_is_not_coherent():
    complex_ = load_complex_entry(find_entry("omega3"), None)
    flat = diagonality(complex_)
    assert flat.is_diagonal
    assert flat.constant == -1
    verdict = coherent_diagonality(complex_)
    assert verdict.status is DiagonalStatus.NOT_DIAGONAL
    assert verdict.word is not None
    assert verdict.witness is not None


def test_single_line_shape_of_a_closed_crossing():
    pattern = alternating_pattern(4)
    closed = apply_to_complexes(unary(4, 1, 1, pattern), [crossing_complex(-1)])
    assert single_line_shape(closed) == 0
    assert single_line_shape(crossing_complex(-1)) is None
