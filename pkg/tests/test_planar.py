import pytest

from khovanizer.backend.cobordism import (
    RATIONALS,
    build_smoothing,
    identity_cobordism,
    make_smoothing,
    saddle,
)
from khovanizer.backend.complex import is_valid, object_multiset, relation_failures, total_complex
from khovanizer.backend.homology import HomologyTable, homology_table
from khovanizer.backend.planar import (
    ArityMismatch,
    OperatorWord,
    OrientationMismatch,
    Unary,
    alternating_pattern,
    apply_as_pdc,
    apply_to_complexes,
    apply_to_smoothings,
    binary,
    close_to_link,
    closure_word,
    compile_word,
    enumerate_partial_closures,
    identity_word,
    operator_rotation_number,
    planar_coblin,
    then,
    unary,
)
from khovanizer.backend.tangle import crossing_complex, loop_complex

ZERO = make_smoothing([(0, 1), (2, 3)])
ONE = make_smoothing([(0, 3), (2, 1)])
PATTERN = alternating_pattern(4)
UNKNOT = HomologyTable.from_ranks({(0, 1): 1, (0, -1): 1}, RATIONALS)


def test_standard_closure_counts_rotation():
    word = closure_word(4)
    assert apply_to_smoothings(word, [ZERO]) == build_smoothing(0, (), (1,))
    assert apply_to_smoothings(word, [ONE]) == build_smoothing(0, (), (1, 1))


def test_rotation_numbers_of_basic_operators():
    assert operator_rotation_number(closure_word(4)) == 0
    assert operator_rotation_number(unary(4, 0, -1)) == -1
    assert operator_rotation_number(unary(2, 0, -1)) == -2
    assert compile_word(unary(2, 0, -1)).rotation == -2
    assert compile_word(unary(4, 0, -1)).rotation == -1
    assert operator_rotation_number(binary(4, 1, 4, 0)) == -1


def test_curl_sign_must_follow_the_pattern():
    with pytest.raises(OrientationMismatch):
        unary(4, 0, 1, PATTERN)
    unary(4, 1, 1, PATTERN)


def test_join_needs_a_head_and_a_tail():
    with pytest.raises(OrientationMismatch):
        binary(4, 0, 4, 0, (PATTERN, PATTERN))
    word = binary(4, 1, 4, 0, (PATTERN, PATTERN))
    assert word.output_arity == 6
    assert word.output_pattern() == alternating_pattern(6, first_is_head=False)


def test_words_must_be_connected_and_even():
    with pytest.raises(ArityMismatch):
        OperatorWord((4, 4), ())
    with pytest.raises(ArityMismatch):
        OperatorWord((3,), ())
    with pytest.raises(ArityMismatch):
        OperatorWord((4,), (Unary(1, 0, 0),))


def test_then_appends_curls_to_the_output():
    word = then(binary(4, 1, 4, 0), unary(6, 0, 0))
    assert word.output_arity == 4
    assert len(word) == 2
    with pytest.raises(ArityMismatch):
        then(binary(4, 1, 4, 0), unary(4, 0, 0))


def test_partial_closure_enumeration_counts():
    assert sum(1 for _ in enumerate_partial_closures(4, 1)) == 5
    assert sum(1 for _ in enumerate_partial_closures(4, 2)) == 13


def test_identity_word_acts_trivially():
    assert apply_to_smoothings(identity_word(4), [ONE]) == ONE
    assert planar_coblin(identity_word(4), [saddle(ZERO, ONE)]) == saddle(ZERO, ONE)


def test_planar_composition_of_identities_is_an_identity():
    word = binary(4, 1, 4, 0)
    glued = planar_coblin(word, [identity_cobordism(ZERO), identity_cobordism(ONE)])
    assert glued.invertible_unit() == 1


def test_composition_checks_arities():
    with pytest.raises(ArityMismatch):
        apply_to_complexes(closure_word(4), [loop_complex(1)])
    with pytest.raises(ArityMismatch):
        apply_to_smoothings(binary(4, 1, 4, 0), [ZERO])


def test_joined_crossings_form_a_complex():
    word = binary(4, 1, 4, 0)
    glued = apply_to_complexes(word, [crossing_complex(-1), crossing_complex(-1)])
    assert is_valid(glued)
    pdc = apply_as_pdc(word, crossing_complex(-1), crossing_complex(-1))
    assert relation_failures(pdc) == []
    assert object_multiset(total_complex(pdc)) == object_multiset(glued)


def test_closing_a_negative_crossing_gives_the_unknot():
    assert homology_table(close_to_link(crossing_complex(-1)), RATIONALS) == UNKNOT


def test_closing_a_positive_crossing_gives_a_shifted_unknot():
    table = homology_table(close_to_link(crossing_complex(1)), RATIONALS)
    assert table.total_rank() == 2
    assert {i for (i, _), _ in table.items()} == {1}


def test_compiled_words_share_signatures():
    first = compile_word(closure_word(4))
    second = compile_word(OperatorWord((4,), (Unary(0, 3, 1), Unary(0, 0, 1)), (PATTERN,)))
    assert first.signature() == second.signature()
