import random
from fractions import Fraction

import pytest

from khovanizer.backend.cobordism import (
    EMPTY,
    INTEGERS,
    RATIONALS,
    BoundaryMismatch,
    CobLin,
    Component,
    CrossingMatching,
    DimensionMismatch,
    GradedSmoothing,
    MatMorphism,
    MatObject,
    NonAlternating,
    NotInvertible,
    RawComponent,
    ReducedCobordism,
    cap,
    circle_count,
    closure_cycles,
    compose_cob,
    connected_cobordism,
    cup,
    degree,
    evaluate_closed,
    ground_ring,
    identity_cobordism,
    make_smoothing,
    mat_compose,
    mat_identity,
    neck_cut,
    normalise_component,
    reduce_surface,
    rotation_number,
    saddle,
    shifted_rotation_number,
    split_loops,
    standard_closure,
)

ZERO = make_smoothing([(0, 1), (2, 3)])
ONE = make_smoothing([(0, 3), (2, 1)])


def test_crossing_arcs_are_rejected():
    with pytest.raises(CrossingMatching):
        make_smoothing([(0, 2), (1, 3)])


def test_adjacent_heads_are_rejected():
    with pytest.raises(NonAlternating):
        make_smoothing([(0, 1), (3, 2)])


def test_arc_count_must_match_boundary():
    with pytest.raises(CrossingMatching):
        make_smoothing([(0, 1)], boundary_count=4)


def test_rotation_numbers_of_crossing_smoothings():
    assert rotation_number(ZERO) == 1
    assert rotation_number(ONE) == 2
    assert len(closure_cycles(ONE)) == 2


def test_loops_contribute_their_signs():
    smoothing = make_smoothing([(0, 1), (2, 3)], loops=[1, 1, -1])
    assert rotation_number(smoothing) == 2
    assert shifted_rotation_number(GradedSmoothing(smoothing, -3)) == -1


def test_loop_listing_order_is_irrelevant():
    assert make_smoothing([], [1, -1], boundary_count=0) == make_smoothing([], [-1, 1], boundary_count=0)


@pytest.mark.parametrize(
    "genus, dots, value",
    [(0, 0, 0), (0, 1, 1), (1, 0, 2), (1, 1, 0), (2, 0, 0)],
)
def test_closed_surface_values(genus, dots, value):
    assert evaluate_closed(genus, dots) == value


def test_open_component_normal_form():
    assert normalise_component(0, 0) == (1, False)
    assert normalise_component(0, 1) == (1, True)
    assert normalise_component(1, 0) == (2, True)
    assert normalise_component(0, 2) is None


def test_dotted_sphere_is_one_and_sphere_vanishes():
    birth = cup(EMPTY)
    circle = birth.top
    assert compose_cob(birth, cap(circle, 0, dotted=True)).scalar() == 1
    assert compose_cob(birth, cap(circle, 0)).is_zero()


def test_identity_is_neutral_for_composition():
    s = saddle(ZERO, ONE)
    assert compose_cob(identity_cobordism(ZERO), s) == s
    assert compose_cob(s, identity_cobordism(ONE)) == s
    assert identity_cobordism(ZERO).invertible_unit() == 1
    assert s.invertible_unit() is None


def test_saddle_there_and_back_is_a_tube():
    there_and_back = compose_cob(saddle(ZERO, ONE), saddle(ONE, ZERO))
    assert len(there_and_back) == 1
    cobordism, coefficient = there_and_back.terms[0]
    assert coefficient == 1
    assert cobordism.components == (Component((0, 1), (0, 1)),)


def test_degree_is_additive_under_composition():
    s = connected_cobordism(ZERO, ONE)
    assert degree(s) == -1
    (composite, _), = compose_cob(saddle(ZERO, ONE), saddle(ONE, ZERO)).terms
    assert degree(composite) == 2 * degree(s)


def test_linear_combinations_collect_terms():
    s = saddle(ZERO, ONE)
    assert s + s == s.scale(2)
    assert (s - s).is_zero()
    with pytest.raises(BoundaryMismatch):
        _ = s + identity_cobordism(ZERO)


def test_random_move_order_agrees_with_canonical_order():
    surface = [RawComponent((0,), (0,), genus=1), RawComponent((), (), dots=1)]
    canonical = reduce_surface(surface)
    assert canonical == (2, (Component((0,), (0,), True),))
    for seed in range(10):
        assert reduce_surface(surface, random.Random(seed)) == canonical


def test_handle_with_a_dot_vanishes():
    assert reduce_surface([RawComponent((0,), (0,), genus=1, dots=1)]) is None


def test_matrix_shapes_are_checked():
    source = MatObject((GradedSmoothing(ZERO, 0),))
    target = MatObject((GradedSmoothing(ONE, 1), GradedSmoothing(ZERO, 0)))
    with pytest.raises(DimensionMismatch):
        MatMorphism.build(source, target, [(2, 0, saddle(ZERO, ONE))])
    with pytest.raises(BoundaryMismatch):
        MatMorphism.build(source, target, [(1, 0, saddle(ZERO, ONE))])
    matrix = MatMorphism.build(source, target, [(0, 0, saddle(ZERO, ONE))])
    assert mat_compose(matrix, mat_identity(source)) == matrix
    with pytest.raises(DimensionMismatch):
        mat_compose(matrix, matrix)


def test_objects_cannot_mix_boundary_counts():
    with pytest.raises(BoundaryMismatch):
        MatObject((GradedSmoothing(ZERO, 0), GradedSmoothing(EMPTY, 0)))


def test_ground_rings():
    assert ground_ring("Q") == RATIONALS
    assert ground_ring("integers") == INTEGERS
    with pytest.raises(ValueError):
        ground_ring("gf2")
    assert RATIONALS.inverse(2) == Fraction(1, 2)
    assert RATIONALS.coerce("4/2") == 2
    with pytest.raises(NotInvertible):
        INTEGERS.inverse(2)


def test_unit_multiple_of_identity():
    assert CobLin.single(identity_cobordism(ONE).terms[0][0], -1).invertible_unit() == -1


def test_neck_cut_trades_a_handle_for_a_dot():
    factor, cut = neck_cut(RawComponent((0,), (1,), genus=2))
    assert factor == 2
    assert (cut.genus, cut.dots) == (1, 1)
    with pytest.raises(ValueError):
        neck_cut(RawComponent((0,), (1,)))


def test_standard_closure_keeps_the_rotation_number():
    assert standard_closure(ZERO) == make_smoothing([], [1], boundary_count=0)
    assert standard_closure(ONE) == make_smoothing([], [1, 1], boundary_count=0)
    looped = make_smoothing([(0, 1), (2, 3)], loops=[-1])
    closed = standard_closure(looped)
    assert closed == make_smoothing([], [-1, 1], boundary_count=0)
    assert rotation_number(closed) == rotation_number(looped) == 0
    assert standard_closure(closed) == closed


def test_circle_count_follows_arcs_around_the_boundary():
    assert circle_count(ZERO, ONE, [0, 1], [0, 1]) == 1
    assert circle_count(ZERO, ZERO, [0], [0]) == 1
    assert circle_count(ZERO, ZERO, [0, 1], [0, 1]) == 2
    looped = make_smoothing([(0, 1), (2, 3)], loops=[1])
    assert circle_count(looped, ZERO, [0, 2], [0]) == 2


def _cob(bottom, top, *components):
    return ReducedCobordism(bottom, top, tuple(sorted(components)))


def test_loops_are_split_off_by_neck_cutting():
    looped = make_smoothing([(0, 1), (2, 3)], loops=[1])
    arc, loop = Component((0,), (0,)), Component((2,), ())
    merge = _cob(looped, ZERO, arc, Component((1, 2), (1,)))
    assert split_loops(merge) == (
        _cob(looped, ZERO, arc, Component((1,), (1,)), Component((2,), (), True)),
        _cob(looped, ZERO, arc, Component((1,), (1,), True), loop),
    )
    written = CobLin.from_terms(
        looped,
        ZERO,
        [
            (_cob(looped, ZERO, arc, Component((1, 2), (1,), True)), -1),
            (_cob(looped, ZERO, Component((0,), (0,), True), Component((1, 2), (1,))), 1),
        ],
    )
    dotted_arc = Component((0,), (0,), True)
    cut = CobLin.from_terms(
        looped,
        ZERO,
        [
            (_cob(looped, ZERO, arc, Component((1,), (1,), True), Component((2,), (), True)), -1),
            (_cob(looped, ZERO, dotted_arc, Component((1,), (1,), True), loop), 1),
            (_cob(looped, ZERO, dotted_arc, Component((1,), (1,)), Component((2,), (), True)), 1),
        ],
    )
    assert len(written - cut) == 5
    assert (written - cut).is_zero()
    assert written.equals(cut)
    assert not written.equals(CobLin.zero(looped, ZERO))


def test_identity_on_a_loop_is_the_sum_of_its_neck_cuts():
    birth = cup(EMPTY)
    circle = birth.top
    cut = compose_cob(cap(circle, 0, dotted=True), birth) + compose_cob(cap(circle, 0), cup(EMPTY, dotted=True))
    identity = identity_cobordism(circle)
    assert identity.equals(cut)
    assert identity.invertible_unit() == 1
    assert not identity.equals(cut.scale(2))
