import random

import pytest

from khovanizer.backend.cobordism import (
    RATIONALS,
    GradedSmoothing,
    MatMorphism,
    MatObject,
    identity_cobordism,
    make_smoothing,
    saddle,
)
from khovanizer.backend.complex import (
    ChainComplex,
    ComplexError,
    InhomogeneousDifferential,
    InvalidPDC,
    NoSuchLoop,
    NotAComplex,
    PerturbedDoubleComplex,
    complex_as_pdc,
    complex_from_document,
    complex_to_document,
    deloop,
    deloop_in_pdc,
    dg_reduce,
    euler_class,
    find_invertible_entry,
    gaussian_eliminate,
    is_reduced,
    is_valid,
    object_multiset,
    reduce_column,
    relation_failures,
    relations_hold,
    shift,
    tensor,
    total_complex,
    validate,
    validate_pdc,
    vertical_gauss_eliminate,
)
from khovanizer.backend.planar import apply_as_pdc
from khovanizer.backend.tangle import (
    BadIncidence,
    assemble,
    crossing_complex,
    crossing_order,
    is_legal,
    join_attachment,
    loop_complex,
    parse_pd,
    sub_tangle,
)

ZERO = make_smoothing([(0, 1), (2, 3)])
ONE = make_smoothing([(0, 3), (2, 1)])


def two_term(value, ring=None):
    """``ZERO{0} -> ZERO{0}`` in degrees 0 and 1 with ``value * id``."""
    source = MatObject((GradedSmoothing(ZERO, 0),))
    target = MatObject((GradedSmoothing(ZERO, 0),))
    matrix = MatMorphism.build(source, target, [(0, 0, identity_cobordism(ZERO).scale(value))])
    complex_ = ChainComplex(0, (source, target), (matrix,))
    return complex_ if ring is None else complex_.with_ring(ring)


@pytest.mark.parametrize("sign", [1, -1])
@pytest.mark.parametrize("oriented", [True, False])
def test_crossing_complexes_are_valid(sign, oriented):
    complex_ = crossing_complex(sign, oriented)
    validate(complex_)
    assert is_reduced(complex_)
    assert complex_.min_degree == (0 if sign > 0 else -1)


def test_inhomogeneous_differential_is_reported():
    source = MatObject((GradedSmoothing(ZERO, 0),))
    target = MatObject((GradedSmoothing(ONE, 0),))
    matrix = MatMorphism.build(source, target, [(0, 0, saddle(ZERO, ONE))])
    complex_ = ChainComplex(0, (source, target), (matrix,))
    with pytest.raises(InhomogeneousDifferential):
        validate(complex_)
    assert not is_valid(complex_)


def test_saddle_twice_is_not_a_complex():
    objects = (
        MatObject((GradedSmoothing(ZERO, 0),)),
        MatObject((GradedSmoothing(ONE, 1),)),
        MatObject((GradedSmoothing(ZERO, 2),)),
    )
    differentials = (
        MatMorphism.build(objects[0], objects[1], [(0, 0, saddle(ZERO, ONE))]),
        MatMorphism.build(objects[1], objects[2], [(0, 0, saddle(ONE, ZERO))]),
    )
    with pytest.raises(NotAComplex):
        validate(ChainComplex(0, objects, differentials))


def test_differential_count_must_match():
    with pytest.raises(ValueError):
        ChainComplex(0, (MatObject(), MatObject()), ())


def test_delooping_one_circle():
    reduced, report = dg_reduce(loop_complex(1))
    assert report.deloop_count == 1
    assert report.elimination_count == 0
    assert sorted(g.q_shift for _, _, g in reduced.entries()) == [-1, 1]
    assert reduced.loop_count() == 0


def test_deloop_single_entry():
    delooped = deloop(loop_complex(2), 0, 0, loop=1)
    assert delooped.size == 2
    assert delooped.loop_count() == 2
    with pytest.raises(NoSuchLoop):
        deloop(loop_complex(1), 0, 3)


def test_identity_cancels():
    complex_ = two_term(1)
    assert find_invertible_entry(complex_) == (0, 0, 0)
    assert gaussian_eliminate(complex_, 0, 0, 0).is_empty()
    reduced, report = dg_reduce(complex_)
    assert reduced.is_empty()
    assert report.elimination_count == 1


def test_twice_identity_cancels_only_over_the_rationals():
    assert find_invertible_entry(two_term(2)) is None
    assert dg_reduce(two_term(2))[0].size == 2
    assert find_invertible_entry(two_term(2, RATIONALS)) == (0, 0, 0)
    assert dg_reduce(two_term(2, RATIONALS))[0].is_empty()


def test_random_reduction_order_gives_the_same_objects():
    canonical, _ = dg_reduce(loop_complex(3))
    for seed in range(5):
        shuffled, _ = dg_reduce(loop_complex(3), random.Random(seed), validate_steps=True)
        assert object_multiset(shuffled) == object_multiset(canonical)


def test_tensor_with_a_circle():
    product = tensor(crossing_complex(-1), loop_complex(1))
    validate(product)
    assert product.size == 4
    assert product.boundary_count == 4
    with pytest.raises(ComplexError):
        tensor(crossing_complex(-1), crossing_complex(1))


def test_shift_and_euler_class():
    complex_ = crossing_complex(-1)
    moved = shift(complex_, 2)
    assert moved.min_degree == 1
    assert list(moved.degrees()) == [1, 2]
    signed = euler_class(complex_)
    assert signed[GradedSmoothing(ZERO, -2)] == -1
    assert signed[GradedSmoothing(ONE, -1)] == 1


def test_document_round_trip_of_a_crossing():
    complex_ = crossing_complex(1)
    assert complex_from_document(complex_to_document(complex_)) == complex_


def test_document_version_is_checked():
    document = complex_to_document(crossing_complex(1))
    document["version"] = 99
    with pytest.raises(ComplexError):
        complex_from_document(document)


def test_pdc_arrows_must_fit_the_grid():
    pdc = PerturbedDoubleComplex()
    a = pdc.add(0, 0, GradedSmoothing(ZERO, 0))
    b = pdc.add(0, 1, GradedSmoothing(ONE, 1))
    c = pdc.add(3, 0, GradedSmoothing(ONE, 1))
    pdc.set_cell(a, b, saddle(ZERO, ONE))
    with pytest.raises(InvalidPDC):
        pdc.set_cell(a, c, saddle(ZERO, ONE))


def test_pdc_relations_detect_a_bad_vertical_square():
    pdc = PerturbedDoubleComplex()
    a = pdc.add(0, 0, GradedSmoothing(ZERO, 0))
    b = pdc.add(1, 0, GradedSmoothing(ONE, 1))
    c = pdc.add(2, 0, GradedSmoothing(ZERO, 2))
    pdc.set_cell(a, b, saddle(ZERO, ONE))
    pdc.set_cell(b, c, saddle(ONE, ZERO))
    assert relation_failures(pdc) == [(0, a, c)]
    assert not relations_hold(pdc, 0)
    assert relations_hold(pdc, 1)
    with pytest.raises(InvalidPDC):
        validate_pdc(pdc)


def _pdc_with_vertical_identity():
    pdc = PerturbedDoubleComplex()
    a = pdc.add(0, 0, GradedSmoothing(ZERO, 0))
    b = pdc.add(1, 0, GradedSmoothing(ZERO, 0))
    c = pdc.add(0, 1, GradedSmoothing(ONE, 1))
    pdc.set_cell(a, b, identity_cobordism(ZERO))
    pdc.set_cell(a, c, saddle(ZERO, ONE))
    return pdc, c


def test_vertical_elimination_keeps_the_other_column():
    pdc, survivor = _pdc_with_vertical_identity()
    reduced = vertical_gauss_eliminate(pdc, 0, (0, 0, 0))
    assert len(pdc) == 3
    assert reduced.keys() == [survivor]
    assert relation_failures(reduced) == []
    assert total_complex(reduced).min_degree == 1


def test_reduce_column_only_touches_its_column():
    pdc, survivor = _pdc_with_vertical_identity()
    looped = pdc.add(5, 1, GradedSmoothing(make_smoothing([(0, 1), (2, 3)], [1]), 0))
    report = reduce_column(pdc, 0)
    assert report.elimination_count == 1
    assert report.deloop_count == 0
    assert set(pdc.keys()) == {survivor, looped}


def test_deloop_inside_a_pdc_stays_on_its_node():
    pdc = PerturbedDoubleComplex()
    pdc.add(0, 0, GradedSmoothing(make_smoothing([(0, 1), (2, 3)], [1]), 0))
    delooped = deloop_in_pdc(pdc, (0, 0, 0))
    assert delooped.nodes() == [(0, 0)]
    assert sorted(delooped.objects[k].q_shift for k in delooped.node(0, 0)) == [-1, 1]
    with pytest.raises(NoSuchLoop):
        deloop_in_pdc(pdc, (0, 0, 4))


def test_spreading_a_complex_over_columns():
    complex_ = crossing_complex(-1)
    r = complex_.min_degree
    spread = complex_as_pdc(complex_, {(r, 0): 0, (r + 1, 0): 2})
    assert spread.span() == 2
    assert len(spread.maps(2)) == 1
    assert relation_failures(spread) == []
    assert total_complex(spread).size == complex_.size
    with pytest.raises(InvalidPDC):
        complex_as_pdc(complex_, {(r, 0): 1, (r + 1, 0): 0})


def test_delooping_a_glued_double_complex_keeps_its_relations():
    diagram = parse_pd("X(3,4,1,2) X(5,6,7,3) X(8,5,2,1) X(9,10,6,8)")
    order = crossing_order(diagram)
    delooped = 0
    for cut in range(1, len(order)):
        try:
            first = assemble(sub_tangle(diagram, order[:cut]), RATIONALS)
            second = assemble(sub_tangle(diagram, order[cut:]), RATIONALS)
        except BadIncidence:
            continue
        patterns = None if first.pattern is None or second.pattern is None else (first.pattern, second.pattern)
        attachment = join_attachment(first.boundary, second.boundary, patterns)
        if not is_legal(attachment.boundary):
            continue
        pdc = apply_as_pdc(attachment.word, first.complex, second.complex)
        assert relation_failures(pdc) == []
        for key in pdc.keys():
            if not pdc.objects[key].smoothing.loop_count:
                continue
            p, q = pdc.node_of(key)
            assert relation_failures(deloop_in_pdc(pdc, (p, q, pdc.node(p, q).index(key)))) == []
            delooped += 1
    assert delooped > 0
