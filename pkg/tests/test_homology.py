import pytest
import sympy

from khovanizer.backend.cobordism import INTEGERS, RATIONALS
from khovanizer.backend.homology import (
    HomologyError,
    HomologyGroup,
    HomologyTable,
    NotFullyReduced,
    ScalarComplex,
    euler_characteristic,
    homology_table,
    map_invariants,
    poincare_polynomial,
    render_table,
    scalar_complexes,
    smith_homology,
    tensor_tables,
    two_line_check,
)
from khovanizer.backend.homology.table import q, t
from khovanizer.backend.planar import close_to_link
from khovanizer.backend.tangle import crossing_complex

UNKNOT = HomologyTable.from_ranks({(0, 1): 1, (0, -1): 1}, RATIONALS)
HOPF = HomologyTable.from_ranks({(0, 0): 1, (0, -2): 1, (-2, -4): 1, (-2, -6): 1}, RATIONALS)


@pytest.mark.parametrize(
    "matrix, rank, torsion",
    [
        ([[2]], 1, (2,)),
        ([[6]], 1, (2, 3)),
        ([[1, 0], [0, 4]], 2, (4,)),
        ([[2, 4], [1, 2]], 1, ()),
        ([[0, 0]], 0, ()),
    ],
)
def test_integral_map_invariants(matrix, rank, torsion):
    invariants = map_invariants(matrix)
    assert invariants.rank == rank
    assert invariants.torsion == torsion


def test_rational_map_invariants_ignore_torsion():
    invariants = map_invariants([[2]], RATIONALS)
    assert invariants.rank == 1
    assert invariants.torsion == ()


def test_smith_homology_places_torsion_in_the_target_degree():
    complex_ = ScalarComplex({0: 1, 1: 1}, {0: [[2]]})
    assert smith_homology(complex_) == {1: (0, (2,))}
    assert smith_homology(complex_, RATIONALS) == {}


def test_smith_homology_rejects_a_non_complex():
    complex_ = ScalarComplex({0: 1, 1: 1, 2: 1}, {0: [[1]], 1: [[1]]})
    with pytest.raises(ArithmeticError):
        smith_homology(complex_)


def test_unreduced_complex_has_no_table():
    with pytest.raises(NotFullyReduced) as info:
        homology_table(crossing_complex(-1))
    assert info.value.degree == -1


@pytest.mark.parametrize(
    "table, expected",
    [
        (UNKNOT, 0),
        (HOPF, -1),
        (HomologyTable.from_ranks({(0, 1): 1}), 2),
        (HomologyTable.from_ranks({(0, 0): 1, (0, 4): 1}), None),
    ],
)
def test_two_line_check(table, expected):
    assert two_line_check(table) == expected


def test_euler_characteristic_is_the_graded_count():
    assert euler_characteristic(UNKNOT) == q + 1 / q
    assert euler_characteristic(HOPF) == 1 + q**-2 + q**-4 + q**-6


def test_poincare_polynomial_records_both_gradings():
    expected = 1 + q**-2 + t**-2 * q**-4 + t**-2 * q**-6
    assert sympy.expand(poincare_polynomial(HOPF) - expected) == 0
    assert poincare_polynomial(HomologyTable()) == 0


def test_scalar_complexes_split_by_quantum_degree():
    pieces = scalar_complexes(close_to_link(crossing_complex(-1)))
    assert sorted(pieces) == [-1, 1]
    for piece in pieces.values():
        assert piece.dims == {0: 1}
        assert not piece.maps
    with pytest.raises(NotFullyReduced):
        scalar_complexes(crossing_complex(-1))


def test_torsion_does_not_enter_two_line_or_euler():
    table = HomologyTable(INTEGERS, {(0, 1): HomologyGroup(1), (3, 7): HomologyGroup(0, (2,))})
    assert table.total_rank() == 1
    assert table.torsion(3, 7) == (2,)
    assert two_line_check(table) == 2
    assert euler_characteristic(table) == q


def test_split_union_is_a_tensor_product():
    product = tensor_tables(UNKNOT, UNKNOT)
    assert product == HomologyTable.from_ranks({(0, 2): 1, (0, 0): 2, (0, -2): 1}, RATIONALS)
    torsion = HomologyTable(INTEGERS, {(3, 7): HomologyGroup(0, (2,))})
    with pytest.raises(HomologyError):
        tensor_tables(UNKNOT, torsion)


def test_rational_tables_cannot_carry_torsion():
    with pytest.raises(HomologyError):
        HomologyTable(RATIONALS, {(0, 0): HomologyGroup(1, (2,))})


def test_zero_groups_are_dropped():
    table = HomologyTable.from_ranks({(0, 1): 1, (2, 5): 0})
    assert len(table) == 1
    assert table.betti(2, 5) == 0


def test_document_round_trip_keeps_torsion():
    table = HomologyTable(INTEGERS, {(0, 1): HomologyGroup(1), (3, 7): HomologyGroup(0, (2,))})
    document = table.to_document()
    assert document["format"] == "khovanizer.homology"
    assert HomologyTable.from_document(document) == table
    with pytest.raises(HomologyError):
        HomologyTable.from_document({"format": "something-else"})


def test_render_table():
    assert render_table(HomologyTable()) == "(zero)"
    lines = render_table(UNKNOT).splitlines()
    assert lines[0].split() == ["i=0"]
    assert lines[1].split() == ["j=1", "1"]
    assert lines[2].split() == ["j=-1", "1"]
    torsion = HomologyTable(INTEGERS, {(3, 7): HomologyGroup(1, (2,))})
    assert "1+Z2" in render_table(torsion)
