import random
from dataclasses import replace
from pathlib import Path

import pytest

from khovanizer.backend.cobordism import INTEGERS, RATIONALS
from khovanizer.backend.complex import dg_reduce
from khovanizer.backend.diagonal import diagonality
from khovanizer.backend.homology import HomologyTable, homology_table, tensor_tables, two_line_check
from khovanizer.backend.homology.table import q
from khovanizer.backend.tangle import (
    CORPUS_ENV,
    BadIncidence,
    NotAlternating,
    NotClosed,
    ParseError,
    Split,
    TangleDiagram,
    assemble,
    assign_gravity,
    braid_closure,
    check_planar,
    components,
    compose_pieces,
    crossing_order,
    crossing_signs,
    cube_oracle,
    find_entry,
    is_alternating,
    is_split,
    jones_polynomial,
    khovanov_homology,
    load_diagram,
    load_index,
    make_diagram,
    parse_pd,
    random_alternating_tangle,
    read_diagram,
    reidemeister_pairs,
    sub_tangle,
)

TREFOIL_LEFT = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
TREFOIL_RIGHT = "X(4,2,5,1) X(6,4,1,3) X(2,6,3,5)"
HOPF = "X(1,4,2,3) X(3,2,4,1)"
FIGURE8_BRAID = "X(2,5,4,1) X(5,3,7,6) X(6,9,1,4) X(9,7,3,2)"
UNKNOT = HomologyTable.from_ranks({(0, 1): 1, (0, -1): 1}, RATIONALS)


def expected_table(name: str) -> HomologyTable:
    entry = find_entry(name)
    assert entry is not None
    ranks = {(i, j): rank for i, j, rank in entry.expected["homology"]}
    return HomologyTable.from_ranks(ranks, RATIONALS)


def test_parse_pd_text_and_wrappers():
    plain = parse_pd(TREFOIL_LEFT)
    wrapped = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]")
    assert plain == wrapped
    assert plain.crossing_count == 3
    assert plain.is_link
    assert parse_pd("Loop(1) Loop(2)").loops == 2


def test_parse_pd_json_keeps_the_boundary_order():
    diagram = parse_pd('{"crossings": [[1, 4, 3, 2]], "open_edges": [1, 4, 3, 2]}')
    assert diagram.open_edges == (1, 4, 3, 2)
    assert not diagram.is_link
    inferred = parse_pd("X(1,2,3,4)")
    assert inferred.open_edges == (1, 2, 3, 4)
    assert not inferred.boundary_ordered


@pytest.mark.parametrize(
    "source",
    ["", "X(1,2,3)", "Y(1,2,3,4)", "X(1,2,a,4)", "{bad json", '{"crossings": [[1, 2, 3]]}'],
)
def test_parse_errors(source):
    with pytest.raises(ParseError):
        parse_pd(source)


def test_bad_incidences():
    with pytest.raises(BadIncidence):
        parse_pd("X(1,1,1,2)")
    with pytest.raises(BadIncidence):
        make_diagram([[0, 1, 2, 3]])
    with pytest.raises(BadIncidence):
        make_diagram([[1, 2, 3, 4]], [1, 2, 3])
    with pytest.raises(BadIncidence) as info:
        make_diagram([[1, 2, 3, 4]], [1, 2, 3, 5])
    assert info.value.label == 4


def test_virtual_trefoil_is_not_planar():
    diagram = parse_pd("X(1,4,2,3) X(3,6,4,5) X(5,2,6,1)")
    with pytest.raises(BadIncidence):
        check_planar(diagram)
    with pytest.raises(BadIncidence):
        assemble(diagram)


def test_split_diagrams():
    assert is_split(parse_pd("Loop(1) Loop(2)"))
    assert is_split(parse_pd(HOPF + " Loop(5)"))
    assert not is_split(parse_pd(TREFOIL_LEFT))
    two_hopfs = parse_pd(HOPF + " X(5,8,6,7) X(7,6,8,5)")
    assert components(two_hopfs) == [(0, 1), (2, 3)]
    assert sub_tangle(two_hopfs, [2]).open_edges == (5, 6, 7, 8)


@pytest.mark.parametrize(
    "source, signs",
    [(TREFOIL_LEFT, (-1, -1, -1)), (TREFOIL_RIGHT, (1, 1, 1)), (HOPF, (-1, -1))],
)
def test_crossing_signs(source, signs):
    assert crossing_signs(parse_pd(source)).signs == signs


def test_standard_crossing_signs():
    assert crossing_signs(parse_pd("X(1,2,3,4)")).signs == (-1,)
    assert crossing_signs(parse_pd("X(1,4,3,2)")).signs == (1,)


def test_alternating_detection():
    assert is_alternating(parse_pd(TREFOIL_LEFT))
    assert is_alternating(braid_closure([1, -2, 1, -2]))
    mixed = braid_closure([1, 1, -1])
    assert not is_alternating(mixed)
    with pytest.raises(NotAlternating):
        assemble(mixed, require_alternating=True)


def test_gravity_points_from_over_to_under():
    gravity = assign_gravity(parse_pd(TREFOIL_LEFT))
    assert len(gravity.arrows) == 6
    assert gravity.points_into(1) == (0, 0)
    assert gravity.boundary_heads == ()
    assert assign_gravity(parse_pd("X(1,2,3,4)")).boundary_heads.count(True) == 2
    with pytest.raises(NotAlternating):
        assign_gravity(braid_closure([1, 1, -1]))
    with pytest.raises(Split):
        assign_gravity(parse_pd(HOPF + " Loop(5)"))


def test_crossing_order_attaches_every_crossing_once():
    assert sorted(crossing_order(parse_pd(TREFOIL_LEFT))) == [0, 1, 2]
    two_hopfs = parse_pd(HOPF + " X(5,8,6,7) X(7,6,8,5)")
    for rng in (None, random.Random(3)):
        order = crossing_order(two_hopfs, rng)
        assert set(order[:2]) == {0, 1}
        assert set(order[2:]) == {2, 3}


def test_pinned_signs_orient_strands_that_are_never_under():
    crossing = parse_pd("X(1,2,3,4)")
    assert crossing_signs(replace(crossing, signs=(1,))).signs == (1,)
    assert crossing_signs(replace(crossing, signs=(-1,))).signs == (-1,)
    with pytest.raises(BadIncidence):
        crossing_signs(replace(parse_pd(TREFOIL_LEFT), signs=(1, 1, 1)))
    with pytest.raises(BadIncidence):
        TangleDiagram(((1, 2, 3, 4),), (1, 2, 3, 4), signs=(2,))


def test_sub_tangles_keep_the_signs_of_the_whole():
    diagram = parse_pd(FIGURE8_BRAID)
    whole = crossing_signs(diagram).signs
    first, second = sub_tangle(diagram, [3]), sub_tangle(diagram, [0, 1, 2])
    assert crossing_signs(first).signs == (whole[3],)
    assert crossing_signs(second).signs == whole[:3]
    composite = compose_pieces(assemble(first, RATIONALS), assemble(second, RATIONALS))
    reduced, _ = dg_reduce(composite.complex)
    assert homology_table(reduced, RATIONALS) == khovanov_homology(diagram, RATIONALS)


def test_jones_polynomial_of_the_right_trefoil():
    assert jones_polynomial(parse_pd(TREFOIL_RIGHT)) == q + q**3 + q**5 - q**9
    assert jones_polynomial(parse_pd("Loop(1)")) == q + 1 / q


@pytest.mark.parametrize(
    "name",
    ["unknot", "unlink", "kink-positive", "kink-negative", "hopf", "trefoil-left", "trefoil-right", "figure8", "borromean"],
)
def test_corpus_tables(name):
    diagram = load_diagram(find_entry(name))
    assert khovanov_homology(diagram, RATIONALS) == expected_table(name)


@pytest.mark.parametrize("name", ["hopf", "trefoil-left", "trefoil-right", "figure8", "kink-positive"])
def test_cube_oracle_agrees_over_the_integers(name):
    diagram = load_diagram(find_entry(name))
    assert khovanov_homology(diagram, INTEGERS) == cube_oracle(diagram, INTEGERS)


@pytest.mark.parametrize("source, bidegree", [(TREFOIL_RIGHT, (3, 7)), (TREFOIL_LEFT, (-2, -7))])
def test_trefoils_carry_two_torsion(source, bidegree):
    table = khovanov_homology(parse_pd(source), INTEGERS)
    assert table.torsion(*bidegree) == (2,)
    assert table.rationalised() == khovanov_homology(parse_pd(source), RATIONALS)


def test_oracle_rejects_tangles():
    with pytest.raises(NotClosed):
        cube_oracle(parse_pd("X(1,2,3,4)"))


def test_non_alternating_unknot():
    assert khovanov_homology(braid_closure([1, 1, -1]), RATIONALS) == UNKNOT


def test_split_link_is_a_product():
    table = khovanov_homology(parse_pd(HOPF + " Loop(5)"), RATIONALS)
    assert table == tensor_tables(expected_table("hopf"), UNKNOT)


def test_braid_closures():
    assert khovanov_homology(braid_closure([1, 1, 1]), RATIONALS) == expected_table("trefoil-right")
    assert braid_closure([1], strands=3).loops == 1
    with pytest.raises(ValueError):
        braid_closure([0])
    with pytest.raises(ValueError):
        braid_closure([3], strands=3)


@pytest.mark.parametrize("name", ["negative-crossing", "positive-crossing"])
def test_one_crossing_tangles(name):
    diagram = read_diagram(name)
    result = assemble(diagram)
    assert result.boundary == diagram.open_edges
    assert result.oriented
    assert diagonality(result.complex).is_diagonal
    assert khovanov_homology(diagram, RATIONALS).total_rank() == 2


def test_twist_tangle_is_diagonal():
    result = assemble(read_diagram("twist"))
    assert result.complex.boundary_count == 4
    assert diagonality(result.complex).is_diagonal


def test_random_alternating_tangles_are_diagonal():
    for seed in range(8):
        diagram = random_alternating_tangle(random.Random(seed), max_crossings=4, max_boundary=6)
        assert is_alternating(diagram)
        assert len(components(diagram)) == 1
        assert 2 <= len(diagram.open_edges) <= 6
        verdict = diagonality(assemble(diagram, require_alternating=True).complex)
        assert verdict.is_diagonal, diagram


def test_random_assembly_order_gives_the_same_homology():
    diagram = parse_pd(TREFOIL_LEFT)
    canonical = khovanov_homology(diagram, RATIONALS)
    for seed in range(3):
        reduced = assemble(diagram, RATIONALS, rng=random.Random(seed)).complex
        assert homology_table(reduced, RATIONALS) == canonical


def test_bundled_corpus_index():
    names = [entry.name for entry in load_index()]
    assert "borromean" in names
    assert len(names) == len(set(names))
    moves = {move for move, _, _ in reidemeister_pairs()}
    assert moves == {"R1", "R2", "R3", "isotopy"}
    assert find_entry("no-such-entry") is None
    with pytest.raises(ParseError):
        read_diagram("omega3")


def test_corpus_directory_from_the_environment(tmp_path: Path, monkeypatch: pytest.MonkeyPatch):
    (tmp_path / "loop.pd").write_text("Loop(1)\n", encoding="utf-8")
    (tmp_path / "index.yaml").write_text(
        "entries:\n  - name: custom\n    file: loop.pd\n    expected:\n      homology: [[0, 1, 1], [0, -1, 1]]\n",
        encoding="utf-8",
    )
    monkeypatch.setenv(CORPUS_ENV, str(tmp_path))
    assert [entry.name for entry in load_index()] == ["custom"]
    assert read_diagram("custom").loops == 1
    monkeypatch.setenv(CORPUS_ENV, str(tmp_path / "missing"))
    with pytest.raises(ParseError):
        load_index()


@pytest.mark.slow
def test_twelve_crossing_knot_is_two_line():
    diagram = load_diagram(find_entry("knot-12"))
    assert diagram.crossing_count == 12
    assert two_line_check(khovanov_homology(diagram, RATIONALS)) is not None
