import json
from pathlib import Path

import pytest
import yaml

from khovanizer.backend.cobordism import INTEGERS, RATIONALS
from khovanizer.backend.complex import ReductionReport, complex_to_document
from khovanizer.backend.diagonal import diagonality
from khovanizer.backend.homology import HomologyGroup, HomologyTable
from khovanizer.backend.output import OutputError, OutputFactory, validate_document
from khovanizer.backend.output.formatters import write_atomic
from khovanizer.backend.output.formatters.text.text_output import render_document
from khovanizer.backend.tangle import crossing_complex, crossing_signs, parse_pd
from khovanizer.core.summary import (
    SuiteResult,
    create_diagonality_report,
    create_kh_report,
    create_selftest_report,
    diagram_summary,
)

TREFOIL = HomologyTable(
    INTEGERS,
    {
        (0, 1): HomologyGroup(1),
        (0, 3): HomologyGroup(1),
        (2, 5): HomologyGroup(1),
        (3, 7): HomologyGroup(0, (2,)),
        (3, 9): HomologyGroup(1),
    },
)


def kh_report(oracle_status: str = "off"):
    diagram = parse_pd("X(4,2,5,1) X(6,4,1,3) X(2,6,3,5)", "trefoil-right")
    summary = diagram_summary(diagram, crossing_signs(diagram), True)
    return create_kh_report(summary, TREFOIL, "q + q**3 + q**5 - q**9", ReductionReport(3, 5), oracle_status)


def test_formats_are_registered():
    assert OutputFactory.formats() == ["json", "text", "yaml"]
    with pytest.raises(ValueError):
        OutputFactory.get_output("xml")


def test_json_writer_round_trips(tmp_path: Path):
    target = tmp_path / "out" / "report.json"
    OutputFactory.get_output("json")(kh_report(), str(target))
    loaded = json.loads(target.read_text(encoding="utf-8"))
    assert loaded == kh_report()
    assert HomologyTable.from_document(loaded["homology"]) == TREFOIL
    assert loaded["two_line"] == 2


def test_compact_json(tmp_path: Path):
    target = tmp_path / "table.json"
    OutputFactory.get_output("json", {"pretty_print": False, "format": "json"})(TREFOIL.to_document(), str(target))
    assert len(target.read_text(encoding="utf-8").strip().splitlines()) == 1


def test_yaml_writer_keeps_key_order(tmp_path: Path):
    target = tmp_path / "report.yaml"
    OutputFactory.get_output("yaml", {"pretty_print": True})(kh_report("agrees"), str(target))
    text = target.read_text(encoding="utf-8")
    assert text.startswith("format: khovanizer.kh_report")
    assert yaml.safe_load(text) == kh_report("agrees")


def test_text_writer_renders_tables_without_colour(tmp_path: Path):
    target = tmp_path / "report.txt"
    OutputFactory.get_output("text")(kh_report("agrees"), str(target))
    text = target.read_text(encoding="utf-8")
    assert "trefoil-right: 3 crossings (n+ = 3, n- = 0, alternating)" in text
    assert "Khovanov homology over integers:" in text
    assert "Z2" in text
    assert "Cube oracle: agrees" in text
    assert "Two-line support: j - 2i = 2 +/- 1" in text
    assert "\x1b[" not in text


def test_text_rendering_of_other_documents():
    complex_text = render_document(complex_to_document(crossing_complex(-1)))
    assert "2 objects, 1 nonzero cells" in complex_text
    verdict = create_diagonality_report("negative-crossing", diagonality(crossing_complex(-1)), False)
    assert render_document(verdict).strip() == "negative-crossing: diagonal, C = -1"
    failing = SuiteResult("two-line", cases=3, failures=["hopf: K = 0, expected -1"])
    report = create_selftest_report([SuiteResult("oracle-equivalence", cases=5), failing], 7, "quick")
    lines = render_document(report).splitlines()
    assert lines[0] == "Self-test (seed 7, profile quick)"
    assert "FAIL" in lines[2]
    assert lines[3].strip() == "hopf: K = 0, expected -1"


def test_writers_validate_documents(tmp_path: Path):
    document = TREFOIL.to_document()
    document["entries"][0]["betti"] = -1
    target = tmp_path / "bad.json"
    with pytest.raises(OutputError):
        OutputFactory.get_output("json")(document, str(target))
    assert not target.exists()
    with pytest.raises(OutputError):
        validate_document({"format": "khovanizer.unknown"})
    with pytest.raises(OutputError):
        render_document({"format": "khovanizer.unknown"})


def test_every_builder_matches_its_schema():
    validate_document(kh_report("mismatch"))
    validate_document(TREFOIL.to_document())
    validate_document(HomologyTable.from_ranks({(0, 1): 1}, RATIONALS).to_document())
    validate_document(complex_to_document(crossing_complex(1)))
    validate_document(create_diagonality_report("x", diagonality(crossing_complex(1)), True))
    validate_document(create_selftest_report([SuiteResult("local-relations", cases=12)], 1, "default"))


def test_selftest_report_fails_when_any_suite_fails():
    report = create_selftest_report([SuiteResult("a", 1), SuiteResult("b", 1, ["boom"])], 3, "default")
    assert report["passed"] is False
    assert [suite["passed"] for suite in report["suites"]] == [True, False]


def test_write_atomic_leaves_nothing_behind_on_failure(tmp_path: Path):
    target = tmp_path / "partial.txt"
    target.write_text("previous", encoding="utf-8")

    def render(handle):
        handle.write("half")
        raise RuntimeError("interrupted")

    with pytest.raises(RuntimeError):
        write_atomic(str(target), render)
    assert target.read_text(encoding="utf-8") == "previous"
    assert [p.name for p in tmp_path.iterdir()] == ["partial.txt"]


def test_stdout_is_the_default_target(capsys):
    OutputFactory.get_output("json")(TREFOIL.to_document())
    assert json.loads(capsys.readouterr().out) == TREFOIL.to_document()
