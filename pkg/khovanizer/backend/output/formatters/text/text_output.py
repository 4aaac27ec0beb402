"""Human-readable rendering of result documents."""

import logging
from typing import Any, Callable, Dict, List, Optional

from .....utils.color_support import color_support
from ....complex.serialization import COMPLEX_FORMAT
from ....homology.table import HOMOLOGY_FORMAT, HomologyTable, render_table
from ..base import OutputError, write_atomic

logger = logging.getLogger(__name__)

Paint = Callable[[bool, str], str]


def _plain(_: bool, text: str) -> str:
    return text


def _homology_lines(document: Dict[str, Any], paint: Paint) -> List[str]:
    table = HomologyTable.from_document(document)
    return [f"Khovanov homology over {table.ring.name}:", render_table(table)]


def _report_lines(document: Dict[str, Any], paint: Paint) -> List[str]:
    diagram = document["diagram"]
    lines = [
        f"{diagram.get('name') or 'diagram'}: {diagram['crossings']} crossings "
        f"(n+ = {diagram['positive']}, n- = {diagram['negative']}"
        f"{', alternating' if diagram.get('alternating') else ''})",
        *_homology_lines(document["homology"], paint),
        f"Jones polynomial: {document['jones'] or 'n/a (open tangle)'}",
    ]
    if document.get("two_line") is not None:
        lines.append(f"Two-line support: j - 2i = {document['two_line']} +/- 1")
    status = document["oracle"]["status"]
    if status != "off":
        lines.append(f"Cube oracle: {paint(status in ('agrees', 'skipped'), status)}")
        if status == "mismatch" and document["oracle"].get("homology"):
            lines.extend(_homology_lines(document["oracle"]["homology"], paint))
    reduction = document.get("reduction") or {}
    if reduction:
        lines.append(f"Reduction: {reduction['deloops']} deloops, {reduction['eliminations']} eliminations")
    return lines


def _complex_lines(document: Dict[str, Any], paint: Paint) -> List[str]:
    lines = [
        f"Reduced complex over {document['ring']} on {document.get('boundary_count', 0)} boundary points, "
        f"{len(document['objects'])} objects, {len(document['differentials'])} nonzero cells"
    ]
    for entry in document["objects"]:
        arcs = " ".join(f"({a},{b})" for a, b in entry["arcs"]) or "-"
        loops = f" + {len(entry['loops'])} loops" if entry["loops"] else ""
        rotation = "" if entry.get("rotation") is None else f"  R = {entry['rotation']}"
        lines.append(f"  r={entry['degree']:>3}  {arcs}{loops} {{{entry['q']}}}{rotation}")
    return lines


def _verdict_lines(document: Dict[str, Any], paint: Paint) -> List[str]:
    verdict = document["verdict"]
    kind = "coherently diagonal" if document.get("coherent_check") else "diagonal"
    if verdict["status"] == "diagonal":
        suffix = ""
        if verdict.get("closures_checked"):
            suffix = f" ({verdict['closures_checked']} partial closures checked)"
        return [f"{document['input']}: {paint(True, kind)}, C = {verdict['constant']}{suffix}"]
    lines = [f"{document['input']}: {paint(False, 'not ' + kind)}"]
    if verdict.get("word") is not None:
        lines.append(f"  closure {' '.join(verdict['word'])} should give C = {verdict['expected']}")
        if verdict.get("constant") is not None:
            lines.append(f"  but gives C = {verdict['constant']}")
    for witness in verdict.get("witness") or []:
        lines.append(f"  r={witness['degree']}: {witness['object']} has 2r - R = {witness['value']}")
    return lines


def _selftest_lines(document: Dict[str, Any], paint: Paint) -> List[str]:
    width = max((len(suite["name"]) for suite in document["suites"]), default=0)
    lines = [f"Self-test (seed {document['seed']}, profile {document.get('profile', 'default')})"]
    for suite in document["suites"]:
        mark = paint(suite["passed"], "PASS" if suite["passed"] else "FAIL")
        skipped = f", {suite['skipped']} skipped" if suite.get("skipped") else ""
        lines.append(f"  {suite['name'].ljust(width)}  {mark}  {suite['cases']} cases{skipped}")
        lines.extend(f"      {failure}" for failure in suite["failures"][:10])
        if len(suite["failures"]) > 10:
            lines.append(f"      ... {len(suite['failures']) - 10} more")
    return lines


RENDERERS: Dict[str, Callable[[Dict[str, Any], Paint], List[str]]] = {
    HOMOLOGY_FORMAT: _homology_lines,
    COMPLEX_FORMAT: _complex_lines,
    "khovanizer.kh_report": _report_lines,
    "khovanizer.diagonality": _verdict_lines,
    "khovanizer.selftest": _selftest_lines,
}


def render_document(document: Dict[str, Any], color: bool = False) -> str:
    renderer = RENDERERS.get(document.get("format", ""))
    if renderer is None:
        raise OutputError(f"No text rendering for {document.get('format')!r}")
    paint: Paint = color_support.verdict if color else _plain
    return "\n".join(renderer(document, paint)) + "\n"


def output_to_text(
    data: Dict[str, Any],
    output_file: Optional[str] = None,
    config: Optional[Dict[str, Any]] = None,
) -> None:
    """Colours only reach the terminal, never a file."""
    text = render_document(data, color=output_file in (None, "-"))
    try:
        write_atomic(output_file, lambda handle: handle.write(text))
    except OSError as e:
        logger.error("Error writing text output to %s: %s", output_file, e)
        raise
