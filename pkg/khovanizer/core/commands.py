"""The four commands. Each returns the result document and the exit code."""

import json
import logging
from argparse import Namespace
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

from ..backend.cobordism import ground_ring
from ..backend.complex import COMPLEX_FORMAT, ChainComplex, complex_from_document, complex_to_document, dg_reduce
from ..backend.diagonal import coherent_diagonality, diagonality
from ..backend.homology import homology_table
from ..backend.planar import close_to_link
from ..backend.services.config_services import (
    get_computation_settings,
    get_corpus_path,
    get_max_oracle_crossings,
    get_selftest_settings,
    get_thread_count,
)
from ..backend.services.event_service import CancellationToken
from ..backend.tangle import (
    TangleDiagram,
    assemble,
    crossing_signs,
    cube_oracle,
    find_entry,
    is_alternating,
    jones_polynomial,
    load_index,
    read_diagram,
)
from ..backend.tangle.exceptions import ParseError
from ..config.unified import UnifiedConfigManager
from .exit_codes import ExitCode
from .suites import SuiteContext, load_complex_entry, run_suites
from .summary import (
    create_diagonality_report,
    create_kh_report,
    create_selftest_report,
    diagram_summary,
)

logger = logging.getLogger(__name__)

Document = Dict[str, Any]
Loaded = Union[TangleDiagram, ChainComplex]


def _setting(args: Namespace, name: str, default: Any) -> Any:
    """A command-line flag when given, otherwise ``[computation]``."""
    value = getattr(args, name, None)
    if value is not None:
        return value
    return get_computation_settings().get(name, default)


def load_input(source: str, corpus: Optional[Path] = None) -> Loaded:
    """A complex document, a complex corpus entry, or anything ``read_diagram`` accepts."""
    path = Path(source).expanduser()
    if path.is_file() and path.suffix.lower() == ".json":
        try:
            document = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise ParseError(f"{path} is not valid JSON: {e}") from e
        if isinstance(document, dict) and document.get("format") == COMPLEX_FORMAT:
            return complex_from_document(document)
    elif not path.exists():
        entry = find_entry(source, corpus) if "(" not in source and "{" not in source else None
        if entry is not None and entry.kind == "complex":
            return load_complex_entry(entry, corpus)
    return read_diagram(source, corpus)


def _reduced_complex(loaded: Loaded, args: Namespace, token: Optional[CancellationToken]) -> ChainComplex:
    ring = ground_ring(_setting(args, "ring", "z"))
    if isinstance(loaded, ChainComplex):
        reduced, report = dg_reduce(loaded)
        logger.info("Reduced complex: %d deloops, %d eliminations", report.deloop_count, report.elimination_count)
        return reduced
    return assemble(
        loaded,
        ring,
        cancellation_token=token,
        validate_steps=bool(_setting(args, "validate_steps", False)),
    ).complex


def cmd_kh(args: Namespace, token: Optional[CancellationToken] = None) -> Tuple[Document, ExitCode]:
    corpus = get_corpus_path()
    loaded = load_input(args.input, corpus)
    if isinstance(loaded, ChainComplex):
        raise ParseError("compute needs a diagram, not a complex document")
    diagram = loaded
    ring = ground_ring(_setting(args, "ring", "z"))
    assembled = assemble(
        diagram,
        ring,
        cancellation_token=token,
        validate_steps=bool(_setting(args, "validate_steps", False)),
    )
    complex_ = assembled.complex
    if complex_.boundary_count:
        logger.info("Open tangle: reporting the homology of its standard closure")
        complex_ = close_to_link(complex_)
    table = homology_table(complex_, ring)
    jones = str(jones_polynomial(diagram)) if diagram.is_link else None

    exit_code = ExitCode.OK
    oracle_status, oracle_table = "off", None
    if _setting(args, "oracle", False):
        limit = get_max_oracle_crossings()
        if not diagram.is_link or diagram.crossing_count > limit:
            oracle_status = "skipped"
            logger.warning(
                "Cube oracle skipped: %s",
                "open tangle" if not diagram.is_link else f"{diagram.crossing_count} crossings > {limit}",
            )
        else:
            oracle_table = cube_oracle(diagram, ring, token)
            if oracle_table == table:
                oracle_status, oracle_table = "agrees", None
            else:
                oracle_status = "mismatch"
                exit_code = ExitCode.ORACLE_MISMATCH
                logger.error("Cube oracle disagrees with the reduction pipeline")
    summary = diagram_summary(diagram, crossing_signs(diagram), is_alternating(diagram))
    report = create_kh_report(summary, table, jones, assembled.report, oracle_status, oracle_table)
    return report, exit_code


def cmd_reduce(args: Namespace, token: Optional[CancellationToken] = None) -> Tuple[Document, ExitCode]:
    loaded = load_input(args.input, get_corpus_path())
    reduced = _reduced_complex(loaded, args, token)
    logger.info("Reduced complex has %d objects", reduced.size)
    return complex_to_document(reduced), ExitCode.OK


def cmd_check_diagonal(args: Namespace, token: Optional[CancellationToken] = None) -> Tuple[Document, ExitCode]:
    loaded = load_input(args.input, get_corpus_path())
    reduced = _reduced_complex(loaded, args, token)
    if args.coherent:
        verdict = coherent_diagonality(reduced, max_length=args.max_length)
    else:
        verdict = diagonality(reduced, reduce=False)
    report = create_diagonality_report(args.input, verdict, bool(args.coherent))
    return report, ExitCode.OK if verdict.is_diagonal else ExitCode.PROPERTY_VIOLATED


def cmd_selftest(args: Namespace, token: Optional[CancellationToken] = None) -> Tuple[Document, ExitCode]:
    settings = get_selftest_settings()
    seed = args.seed if args.seed is not None else int(settings.get("seed", 0))
    corpus = get_corpus_path()
    ctx = SuiteContext(
        seed=seed,
        entries=load_index(corpus),
        corpus=corpus,
        settings=settings,
        threads=args.threads or get_thread_count(),
        max_oracle_crossings=min(get_max_oracle_crossings(), 7),
        token=token,
    )
    logger.info("Self-test with seed %d on %d corpus entries", seed, len(ctx.entries))
    results = run_suites(ctx, args.suite)
    report = create_selftest_report(results, seed, UnifiedConfigManager().active_profile)
    if any(result.mismatch for result in results):
        return report, ExitCode.ORACLE_MISMATCH
    if any(not result.passed for result in results):
        return report, ExitCode.PROPERTY_VIOLATED
    return report, ExitCode.OK


COMMANDS = {
    "compute": cmd_kh,
    "reduce": cmd_reduce,
    "check-diagonal": cmd_check_diagonal,
    "selftest": cmd_selftest,
}

__all__ = ["COMMANDS", "cmd_kh", "cmd_reduce", "cmd_check_diagonal", "cmd_selftest", "load_input"]
