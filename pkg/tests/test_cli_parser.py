import importlib
import logging
import sys

import pytest

from khovanizer.cli.parser import parse_arguments


def reload_module(module_name: str):
    if module_name in sys.modules:
        del sys.modules[module_name]
    return importlib.import_module(module_name)


def test_cli_parser_import_does_not_clear_existing_root_handlers():
    root_logger = logging.getLogger()
    sentinel_handler = logging.NullHandler()
    root_logger.addHandler(sentinel_handler)
    try:
        before_handlers = list(root_logger.handlers)
        reload_module("khovanizer.cli.parser")
        assert list(root_logger.handlers) == before_handlers
    finally:
        root_logger.removeHandler(sentinel_handler)


def test_compute_defaults_defer_to_configuration():
    args = parse_arguments(["compute", "borromean"])
    assert args.command == "compute"
    assert args.input == "borromean"
    assert args.ring is None
    assert args.oracle is None
    assert args.format is None


def test_json_shorthand_sets_the_format():
    args = parse_arguments(["reduce", "twist", "--json", "-o", "out.json"])
    assert args.format == "json"
    assert args.output == "out.json"


def test_json_conflicts_with_another_format():
    with pytest.raises(SystemExit):
        parse_arguments(["compute", "hopf", "--json", "--format", "yaml"])


def test_check_diagonal_options():
    args = parse_arguments(["check-diagonal", "omega3", "--coherent", "--max-length", "2"])
    assert args.coherent is True
    assert args.max_length == 2
    with pytest.raises(SystemExit):
        parse_arguments(["check-diagonal", "omega3", "--max-length", "-1"])


def test_selftest_suites_accumulate():
    args = parse_arguments(["selftest", "--suite", "two-line", "--suite", "oracle-equivalence", "--seed", "7"])
    assert args.suite == ["two-line", "oracle-equivalence"]
    assert args.seed == 7
    with pytest.raises(SystemExit):
        parse_arguments(["selftest", "--threads", "0"])


def test_a_command_is_required():
    with pytest.raises(SystemExit):
        parse_arguments([])


def test_unknown_ring_is_rejected():
    with pytest.raises(SystemExit):
        parse_arguments(["compute", "hopf", "--ring", "gf2"])
