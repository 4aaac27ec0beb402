import logging
import sys
from pathlib import Path

from khovanizer.backend.services.logging import setup_logging
from khovanizer.backend.services.logging.formatters import ColorFormatter
from khovanizer.utils.color_support import color_support


def test_setup_logging_force_color_true(restore_logging):
    setup_logging(force_color=True, preserve_existing_handlers=True)
    assert color_support.supports_color() is True


def test_setup_logging_force_color_false(restore_logging):
    setup_logging(force_color=False, preserve_existing_handlers=True)
    assert color_support.supports_color() is False


def test_setup_logging_resets_force_color_when_unspecified(restore_logging):
    baseline = color_support.supports_color()
    setup_logging(force_color=not baseline, preserve_existing_handlers=True)
    assert color_support.supports_color() is (not baseline)

    setup_logging(preserve_existing_handlers=True)
    assert color_support.supports_color() is baseline


def test_verbose_switches_to_debug(restore_logging):
    setup_logging(verbose=True, preserve_existing_handlers=True)
    assert restore_logging.level == logging.DEBUG
    setup_logging(preserve_existing_handlers=True)
    assert restore_logging.level == logging.INFO
    assert logging.getLogger("sympy").level == logging.WARNING


def test_console_goes_to_stderr(restore_logging):
    setup_logging()
    consoles = [h for h in restore_logging.handlers if isinstance(h, logging.StreamHandler)]
    assert len(consoles) == 1
    assert consoles[0].stream is sys.stderr
    assert isinstance(consoles[0].formatter, ColorFormatter)


def test_setup_logging_preserves_handlers_when_requested(restore_logging):
    sentinel = logging.NullHandler()
    restore_logging.addHandler(sentinel)
    setup_logging(preserve_existing_handlers=True)
    assert sentinel in restore_logging.handlers


def test_setup_logging_does_not_override_existing_console_formatter(restore_logging):
    handler = logging.StreamHandler(sys.stdout)
    formatter = logging.Formatter("%(levelname)s: %(message)s [custom]")
    handler.setFormatter(formatter)
    restore_logging.addHandler(handler)
    setup_logging(preserve_existing_handlers=True)
    assert handler in restore_logging.handlers
    assert handler.formatter is formatter


def test_log_file_is_written_without_colour(restore_logging, tmp_path: Path):
    log_file = tmp_path / "logs" / "kh.log"
    setup_logging(log_file=str(log_file), force_color=True)
    logging.getLogger("khovanizer.test").info("reduced to %d objects", 4)
    for handler in restore_logging.handlers:
        handler.flush()
    text = log_file.read_text(encoding="utf-8")
    assert "khovanizer.test: reduced to 4 objects" in text
    assert "\x1b[" not in text


def test_color_formatter_leaves_plain_text_when_colour_is_off(restore_logging):
    color_support.set_force_color(False)
    record = logging.LogRecord("x", logging.WARNING, __file__, 1, "careful", None, None)
    assert ColorFormatter().format(record).endswith("[WARNING] careful")
