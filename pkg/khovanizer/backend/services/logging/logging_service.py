import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

from ....utils.color_support import color_support
from .formatters.color_formatter import ColorFormatter

FILE_FORMAT = '%(asctime)s [%(levelname)s] %(name)s: %(message)s'

# reductions log one line per attachment at DEBUG; keep sympy quiet
QUIET_LOGGERS = ('sympy', 'matplotlib')


def setup_logging(
    verbose: bool = False,
    log_file: Optional[str] = None,
    max_bytes: int = 10 * 1024 * 1024,
    backup_count: int = 5,
    force_color: Optional[bool] = None,
    preserve_existing_handlers: bool = False,
) -> None:
    """Configure the root logger for the command-line tool.

    Args:
        verbose: DEBUG instead of INFO, including per-attachment reduction counts.
        log_file: Optional rotating log file, written without colours.
        max_bytes: Size at which the log file rotates.
        backup_count: Rotated files to keep.
        force_color: Force (True) or disable (False) coloured console output.
        preserve_existing_handlers: Keep handlers installed by the caller (pytest's
            ``caplog`` for instance).
    """
    color_support.set_force_color(force_color)

    root_logger = logging.getLogger()
    root_logger.setLevel(logging.DEBUG if verbose else logging.INFO)
    for name in QUIET_LOGGERS:
        logging.getLogger(name).setLevel(logging.WARNING)

    if not preserve_existing_handlers:
        root_logger.handlers.clear()

    console_present = any(
        isinstance(handler, logging.StreamHandler)
        and getattr(handler, 'stream', None) in (sys.stdout, sys.stderr)
        for handler in root_logger.handlers
    )
    if not console_present:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(ColorFormatter())
        root_logger.addHandler(console_handler)

    if log_file:
        try:
            log_path = Path(log_file)
            log_path.parent.mkdir(parents=True, exist_ok=True)
            file_handler = RotatingFileHandler(
                log_path, maxBytes=max_bytes, backupCount=backup_count, encoding='utf-8'
            )
            file_handler.setFormatter(logging.Formatter(FILE_FORMAT, datefmt='%Y-%m-%d %H:%M:%S'))
            root_logger.addHandler(file_handler)
            logging.debug(color_support.success(f"Logging to {log_file}"))
        except OSError as e:
            logging.error(color_support.error(f"Failed to open log file {log_file}: {e}"))

    logging.debug(
        color_support.info(
            f"Log level {'DEBUG' if verbose else 'INFO'}, colour "
            f"{'on' if color_support.supports_color() else 'off'}"
            f"{' (forced)' if force_color is not None else ''}"
        )
    )
