import logging
import signal
import sys
from pathlib import Path
from typing import List, Optional

from colorama import init as colorama_init

from ..backend.exceptions import KhovanizerError
from ..backend.output import OutputError, OutputFactory
from ..backend.services.config_services import get_output_settings
from ..backend.services.event_service.cancellation import CancellationTokenSource, OperationCancelledError
from ..backend.services.logging.logging_service import setup_logging
from ..cli.parser import parse_arguments
from ..config import ConfigError
from ..config.unified import UnifiedConfigManager
from .commands import COMMANDS
from .exit_codes import ExitCode

_cli_cancellation_source: Optional[CancellationTokenSource] = None


def _set_cli_cancellation_source(source: Optional[CancellationTokenSource]) -> None:
    global _cli_cancellation_source
    _cli_cancellation_source = source


def signal_handler(sig, frame):
    source = _cli_cancellation_source
    if source is None:
        logging.warning("Interrupted, but no cancellable computation is running.")
        return
    if not source.is_cancelled():
        logging.warning("Interrupted by user (CTRL+C); stopping after the current step.")
        source.cancel()
    else:
        logging.warning("Second CTRL+C recognised. Immediate exit.")
        sys.exit(ExitCode.INPUT_ERROR)


def main(argv: Optional[List[str]] = None) -> int:
    """Parse, configure, dispatch and write; returns the exit code."""
    colorama_init(autoreset=True)
    args = parse_arguments(argv)

    setup_logging(args.verbose, args.log_file, force_color=False if args.no_color else None)

    config_manager = UnifiedConfigManager()
    config_path = Path(args.config).expanduser() if args.config else None
    try:
        config_manager.reload(config_path, profile=args.profile)
    except ConfigError as exc:
        logging.error("Failed to load configuration: %s", exc)
        config_manager.cleanup()
        return ExitCode.INPUT_ERROR

    output_settings = get_output_settings()
    output_format = args.format or output_settings.get("format", "text")
    logging.debug("Active configuration profile: %s", config_manager.active_profile)
    logging.debug("Configuration file: %s", config_manager.config_path)

    cancellation_source = CancellationTokenSource()
    _set_cli_cancellation_source(cancellation_source)
    try:
        writer = OutputFactory.get_output(output_format, config=output_settings)
        document, code = COMMANDS[args.command](args, cancellation_source.token)
        writer(document, args.output)
        if args.output:
            logging.info("Result written to %s (%s)", args.output, output_format)
        return code
    except OperationCancelledError as exc:
        logging.warning("Cancelled: %s", exc)
        return ExitCode.INPUT_ERROR
    except KeyboardInterrupt:
        logging.warning("Forced abort.")
        return ExitCode.INPUT_ERROR
    except KhovanizerError as exc:
        logging.error("%s: %s", type(exc).__name__, exc)
        return ExitCode.INPUT_ERROR
    except (OutputError, ValueError) as exc:
        logging.error("%s", exc)
        return ExitCode.INPUT_ERROR
    except OSError as exc:
        logging.error("I/O error: %s", exc)
        return ExitCode.INPUT_ERROR
    finally:
        _set_cli_cancellation_source(None)
        config_manager.cleanup()


def run() -> None:
    signal.signal(signal.SIGINT, signal_handler)
    signal.signal(signal.SIGTERM, signal_handler)
    sys.exit(int(main()))
