"""Shared plumbing for the document writers."""

import logging
import shutil
import sys
import tempfile
from pathlib import Path
from typing import Callable, Optional, TextIO

logger = logging.getLogger(__name__)


class OutputError(Exception):
    """A document could not be serialised or written."""


def write_atomic(output_file: Optional[str], render: Callable[[TextIO], None]) -> None:
    """Render to stdout, or to a temporary file that is then moved over ``output_file``."""
    if output_file is None or output_file == "-":
        render(sys.stdout)
        sys.stdout.flush()
        return
    target = Path(output_file)
    target.parent.mkdir(parents=True, exist_ok=True)
    with tempfile.NamedTemporaryFile("w", delete=False, dir=target.parent, encoding="utf-8") as temp_file:
        temp_path = Path(temp_file.name)
        try:
            render(temp_file)
        except BaseException:
            temp_file.close()
            temp_path.unlink(missing_ok=True)
            raise
    shutil.move(str(temp_path), str(target))
    logger.debug("Wrote %s", target)


__all__ = ["OutputError", "write_atomic"]
