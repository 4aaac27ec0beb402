import json
import logging
from typing import Any, Dict, Optional

from ...schemas import validate_document
from ..base import OutputError, write_atomic

logger = logging.getLogger(__name__)


def output_to_json(
    data: Dict[str, Any],
    output_file: Optional[str] = None,
    config: Optional[Dict[str, Any]] = None,
) -> None:
    """Validate ``data`` against its published schema and write it as JSON.

    Keys keep their insertion order so identical runs give identical bytes.
    """
    pretty_print = config.get("pretty_print", True) if config else True
    validate_document(data)
    try:
        text = json.dumps(data, ensure_ascii=False, indent=2 if pretty_print else None)
    except (TypeError, ValueError) as e:
        raise OutputError(f"Document is not JSON-serialisable: {e}") from e

    def render(handle: Any) -> None:
        handle.write(text)
        handle.write("\n")

    try:
        write_atomic(output_file, render)
    except OSError as e:
        logger.error("Error writing JSON output to %s: %s", output_file, e)
        raise
