import logging
from typing import Any, Dict, Optional

import yaml

from ...schemas import validate_document
from ..base import OutputError, write_atomic

logger = logging.getLogger(__name__)

DEFAULT_OPTIONS: Dict[str, Any] = {
    "allow_unicode": True,
    "sort_keys": False,
    "default_flow_style": None,
    "width": 4096,
}


def output_to_yaml(
    data: Dict[str, Any],
    output_file: Optional[str] = None,
    config: Optional[Dict[str, Any]] = None,
) -> None:
    """The same documents as the JSON writer, in YAML block style with flow-style leaves."""
    options = dict(DEFAULT_OPTIONS)
    if config:
        options.update({k: v for k, v in config.items() if k in DEFAULT_OPTIONS})
    validate_document(data)
    try:
        text = yaml.safe_dump(data, **options)
    except yaml.YAMLError as e:
        raise OutputError(f"Document is not YAML-compatible: {e}") from e
    try:
        write_atomic(output_file, lambda handle: handle.write(text))
    except OSError as e:
        logger.error("Error writing YAML output to %s: %s", output_file, e)
        raise
