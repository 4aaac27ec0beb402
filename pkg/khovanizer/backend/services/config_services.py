"""Typed access to the active configuration profile."""

from __future__ import annotations

import os
from pathlib import Path
from typing import Any, Dict, Optional

from ...config.unified import UnifiedConfigManager
from ..tangle.corpus import CORPUS_ENV


def _manager() -> UnifiedConfigManager:
    return UnifiedConfigManager()


def _current_config() -> Dict[str, Any]:
    return _manager().get_active_profile_config()


def get_computation_settings() -> Dict[str, Any]:
    return _current_config().get("computation", {})


def get_selftest_settings() -> Dict[str, Any]:
    return _current_config().get("selftest", {})


def get_output_settings() -> Dict[str, Any]:
    return _current_config().get("output", {})


def get_default_ring() -> str:
    return str(get_computation_settings().get("ring", "z"))


def get_thread_count() -> int:
    return max(1, int(get_computation_settings().get("threads", 4)))


def get_max_oracle_crossings() -> int:
    return int(get_computation_settings().get("max_oracle_crossings", 8))


def get_corpus_path() -> Optional[Path]:
    """``KH_CORPUS_DIR`` beats ``[corpus] path``; ``None`` means the bundled corpus."""
    env = os.environ.get(CORPUS_ENV)
    if env:
        return Path(env).expanduser()
    configured = str(_current_config().get("corpus", {}).get("path", "") or "")
    return Path(configured).expanduser() if configured else None


__all__ = [
    "get_computation_settings",
    "get_selftest_settings",
    "get_output_settings",
    "get_default_ring",
    "get_thread_count",
    "get_max_oracle_crossings",
    "get_corpus_path",
]
