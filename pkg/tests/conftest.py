from __future__ import annotations

import logging
from pathlib import Path
from typing import Iterator

import pytest

from khovanizer.config import UnifiedConfigManager
from khovanizer.utils.color_support import color_support


def pytest_configure(config: pytest.Config) -> None:
    config.addinivalue_line("markers", "slow: runs a whole self-test suite or a large diagram")


@pytest.fixture
def unified_manager(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Iterator[UnifiedConfigManager]:
    base = tmp_path / "config_env"
    monkeypatch.setenv("APPDATA", str(base / "appdata"))
    monkeypatch.setenv("HOME", str(base / "home"))
    monkeypatch.delenv("KH_CORPUS_DIR", raising=False)

    UnifiedConfigManager._instance = None
    manager = UnifiedConfigManager()
    manager.reload(config_path=base / "config" / "config.toml")

    try:
        yield manager
    finally:
        manager.cleanup()


@pytest.fixture
def config_file(unified_manager: UnifiedConfigManager) -> Path:
    return unified_manager.config_path


@pytest.fixture
def restore_logging() -> Iterator[logging.Logger]:
    root = logging.getLogger()
    handlers = list(root.handlers)
    level = root.level
    force_color = getattr(color_support, "_force_color", None)
    try:
        yield root
    finally:
        for handler in set(root.handlers) - set(handlers):
            handler.close()
        root.handlers[:] = handlers
        root.setLevel(level)
        color_support.set_force_color(force_color)
