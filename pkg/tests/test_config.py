from __future__ import annotations

from pathlib import Path

import pytest

from khovanizer.backend.services.config_services import (
    get_computation_settings,
    get_corpus_path,
    get_default_ring,
    get_selftest_settings,
    get_thread_count,
)
from khovanizer.config import ConfigError, ConfigValidationError, UnifiedConfigManager
from khovanizer.config.defaults import DEFAULT_CONFIG


def test_default_file_is_created(unified_manager: UnifiedConfigManager) -> None:
    assert unified_manager.config_path.exists()
    assert unified_manager.active_profile == "default"
    config = unified_manager.get_active_profile_config()
    assert config["computation"]["ring"] == "z"
    assert config["selftest"]["seed"] == DEFAULT_CONFIG["selftest"]["seed"]
    assert "profiles" not in config


def test_bundled_profiles_lift_flat_keys(unified_manager: UnifiedConfigManager) -> None:
    assert unified_manager.list_profiles() == ["default", "paranoid", "quick", "rational"]
    rational = unified_manager.resolve_profile("rational").config
    assert rational["computation"]["ring"] == "q"
    assert rational["computation"]["threads"] == DEFAULT_CONFIG["computation"]["threads"]
    quick = unified_manager.resolve_profile("quick").config
    assert quick["selftest"]["generated_tangles"] == 40
    assert quick["selftest"]["seed"] == DEFAULT_CONFIG["selftest"]["seed"]


def test_active_profile_feeds_the_services(unified_manager: UnifiedConfigManager) -> None:
    assert get_default_ring() == "z"
    unified_manager.set_active_profile("paranoid")
    assert get_computation_settings()["oracle"] is True
    assert get_computation_settings()["validate_steps"] is True
    unified_manager.reload(profile="rational")
    assert get_default_ring() == "q"


def test_set_value_persists(unified_manager: UnifiedConfigManager) -> None:
    unified_manager.set_value("computation.threads", 2)
    unified_manager.reload()
    assert get_thread_count() == 2
    unified_manager.set_value("seed", 7, profile="quick")
    assert unified_manager.resolve_profile("quick").config["selftest"]["seed"] == 7
    assert get_selftest_settings()["seed"] == DEFAULT_CONFIG["selftest"]["seed"]


def test_invalid_value_is_rolled_back(unified_manager: UnifiedConfigManager) -> None:
    with pytest.raises(ConfigValidationError):
        unified_manager.set_value("computation.ring", "gf2")
    assert unified_manager.get_raw_config()["computation"]["ring"] == "z"
    with pytest.raises(ConfigValidationError):
        unified_manager.set_value("computation.threads", 0)


def test_profile_lifecycle(unified_manager: UnifiedConfigManager) -> None:
    unified_manager.create_profile("nightly", inherit="quick")
    unified_manager.create_profile("nightly-q", inherit="nightly")
    assert unified_manager.resolve_profile("nightly-q").config["selftest"]["splits"] == 10
    with pytest.raises(ConfigError):
        unified_manager.create_profile("nightly")
    with pytest.raises(ConfigError):
        unified_manager.create_profile("default")
    unified_manager.remove_profile("nightly")
    assert "nightly" not in unified_manager.list_profiles()
    assert unified_manager.get_raw_config()["profiles"]["nightly-q"]["inherit"] == "quick"
    with pytest.raises(ConfigError):
        unified_manager.remove_profile("default")


def test_unknown_profile_is_rejected(unified_manager: UnifiedConfigManager) -> None:
    with pytest.raises(ConfigError):
        unified_manager.set_active_profile("missing")


def test_circular_inheritance_is_rejected(unified_manager: UnifiedConfigManager, config_file: Path) -> None:
    config_file.write_text(
        '[profiles.a]\ninherit = "b"\n\n[profiles.b]\ninherit = "a"\n',
        encoding="utf-8",
    )
    with pytest.raises(ConfigValidationError):
        unified_manager.reload()


def test_unknown_keys_are_rejected(unified_manager: UnifiedConfigManager, config_file: Path) -> None:
    config_file.write_text('[computation]\nring = "z"\nfast = true\n', encoding="utf-8")
    with pytest.raises(ConfigValidationError):
        unified_manager.reload()


def test_corrupt_file_is_backed_up_and_replaced(unified_manager: UnifiedConfigManager, config_file: Path) -> None:
    config_file.write_text("[computation\nring = ", encoding="utf-8")
    unified_manager.reload()
    assert unified_manager.get_raw_config()["computation"] == DEFAULT_CONFIG["computation"]
    backups = [p for p in config_file.parent.iterdir() if "corrupt" in p.name]
    assert backups


def test_corpus_path_precedence(
    unified_manager: UnifiedConfigManager, tmp_path: Path, monkeypatch: pytest.MonkeyPatch
) -> None:
    assert get_corpus_path() is None
    configured = tmp_path / "configured"
    unified_manager.set_value("corpus.path", str(configured))
    assert get_corpus_path() == configured
    monkeypatch.setenv("KH_CORPUS_DIR", str(tmp_path / "env"))
    assert get_corpus_path() == tmp_path / "env"
