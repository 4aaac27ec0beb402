from __future__ import annotations

import logging
import threading
from copy import deepcopy
from pathlib import Path
from typing import Any, ClassVar, Dict, List, Optional

from .compat import tomllib
from .defaults import DEFAULT_CONFIG, DEFAULT_CONFIG_TOML
from .exceptions import ConfigError, ConfigIOError, ConfigValidationError
from .profile_service import ProfileResolutionResult, ProfileService
from .storage import ConfigStorage
from .utils import _deep_merge
from .validation import _validator

logger = logging.getLogger(__name__)


class UnifiedConfigManager:
    """Process-wide configuration: the TOML file, its profiles and the active one."""

    _instance: ClassVar[Optional["UnifiedConfigManager"]] = None
    _lock: ClassVar[threading.RLock] = threading.RLock()

    def __new__(cls) -> "UnifiedConfigManager":
        with cls._lock:
            if cls._instance is None:
                cls._instance = super().__new__(cls)
                cls._instance._initialized = False
        return cls._instance

    def __init__(self) -> None:
        if getattr(self, "_initialized", False):
            return
        self.storage = ConfigStorage()
        self._raw_config: Dict[str, Any] = deepcopy(DEFAULT_CONFIG)
        self._active_profile = "default"
        self._profile_cache: Dict[str, ProfileResolutionResult] = {}
        self._profiles = ProfileService()
        self._load_or_create()
        self._initialized = True

    @property
    def config_path(self) -> Path:
        return self.storage.path

    @property
    def active_profile(self) -> str:
        return self._active_profile

    def _load_or_create(self) -> None:
        self.storage.ensure_directory()
        if not self.storage.path.exists():
            logger.info("Creating default configuration at %s", self.storage.path)
            self.storage.write_text(DEFAULT_CONFIG_TOML)
            self._raw_config = deepcopy(DEFAULT_CONFIG)
            return
        try:
            loaded = self.storage.read_config()
        except tomllib.TOMLDecodeError as exc:
            logger.error("Configuration file %s is not valid TOML: %s", self.storage.path, exc)
            backup_path = self.storage.backup_existing_config(suffix="corrupt")
            if backup_path:
                logger.error("Corrupt configuration backed up to %s", backup_path)
            self._raw_config = deepcopy(DEFAULT_CONFIG)
            self.storage.write_text(DEFAULT_CONFIG_TOML)
            logger.info("Restored default configuration")
            return
        except OSError as exc:
            raise ConfigIOError(f"Unable to read configuration: {exc}") from exc
        merged = _deep_merge(DEFAULT_CONFIG, loaded)
        self._validate(merged)
        self._raw_config = merged

    def _validate(self, data: Dict[str, Any]) -> None:
        errors = sorted(_validator.iter_errors(data), key=lambda e: list(e.path))
        if errors:
            first = errors[0]
            location = ".".join(str(part) for part in first.path)
            raise ConfigValidationError(f"{location}: {first.message}" if location else first.message)
        self._profiles.validate_profiles(data)

    def reload(self, config_path: Optional[Path] = None, profile: Optional[str] = None) -> None:
        with self._lock:
            if config_path is not None:
                self.storage.set_path(Path(config_path))
            self._profile_cache.clear()
            self._load_or_create()
            self._active_profile = "default"
            if profile:
                self.set_active_profile(profile)

    def set_active_profile(self, profile: str) -> None:
        resolved = self.resolve_profile(profile)
        self._validate(resolved.config)
        self._active_profile = resolved.name
        logger.debug("Active configuration profile: %s", resolved.name)

    def resolve_profile(self, profile: Optional[str] = None) -> ProfileResolutionResult:
        with self._lock:
            return self._profiles.resolve(profile or self._active_profile, self._raw_config, self._profile_cache)

    def get_active_profile_config(self) -> Dict[str, Any]:
        return deepcopy(self.resolve_profile(self._active_profile).config)

    def get_raw_config(self) -> Dict[str, Any]:
        return deepcopy(self._raw_config)

    def _persist(self) -> None:
        self._validate(self._raw_config)
        self.storage.write_config(self._raw_config)
        self._profile_cache.clear()

    def set_value(self, path: str, value: Any, profile: Optional[str] = None) -> None:
        """Set ``section.key`` (``None`` deletes it) in the defaults or in a profile."""
        parts = path.split(".")
        with self._lock:
            before = deepcopy(self._raw_config)
            if profile and profile != "default":
                if profile not in self._raw_config.get("profiles", {}):
                    raise ConfigError(f"Profile '{profile}' does not exist")
                cursor = self._raw_config["profiles"][profile]
            else:
                cursor = self._raw_config
            for part in parts[:-1]:
                cursor = cursor.setdefault(part, {})
                if not isinstance(cursor, dict):
                    raise ConfigError(f"Configuration path '{path}' is not a table")
            if value is None:
                if cursor.pop(parts[-1], None) is None:
                    return
            elif cursor.get(parts[-1]) == value:
                return
            else:
                cursor[parts[-1]] = value
            try:
                self._persist()
            except ConfigValidationError:
                self._raw_config = before
                raise

    def create_profile(self, name: str, inherit: str = "default") -> None:
        if not name or name == "default":
            raise ConfigError("Invalid profile name supplied")
        with self._lock:
            profiles = self._raw_config.setdefault("profiles", {})
            if name in profiles:
                raise ConfigError(f"Profile '{name}' already exists")
            if inherit != "default" and inherit not in profiles:
                raise ConfigError(f"Profile '{inherit}' does not exist")
            profiles[name] = {"inherit": inherit}
            self._persist()

    def remove_profile(self, name: str) -> None:
        if name == "default":
            raise ConfigError("The default profile cannot be deleted")
        with self._lock:
            profiles = self._raw_config.get("profiles", {})
            if name not in profiles:
                raise ConfigError(f"Profile '{name}' does not exist")
            parent = profiles.pop(name).get("inherit", "default")
            for profile in profiles.values():
                if profile.get("inherit") == name:
                    profile["inherit"] = parent
            if self._active_profile == name:
                self._active_profile = "default"
            self._persist()

    def list_profiles(self) -> List[str]:
        with self._lock:
            return ["default", *sorted(self._raw_config.get("profiles", {}))]

    def cleanup(self) -> None:
        with self._lock:
            self._profile_cache.clear()
            self._initialized = False
            type(self)._instance = None


__all__ = ["UnifiedConfigManager", "ProfileResolutionResult"]
