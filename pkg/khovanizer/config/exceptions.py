from __future__ import annotations

from ..backend.exceptions import KhovanizerError


class ConfigError(KhovanizerError):
    """Base exception for configuration errors."""


class ConfigValidationError(ConfigError):
    """The configuration does not match the schema or has broken profiles."""


class ConfigIOError(ConfigError):
    """The configuration file could not be read or written."""


__all__ = ["ConfigError", "ConfigValidationError", "ConfigIOError"]
