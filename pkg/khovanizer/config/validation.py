from __future__ import annotations

from jsonschema import Draft202012Validator, ValidationError

from .defaults import CONFIG_SCHEMA

_validator = Draft202012Validator(CONFIG_SCHEMA)

__all__ = ["_validator", "ValidationError"]
