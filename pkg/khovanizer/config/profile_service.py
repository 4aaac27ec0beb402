from __future__ import annotations

from copy import deepcopy
from dataclasses import dataclass
from typing import Any, Dict, MutableMapping, Set

from .exceptions import ConfigError, ConfigValidationError
from .utils import _deep_merge

# profiles may set these keys without their section header
_SECTION_KEYS: Dict[str, Set[str]] = {
    "computation": {"ring", "oracle", "max_oracle_crossings", "threads", "validate_steps"},
    "selftest": {
        "seed",
        "generated_tangles",
        "max_crossings",
        "max_boundary",
        "splits",
        "pdc_cases",
        "composites",
    },
    "output": {"format", "pretty_print"},
}


@dataclass(frozen=True)
class ProfileResolutionResult:
    name: str
    config: Dict[str, Any]


def _lift_flat_keys(overrides: Dict[str, Any]) -> Dict[str, Any]:
    lifted: Dict[str, Any] = {}
    for key, value in overrides.items():
        section = next((s for s, keys in _SECTION_KEYS.items() if key in keys), None)
        if section is None or isinstance(value, dict):
            lifted[key] = deepcopy(value)
        else:
            lifted.setdefault(section, {})[key] = deepcopy(value)
    return lifted


class ProfileService:
    """Validation and resolution of ``[profiles.<name>]`` tables."""

    def validate_profiles(self, data: Dict[str, Any]) -> None:
        profiles = data.get("profiles", {})
        for name, profile in profiles.items():
            if name == "default":
                raise ConfigValidationError("A profile may not be called 'default'")
            inherit = profile.get("inherit", "default")
            if inherit != "default" and inherit not in profiles:
                raise ConfigValidationError(f"Profile '{name}' inherits from unknown profile '{inherit}'")
        for name in profiles:
            self._detect_cycle(name, profiles)

    def _detect_cycle(self, start: str, profiles: Dict[str, Dict[str, Any]]) -> None:
        seen: Set[str] = set()
        current = start
        while current != "default":
            if current in seen:
                raise ConfigValidationError(f"Circular inheritance detected at profile '{current}'")
            seen.add(current)
            current = profiles[current].get("inherit", "default")

    def resolve(
        self,
        profile_name: str,
        raw_config: Dict[str, Any],
        cache: MutableMapping[str, ProfileResolutionResult],
    ) -> ProfileResolutionResult:
        if profile_name in cache:
            return cache[profile_name]
        if profile_name == "default":
            base = {k: deepcopy(v) for k, v in raw_config.items() if k != "profiles"}
            result = ProfileResolutionResult("default", base)
        else:
            profile_data = raw_config.get("profiles", {}).get(profile_name)
            if profile_data is None:
                raise ConfigError(f"Profile '{profile_name}' is not defined")
            parent = self.resolve(profile_data.get("inherit", "default"), raw_config, cache)
            overrides = _lift_flat_keys({k: v for k, v in profile_data.items() if k != "inherit"})
            result = ProfileResolutionResult(profile_name, _deep_merge(parent.config, overrides))
        cache[profile_name] = result
        return result


__all__ = ["ProfileService", "ProfileResolutionResult"]
