from __future__ import annotations

from typing import Any, Dict

from .compat import tomllib

DEFAULT_CONFIG_TOML = """\
config_version = "1.0"

[computation]
# "z" (integers, torsion reported) or "q" (rationals)
ring = "z"
# cross-check every computation against the cube of resolutions
oracle = false
max_oracle_crossings = 8
threads = 4
validate_steps = false

[corpus]
# empty means the bundled corpus (KH_CORPUS_DIR still wins)
path = ""

[selftest]
seed = 20240601
generated_tangles = 200
max_crossings = 6
max_boundary = 8
splits = 50
pdc_cases = 100
composites = 1000

[output]
format = "text"
pretty_print = true

[profiles.quick]
inherit = "default"
generated_tangles = 40
splits = 10
pdc_cases = 20
composites = 200

[profiles.rational]
inherit = "default"
ring = "q"

[profiles.paranoid]
inherit = "default"
oracle = true
validate_steps = true
"""

DEFAULT_CONFIG: Dict[str, Any] = tomllib.loads(DEFAULT_CONFIG_TOML)

_POSITIVE = {"type": "integer", "minimum": 1}

CONFIG_SCHEMA: Dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "config_version": {"type": "string"},
        "computation": {
            "type": "object",
            "properties": {
                "ring": {"enum": ["z", "q"]},
                "oracle": {"type": "boolean"},
                "max_oracle_crossings": {"type": "integer", "minimum": 0},
                "threads": _POSITIVE,
                "validate_steps": {"type": "boolean"},
            },
            "required": ["ring", "oracle", "threads"],
            "additionalProperties": False,
        },
        "corpus": {
            "type": "object",
            "properties": {"path": {"type": "string"}},
            "additionalProperties": False,
        },
        "selftest": {
            "type": "object",
            "properties": {
                "seed": {"type": "integer"},
                "generated_tangles": _POSITIVE,
                "max_crossings": _POSITIVE,
                "max_boundary": {"type": "integer", "minimum": 2},
                "splits": _POSITIVE,
                "pdc_cases": _POSITIVE,
                "composites": _POSITIVE,
            },
            "required": ["seed"],
            "additionalProperties": False,
        },
        "output": {
            "type": "object",
            "properties": {
                "format": {"enum": ["json", "yaml", "text"]},
                "pretty_print": {"type": "boolean"},
            },
            "required": ["format"],
            "additionalProperties": False,
        },
        "profiles": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "properties": {"inherit": {"type": "string"}},
            },
        },
    },
    "required": ["config_version", "computation", "corpus", "selftest", "output"],
    "additionalProperties": False,
}

__all__ = ["DEFAULT_CONFIG_TOML", "DEFAULT_CONFIG", "CONFIG_SCHEMA"]
