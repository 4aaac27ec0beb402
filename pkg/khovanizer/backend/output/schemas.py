"""JSON schemas of every document the tool writes.

Documents are recognised by their ``format`` key; ``validate_document``
checks one against the matching schema.
"""

from typing import Any, Dict

from jsonschema import Draft202012Validator

from ..complex.serialization import COMPLEX_FORMAT
from ..homology.table import HOMOLOGY_FORMAT
from .formatters.base import OutputError

_INT = {"type": "integer"}
_NULLABLE_INT = {"type": ["integer", "null"]}


def _header(format_name: str) -> Dict[str, Any]:
    return {"format": {"const": format_name}, "version": {"const": 1}}


HOMOLOGY_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "properties": {
        **_header(HOMOLOGY_FORMAT),
        "ring": {"enum": ["z", "q"]},
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "i": _INT,
                    "j": _INT,
                    "betti": {"type": "integer", "minimum": 0},
                    "torsion": {"type": "array", "items": {"type": "integer", "minimum": 2}},
                },
                "required": ["i", "j", "betti", "torsion"],
            },
        },
    },
    "required": ["format", "version", "ring", "entries"],
}

COMPLEX_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "properties": {
        **_header(COMPLEX_FORMAT),
        "ring": {"enum": ["z", "q"]},
        "boundary_count": {"type": "integer", "minimum": 0},
        "min_degree": _INT,
        "max_degree": _INT,
        "objects": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "degree": _INT,
                    "index": {"type": "integer", "minimum": 0},
                    "arcs": {
                        "type": "array",
                        "items": {"type": "array", "items": _INT, "minItems": 2, "maxItems": 2},
                    },
                    "loops": {"type": "array", "items": _INT},
                    "oriented": {"type": "boolean"},
                    "q": _INT,
                    "rotation": _NULLABLE_INT,
                    "shifted_rotation": _NULLABLE_INT,
                },
                "required": ["degree", "index", "arcs", "loops", "q"],
            },
        },
        "differentials": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "degree": _INT,
                    "row": _INT,
                    "column": _INT,
                    "terms": {"type": "array", "minItems": 1},
                },
                "required": ["degree", "row", "column", "terms"],
            },
        },
    },
    "required": ["format", "version", "ring", "min_degree", "objects", "differentials"],
}

KH_REPORT_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "properties": {
        **_header("khovanizer.kh_report"),
        "diagram": {
            "type": "object",
            "properties": {
                "name": {"type": ["string", "null"]},
                "crossings": {"type": "integer", "minimum": 0},
                "positive": {"type": "integer", "minimum": 0},
                "negative": {"type": "integer", "minimum": 0},
                "alternating": {"type": "boolean"},
            },
            "required": ["crossings", "positive", "negative"],
        },
        "homology": HOMOLOGY_SCHEMA,
        "two_line": _NULLABLE_INT,
        "jones": {"type": ["string", "null"]},
        "oracle": {
            "type": "object",
            "properties": {
                "status": {"enum": ["off", "skipped", "agrees", "mismatch"]},
                "homology": {"anyOf": [{"type": "null"}, HOMOLOGY_SCHEMA]},
            },
            "required": ["status"],
        },
    },
    "required": ["format", "version", "diagram", "homology", "oracle"],
}

DIAGONALITY_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "properties": {
        **_header("khovanizer.diagonality"),
        "input": {"type": "string"},
        "coherent_check": {"type": "boolean"},
        "verdict": {
            "type": "object",
            "properties": {
                "status": {"enum": ["diagonal", "not_diagonal", "not_reduced"]},
                "constant": _NULLABLE_INT,
                "witness": {"type": "array", "minItems": 2, "maxItems": 2},
                "word": {"type": "array", "items": {"type": "string"}},
                "expected": _NULLABLE_INT,
            },
            "required": ["status", "constant"],
        },
    },
    "required": ["format", "version", "input", "verdict"],
}

SELFTEST_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "properties": {
        **_header("khovanizer.selftest"),
        "seed": _INT,
        "profile": {"type": "string"},
        "passed": {"type": "boolean"},
        "suites": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "name": {"type": "string"},
                    "passed": {"type": "boolean"},
                    "cases": {"type": "integer", "minimum": 0},
                    "skipped": {"type": "integer", "minimum": 0},
                    "failures": {"type": "array", "items": {"type": "string"}},
                },
                "required": ["name", "passed", "cases", "failures"],
            },
        },
    },
    "required": ["format", "version", "seed", "passed", "suites"],
}

SCHEMAS: Dict[str, Dict[str, Any]] = {
    HOMOLOGY_FORMAT: HOMOLOGY_SCHEMA,
    COMPLEX_FORMAT: COMPLEX_SCHEMA,
    "khovanizer.kh_report": KH_REPORT_SCHEMA,
    "khovanizer.diagonality": DIAGONALITY_SCHEMA,
    "khovanizer.selftest": SELFTEST_SCHEMA,
}

_VALIDATORS = {name: Draft202012Validator(schema) for name, schema in SCHEMAS.items()}


def validate_document(document: Dict[str, Any]) -> None:
    """Raise ``OutputError`` unless ``document`` matches the schema named by its format."""
    validator = _VALIDATORS.get(document.get("format", ""))
    if validator is None:
        raise OutputError(f"Unknown document format {document.get('format')!r}")
    errors = sorted(validator.iter_errors(document), key=lambda e: list(e.path))
    if errors:
        first = errors[0]
        location = "/".join(str(part) for part in first.path) or "<root>"
        raise OutputError(f"{document['format']} document invalid at {location}: {first.message}")


__all__ = ["SCHEMAS", "validate_document"]
